#ifndef JNP_SEARCH_HPP
#define JNP_SEARCH_HPP

#include "jnp/catalog.hpp"

namespace jnp {

enum class SearchLaw { Jnp, Novikov, Dnp };

SearchLaw parse_search_law(const std::string& name);

/// One enumerated second product that passed the law filter.
struct SearchSolution {
    Matrix op;            // the generating operator D with 1 o e_j = D e_j
    StructureTensor circ; // reconstructed product a o b = a . D(b)
    InvariantProfile profile;
};

struct SearchBucket {
    InvariantProfile profile;
    std::vector<std::size_t> members; // indices into solutions
    std::size_t representative;       // member with the lexicographically smallest tensor
};

struct SearchResult {
    std::uint64_t candidates = 0;
    std::vector<SearchSolution> solutions; // in enumeration order
    std::vector<SearchBucket> buckets;     // sorted by profile
};

/// Scans all operators D over F_p in row-major order, reconstructs the
/// second product a o b := a . D(b) (the shape every compatible product is
/// forced into by the unit), and keeps those passing the chosen law.  For
/// the Novikov-only filter the scan still runs over this differential shape.
SearchResult enumerate_jnp(const Algebra& base, SearchLaw law = SearchLaw::Jnp,
                           std::uint64_t budget = 1u << 24);

/// Compares the D-parametrized enumeration against the unreduced scan of
/// all p^(n^3) tensors; true when both yield the same set of products
/// passing the full law.  Feasible only for tiny cases.
bool cross_check_reduction(const Algebra& base, std::uint64_t budget = 1u << 24);

} // namespace jnp

#endif
