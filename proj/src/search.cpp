#include "jnp/search.hpp"

#include <algorithm>
#include <map>

namespace jnp {

namespace {

void require_base(const Algebra& base) {
    if (!base.field.is_prime())
        throw ConstraintViolation("enumeration runs over a prime field");
    Verdict v = check_unital_comm_assoc(base);
    if (!v.pass)
        throw ConstraintViolation("base fails law '" + v.law + "'");
}

std::uint64_t checked_power(std::uint64_t base, std::size_t exp, std::uint64_t budget) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (total > budget / base) throw BudgetExceeded("enumeration exceeds the budget");
        total *= base;
    }
    return total;
}

StructureTensor circ_from_operator(const Algebra& base, const Matrix& D) {
    StructureTensor t(base.field, base.dim);
    for (std::size_t i = 0; i < base.dim; ++i)
        for (std::size_t j = 0; j < base.dim; ++j) {
            Vec prod =
                multiply(base, Product::Dot, unit_vec(base.field, base.dim, i), D.column(j));
            for (std::size_t k = 0; k < base.dim; ++k) t.at(i, j, k) = prod[k];
        }
    return t;
}

std::vector<std::uint64_t> flatten_residues(const StructureTensor& t) {
    std::vector<std::uint64_t> out;
    out.reserve(t.dim() * t.dim() * t.dim());
    for (std::size_t i = 0; i < t.dim(); ++i)
        for (std::size_t j = 0; j < t.dim(); ++j)
            for (std::size_t k = 0; k < t.dim(); ++k) out.push_back(t.at(i, j, k).residue());
    return out;
}

bool passes(const Algebra& candidate, SearchLaw law) {
    switch (law) {
        case SearchLaw::Jnp: return check_jnp(candidate).pass;
        case SearchLaw::Novikov: return check_novikov(candidate).pass;
        case SearchLaw::Dnp: return check_dnp(candidate).pass;
    }
    return false;
}

} // namespace

SearchLaw parse_search_law(const std::string& name) {
    if (name == "jnp") return SearchLaw::Jnp;
    if (name == "novikov") return SearchLaw::Novikov;
    if (name == "dnp") return SearchLaw::Dnp;
    throw Error("unknown search law '" + name + "'");
}

SearchResult enumerate_jnp(const Algebra& base, SearchLaw law, std::uint64_t budget) {
    require_base(base);
    std::size_t n = base.dim;
    std::uint64_t p = base.field.p();
    std::uint64_t total = checked_power(p, n * n, budget);

    SearchResult result;
    result.candidates = total;
    Algebra candidate = base;
    std::vector<std::uint64_t> digits(n * n, 0);
    for (std::uint64_t code = 0; code < total; ++code) {
        // row-major odometer: the last entry of D moves fastest
        std::uint64_t c = code;
        for (std::size_t pos = n * n; pos-- > 0;) {
            digits[pos] = c % p;
            c /= p;
        }
        Matrix D(base.field, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                D.at(i, j) = Scalar::from_int(base.field,
                                              static_cast<long long>(digits[i * n + j]));
        StructureTensor t = circ_from_operator(base, D);
        candidate.circ = t;
        candidate.circ_orientation = Orientation::Left;
        if (!passes(candidate, law)) continue;
        result.solutions.push_back({D, t, invariant_profile(candidate)});
    }

    std::map<InvariantProfile, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < result.solutions.size(); ++i)
        groups[result.solutions[i].profile].push_back(i);
    for (const auto& [profile, members] : groups) {
        std::size_t repr = members.front();
        auto key = flatten_residues(result.solutions[repr].circ);
        for (std::size_t m : members) {
            auto cand = flatten_residues(result.solutions[m].circ);
            if (cand < key) {
                key = std::move(cand);
                repr = m;
            }
        }
        result.buckets.push_back({profile, members, repr});
    }
    return result;
}

bool cross_check_reduction(const Algebra& base, std::uint64_t budget) {
    require_base(base);
    std::size_t n = base.dim;
    std::uint64_t p = base.field.p();
    std::uint64_t total = checked_power(p, n * n * n, budget);

    std::vector<std::vector<std::uint64_t>> full;
    Algebra candidate = base;
    std::vector<std::uint64_t> digits(n * n * n, 0);
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        for (std::size_t pos = n * n * n; pos-- > 0;) {
            digits[pos] = c % p;
            c /= p;
        }
        StructureTensor t(base.field, n);
        std::size_t pos = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    t.at(i, j, k) =
                        Scalar::from_int(base.field, static_cast<long long>(digits[pos++]));
        candidate.circ = t;
        candidate.circ_orientation = Orientation::Left;
        if (check_jnp(candidate).pass) full.push_back(flatten_residues(t));
    }
    std::sort(full.begin(), full.end());

    SearchResult reduced = enumerate_jnp(base, SearchLaw::Jnp, budget);
    std::vector<std::vector<std::uint64_t>> via_operator;
    via_operator.reserve(reduced.solutions.size());
    for (const SearchSolution& s : reduced.solutions)
        via_operator.push_back(flatten_residues(s.circ));
    std::sort(via_operator.begin(), via_operator.end());

    return full == via_operator;
}

} // namespace jnp
