#ifndef JNP_CATALOG_HPP
#define JNP_CATALOG_HPP

#include <array>
#include <functional>
#include <map>

#include "jnp/laws.hpp"

namespace jnp {

/// Raw parameter assignment as given on the command line or in a plan file;
/// each entry parses the values it needs.  Unset scalar parameters are 0.
using Assignment = std::map<std::string, std::string>;

struct ParamSpec {
    std::string name;
    std::string doc;
};

struct Emission {
    Algebra algebra; // named operators travel in algebra.maps
    std::optional<Matrix> form;
};

/// One parametric family: a classification table row, a worked example, or a
/// base commutative algebra.  Emission validates the field requirement and
/// the parameter constraints and produces structure constants; `law` names
/// the law every emitted instance satisfies.
struct CatalogEntry {
    std::string name;
    std::string summary;
    std::string law;
    std::string field_note;
    std::vector<ParamSpec> params;
    std::function<Emission(const Field&, const Assignment&)> emit;
};

const std::vector<CatalogEntry>& catalog_entries();
const CatalogEntry& catalog_entry(const std::string& name);
Emission catalog_emit(const std::string& name, const Field& f, const Assignment& asg);

/// Runs the entry's asserted law checker on an emitted instance.
Verdict verify_emission(const CatalogEntry& entry, const Emission& em);

struct VerifyCase {
    Field field = Field::rational();
    Assignment assignment;
};

struct VerifyPlan {
    // entry name -> cases; empty plan means the built-in default sweep
    std::map<std::string, std::vector<VerifyCase>> cases;
};

VerifyPlan default_verify_plan();

struct EntryReport {
    std::string name;
    std::size_t instances = 0;
    std::size_t failures = 0;
    std::optional<Verdict> first_failure;
};

struct VerifyReport {
    std::vector<EntryReport> entries;
    bool all_pass() const;
};

VerifyReport catalog_verify(const VerifyPlan& plan);

/// Cheap isomorphism invariants used to tell families apart and to bucket
/// search results: dimensions of the two annihilators, the rank of the
/// symmetrized second product, and the dimension of the integral space.
struct InvariantProfile {
    std::size_t dot_annihilator = 0;
    std::size_t circ_annihilator = 0;
    std::size_t symmetrized_circ_rank = 0;
    std::size_t integral_dim = 0;

    std::array<std::size_t, 4> as_array() const {
        return {dot_annihilator, circ_annihilator, symmetrized_circ_rank, integral_dim};
    }
    friend bool operator==(const InvariantProfile& a, const InvariantProfile& b) {
        return a.as_array() == b.as_array();
    }
    friend bool operator<(const InvariantProfile& a, const InvariantProfile& b) {
        return a.as_array() < b.as_array();
    }
};

InvariantProfile invariant_profile(const Algebra& alg);

} // namespace jnp

#endif
