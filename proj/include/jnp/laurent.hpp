#ifndef JNP_LAURENT_HPP
#define JNP_LAURENT_HPP

#include <map>

#include "jnp/laws.hpp"

namespace jnp {

/// Finitely supported element sum_m a_m t^m with coefficients in the algebra.
/// Canonical sparse form: no stored degree maps to the zero vector.
struct LaurentElement {
    std::map<long long, Vec> terms;

    bool is_zero() const { return terms.empty(); }
    friend bool operator==(const LaurentElement& a, const LaurentElement& b) {
        return a.terms == b.terms;
    }
};

LaurentElement laurent_term(const Vec& a, long long degree);
LaurentElement laurent_add(const LaurentElement& x, const LaurentElement& y);
LaurentElement laurent_sub(const LaurentElement& x, const LaurentElement& y);

/// (a t^m) . (b t^n) = (a . b) t^{m+n}, extended bilinearly.
LaurentElement laurent_dot(const Algebra& alg, const LaurentElement& x, const LaurentElement& y);

/// [a t^m, b t^n] = m (a o b) t^{m+n-1} - n (b o a) t^{m+n-1}; the integer
/// degrees act through their canonical image in the coefficient field.
LaurentElement laurent_bracket(const Algebra& alg, const LaurentElement& x,
                               const LaurentElement& y);

struct AffinizationReport {
    Verdict verdict;
    long long grid_lo = 0;
    long long grid_hi = 0;
    std::size_t triples_checked = 0;
    bool prime_field_override = false;
};

/// Evaluates, for all basis triples and all degree triples in the grid, the
/// laws that make the Laurent extension a unital Poisson-like structure with
/// the degree-weighted bracket: commutativity/associativity/unit of the
/// product, alternation and antisymmetry of the bracket, the Jacobi
/// identity, and the unit-corrected Leibniz rule.  Each residual is
/// polynomial of degree at most 2 in each degree variable, so any grid with
/// three or more values per variable (the default is {-2..2}) decides the
/// laws for all integer degrees.  The grid must contain 0 and 1.
///
/// Restricted to characteristic 0 unless allow_prime is set; a prime-field
/// run is reported as an override and carries no claim beyond the grid.
AffinizationReport verify_affinization(const Algebra& alg, long long grid_lo, long long grid_hi,
                                       bool allow_prime = false);

} // namespace jnp

#endif
