#ifndef JNP_MODULES_HPP
#define JNP_MODULES_HPP

#include "jnp/laws.hpp"

namespace jnp {

/// A candidate module over an algebra with two products: per base basis
/// vector e_i, the actions l[i], r[i] of the second product on each side and
/// the action s[i] of the commutative product.
struct ModuleStructure {
    std::size_t alg_dim = 0;
    std::size_t mod_dim = 0;
    std::vector<Matrix> l;
    std::vector<Matrix> r;
    std::vector<Matrix> s;
};

/// All module axioms over basis pairs of the algebra: the Novikov bimodule
/// laws for (l, r), the unital associative module laws for s, and the four
/// mixed compatibilities.  Counterexample indices are (a, b, column of V).
Verdict check_module(const Algebra& jnp_alg, const ModuleStructure& mod);

/// The algebra acting on itself: l = left circ, r = right circ, s = left dot.
ModuleStructure adjoint_module(const Algebra& jnp_alg);

/// Dual action on V*, written in the dual basis: l' = -(l + r)^T, r' = r^T,
/// s' = s^T.  Input must pass check_module.
ModuleStructure dual_module(const Algebra& jnp_alg, const ModuleStructure& mod);

/// Whether the pairing matrix F[j][i] = v(e_i . e_j) intertwines the adjoint
/// module with the dual of the adjoint module (and is invertible).
Verdict check_frobenius_via_modules(const Algebra& jnp_alg, const Vec& v);

} // namespace jnp

#endif
