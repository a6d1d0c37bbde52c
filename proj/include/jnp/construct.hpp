#ifndef JNP_CONSTRUCT_HPP
#define JNP_CONSTRUCT_HPP

#include "jnp/laws.hpp"

namespace jnp {

/// Output of a construction together with the checks its theorem guarantees.
/// Every embedded verdict passes; a failing guaranteed check raises
/// InternalCheckFailure instead of being returned.
struct ConstructionReport {
    Algebra out;
    std::string provenance;
    std::vector<Verdict> checks;
};

/// circ := a . P(b) for a derivation P of the commutative product.
ConstructionReport from_derivation(const Algebra& alg, const Matrix& P);

/// circ := a . (P + qQ)(b) for an admissible pair (P, Q).
ConstructionReport circ_q(const Algebra& alg, const Matrix& P, const Matrix& Q, const Scalar& q);

/// Bracket [a, b] := a o b - b o a; result stored in the circ slot.
ConstructionReport commutator_jacobi(const Algebra& alg);

/// Bracket [a, b] := P(a) o b - P(b) o a for P a derivation of both products.
ConstructionReport twisted_jacobi(const Algebra& alg, const Matrix& P);

/// Product structure on the tensor square: dot (x) dot for the commutative
/// product, circ (x) dot + dot (x) circ for the second product.
ConstructionReport tensor_jnp(const Algebra& a, const Algebra& b);

/// Tensor of an algebra with a left product and one with a right product:
/// the commutative product is componentwise, and the bracket is
/// [a1 (x) a2, b1 (x) b2] = a1 o b1 (x) a2 <> b2 - b1 o a1 (x) b2 <> a2.
ConstructionReport tensor_jacobi(const Algebra& left, const Algebra& right);

/// circ shifted by a fixed element: a x b := a o b + xi . a . b.
ConstructionReport xi_shift(const Algebra& alg, const Vec& xi);

/// Deformed product a o_u b := a o (u . b); u need not be invertible.
ConstructionReport kantor_deform(const Algebra& alg, const Vec& u);

/// Right-product counterpart a <>_v b := (v . a) <> b.
ConstructionReport right_kantor_deform(const Algebra& alg, const Vec& v);

/// Bracket [a, b]_u := u^{-1} . [u . a, u . b] for invertible u; the circ
/// slot of the input is read as a bracket.
ConstructionReport conformal_deform_jacobi(const Algebra& alg, const Vec& u);

/// Compares the bracket built from the deformed factors against the
/// (u (x) v)-deformation of the bracket of the undeformed tensor.
Verdict check_deformation_compatibility(const Algebra& a, const Vec& u, const Algebra& b,
                                        const Vec& v);

/// Inverse of u in the commutative product, if any (solve L(u) x = 1).
std::optional<Vec> invert_element(const Algebra& alg, const Vec& u);

/// Basis of the space of derivations of the chosen product.
std::vector<Matrix> derivation_space(const Algebra& alg, Product which);

/// Basis of the space of operators that are derivations of both products.
std::vector<Matrix> joint_derivation_space(const Algebra& alg);

/// The same algebra with the opposite second product and flipped orientation.
Algebra opposite_circ(const Algebra& alg);

} // namespace jnp

#endif
