#ifndef JNP_FROBENIUS_HPP
#define JNP_FROBENIUS_HPP

#include "jnp/laws.hpp"

namespace jnp {

/// Value of the bilinear form with Gram matrix G on coefficient vectors.
Scalar form_value(const Matrix& G, const Vec& x, const Vec& y);

/// Symmetry, nondegeneracy, and the two invariance identities of the form
/// over a JNP algebra: (a.b, c) = (a, b.c) and (aob, c) = -(b, aoc + coa).
Verdict check_quadratic(const Algebra& alg, const Matrix& G);

/// Basis of the space of invariant symmetric bilinear forms (degenerate
/// members included), as Gram matrices; deterministic order.
std::vector<Matrix> invariant_form_space(const Algebra& alg);

/// Basis of the space of functionals v with
/// v((aob).c) = -v(b.(aoc + coa)) on all basis triples.
std::vector<Vec> integral_space(const Algebra& alg);

/// The mutually inverse maps of the correspondence between integrals and
/// invariant symmetric forms: B_v(a, b) = v(a.b)  and  v_B(a) = B(a, 1).
/// Inputs are validated for membership in the respective space.
Matrix integral_to_form(const Algebra& alg, const Vec& v);
Vec form_to_integral(const Algebra& alg, const Matrix& G);

struct FrobeniusDecision {
    bool frobenius = false;
    std::optional<Vec> integral; // a nondegenerate integral, when one exists
    std::optional<Matrix> form;  // its Gram matrix
};

/// Existence of a nondegenerate invariant symmetric form, decided by a
/// deterministic determinant scan over the span of the form-space basis.
/// Over F_p with p <= dim the scan exhausts all coefficient tuples, so the
/// answer is about actual nondegenerate members.
FrobeniusDecision is_frobenius(const Algebra& alg, std::uint64_t budget = 1u << 24);

/// The data (v, e = sum e1 (x) e2, omega) attached to a nondegenerate
/// integral: casimir[i][j] is the coefficient of e_i (x) e_j in e, and
/// euler_casimir = sum e1 . e2.
struct FrobeniusPair {
    Vec integral;
    Matrix casimir;
    Vec euler_casimir;
};

FrobeniusPair frobenius_pair(const Algebra& alg, const Vec& v);

/// Adjoint of P with respect to G: the operator with
/// (P(a), b) = (a, P^(b)), computed as G^{-1} P^T G.
Matrix adjoint_operator(const Algebra& alg, const Matrix& P, const Matrix& G);

/// From a unital commutative algebra with derivation P and dot-invariant
/// nondegenerate symmetric G, builds circ := a . (P + q P^)(b) and reports
/// whether the result together with G passes check_quadratic.
std::pair<Algebra, Verdict> differential_frobenius_construct(const Algebra& alg, const Matrix& P,
                                                             const Matrix& G, const Scalar& q);

/// Jacobi laws for the bracket in the circ slot plus symmetry,
/// nondegeneracy, (a.b, c) = (a, b.c) and ([a,b], c) = (a, [b,c]) for G.
Verdict check_frobenius_jacobi(const Algebra& alg, const Matrix& G);

/// A commutative algebra with a derivation P and a dot-invariant
/// nondegenerate symmetric form G (no second product involved).
Verdict check_dot_frobenius(const Algebra& alg, const Matrix& P, const Matrix& G);

struct FrobeniusJacobiResult {
    Algebra jacobi; // bracket in the circ slot
    Matrix form;    // product form on the tensor basis
    Verdict verdict;
};

/// Tensor of a quadratic algebra (left second product, form Ga) and a
/// quadratic one with right second product (form Gb): the induced bracket
/// algebra with the product form (x1 (x) x2, y1 (x) y2) = Ga(x1,y1) Gb(x2,y2),
/// checked for symmetry, nondegeneracy, and both invariance identities.
FrobeniusJacobiResult frobenius_jacobi_tensor(const Algebra& a, const Matrix& Ga,
                                              const Algebra& b, const Matrix& Gb);

} // namespace jnp

#endif
