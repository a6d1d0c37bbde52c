#ifndef JNP_LAWS_HPP
#define JNP_LAWS_HPP

#include <optional>
#include <string>

#include "jnp/algebra.hpp"

namespace jnp {

/// A witness that some identity failed: the basis tuple (plus degrees, for
/// identities over Laurent coefficients) and the two sides that differ.
struct Counterexample {
    std::vector<long long> indices;
    Vec lhs;
    Vec rhs;
};

/// Outcome of checking one named law.  For composite checks the name of the
/// first failing sub-law is reported.  Counterexamples are present exactly
/// when the check fails; for identity checks, re-evaluating the cited
/// identity at the witness reproduces the inequality (the simplicity check
/// instead reports the generator of a proper closed subspace in lhs).
struct Verdict {
    std::string law;
    bool pass = false;
    std::optional<Counterexample> counterexample;

    static Verdict ok(std::string name) { return Verdict{std::move(name), true, std::nullopt}; }
    static Verdict bad(std::string name, Counterexample ce) {
        return Verdict{std::move(name), false, std::move(ce)};
    }
};

// Primitive laws, each scanned over basis tuples in lexicographic order.
// Multilinearity lifts a law holding on basis tuples to all vectors.

Verdict check_commutative(const Algebra& alg);        // "comm"
Verdict check_associative(const Algebra& alg);        // "assoc"
Verdict check_unit(const Algebra& alg);               // "unit"
Verdict check_unital_comm_assoc(const Algebra& alg);  // composite "unital-comm-assoc"

/// Left Novikov laws of the circ product: left symmetry of the associator
/// ("novikov-left-sym") and right commutativity ("novikov-right-comm").
Verdict check_novikov(const Algebra& alg);

/// The opposite product of circ (orientation must be right) is Novikov.
Verdict check_right_novikov(const Algebra& alg);

/// Differential compatibility of dot and circ: (a.b)oc = a.(boc)
/// ("diff-left-mult") and ao(b.c) = (aob).c + b.(aoc) ("diff-leibniz"),
/// together with comm/assoc and Novikov sub-checks.
Verdict check_dnp(const Algebra& alg);

/// Unital compatibility: (a.b)oc = a.(boc) ("unit-compat-left-mult") and
/// co(a.b) = (coa).b + a.(cob) - a.b.(co1) ("unit-compat-leibniz"), on top
/// of unital-comm-assoc and Novikov.
Verdict check_jnp(const Algebra& alg);

/// The opposite of circ (orientation right) satisfies check_jnp.
Verdict check_right_jnp(const Algebra& alg);

/// circ is read as a bracket: alternating + antisymmetric + Jacobi
/// ("bracket-alternating", "bracket-antisym", "bracket-jacobi"),
/// unital-comm-assoc for dot, and the unit-corrected Leibniz rule
/// [a, b.c] = [a,b].c + b.[a,c] + b.c.[1,a] ("bracket-unit-leibniz").
Verdict check_jacobi(const Algebra& alg);

/// circ is read as a bracket: Lie + comm/assoc sub-checks plus
/// 2c.[a,b] = [c.a, b] + [a, c.b] ("double-leibniz").  Requires char != 2.
Verdict check_transposed_poisson(const Algebra& alg);

/// P(a*b) = P(a)*b + a*P(b) on all basis pairs of the chosen product.
Verdict check_derivation(const Algebra& alg, Product which, const Matrix& P);

/// P is a dot derivation and Q(a.b) = Q(a).b - a.P(b) on all basis pairs.
Verdict check_admissible_pair(const Algebra& alg, const Matrix& P, const Matrix& Q);

/// Over F_p: circ is nonzero and the closure of every line under left and
/// right circ multiplications is the whole space (no proper nonzero ideal).
/// The number of lines scanned is (p^n - 1)/(p - 1).
Verdict check_simple_novikov(const Algebra& alg, std::uint64_t budget = 1u << 24);

/// Dispatch by law name as used by the CLI; names listed in cli help.
Verdict check_law(const Algebra& alg, const std::string& law, std::uint64_t budget = 1u << 24);

} // namespace jnp

#endif
