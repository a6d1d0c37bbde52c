#include <doctest.h>

#include "jnp/frobenius.hpp"
#include "support.hpp"

using namespace jnp;
using namespace jnp::testing;

namespace {

const Field Q = Field::rational();

Algebra one_dim(const Field& f) {
    Algebra a = Algebra::make(f, 1);
    a.dot.at(0, 0, 0) = Scalar::one(f);
    a.unit = unit_vec(f, 1, 0);
    a.circ = StructureTensor(f, 1);
    return a;
}

Matrix hyperbolic(const Field& f) {
    Matrix g(f, 2, 2);
    g.at(0, 1) = Scalar::one(f);
    g.at(1, 0) = Scalar::one(f);
    return g;
}

/// The tabulated adjoint of the 4-dim example's derivation.
Matrix four_dim_adjoint(const Field& f) {
    Matrix m(f, 4, 4);
    m.at(0, 0) = Scalar::one(f);
    m.at(1, 0) = Scalar::one(f);
    m.at(2, 0) = Scalar::one(f);
    m.at(1, 1) = Scalar::parse(f, "2/3");
    m.at(2, 1) = Scalar::parse(f, "1/2");
    m.at(2, 2) = Scalar::parse(f, "1/3");
    return m;
}

} // namespace

TEST_CASE("check_quadratic") {
    Algebra j1 = emit("2d-J1", Q, {{"k1", "1"}, {"k2", "-2"}});
    CHECK(check_quadratic(j1, hyperbolic(Q)).pass);

    Verdict v = check_quadratic(j1, Matrix::identity(Q, 2));
    CHECK_FALSE(v.pass);
    CHECK(v.law == "form-dot-invariance");
    CHECK(v.counterexample->indices == std::vector<long long>{0, 1, 1});

    CHECK_FALSE(check_quadratic(j1, Matrix(Q, 2, 2)).pass); // degenerate
}

TEST_CASE("space of invariant symmetric forms") {
    auto basis = invariant_form_space(emit("2d-J1", Q, {{"k1", "1"}, {"k2", "-2"}}));
    REQUIRE(basis.size() == 1);
    CHECK(basis[0].at(0, 0).is_zero());
    CHECK(basis[0].at(1, 1).is_zero());
    CHECK(basis[0].at(0, 1) == basis[0].at(1, 0));
    CHECK_FALSE(basis[0].at(0, 1).is_zero());

    auto free2 = invariant_form_space(emit("2d-J1", Q, {}));
    CHECK(free2.size() == 2);
    for (const Matrix& g : free2) CHECK(g.at(1, 1).is_zero());

    CHECK(invariant_form_space(emit("2d-J1", Q, {{"k1", "1"}, {"k2", "0"}})).empty());
}

TEST_CASE("space of integrals") {
    CHECK(integral_space(emit("2d-J1", Q, {})).size() == 2); // zero circ: everything

    auto basis = integral_space(emit("2d-J1", Q, {{"k1", "1"}, {"k2", "-2"}}));
    REQUIRE(basis.size() == 1);
    CHECK(basis[0][0].is_zero());
    CHECK_FALSE(basis[0][1].is_zero());

    CHECK(integral_space(emit("2d-J3", Q, {})).size() == 2);
}

TEST_CASE("integrals correspond to forms") {
    Algebra j1 = emit("2d-J1", Q, {{"k1", "1"}, {"k2", "-2"}});
    Vec v = {Scalar::zero(Q), Scalar::one(Q)};
    CHECK(integral_to_form(j1, v) == hyperbolic(Q));
    CHECK(form_to_integral(j1, hyperbolic(Q)) == v);
    CHECK(integral_to_form(j1, zero_vec(Q, 2)) == Matrix(Q, 2, 2));

    CHECK_THROWS_AS(integral_to_form(j1, Vec{Scalar::one(Q), Scalar::zero(Q)}),
                    ConstraintViolation);
    CHECK_THROWS_AS(form_to_integral(j1, Matrix::identity(Q, 2)), ConstraintViolation);
}

TEST_CASE("the two spaces match in dimension and the maps invert each other") {
    auto both = rational_jnp_corpus();
    for (const NamedAlgebra& na : prime_jnp_corpus()) both.push_back(na);
    for (const NamedAlgebra& na : both) {
        auto forms = invariant_form_space(na.alg);
        auto integrals = integral_space(na.alg);
        CHECK(forms.size() == integrals.size());
        for (const Matrix& g : forms)
            CHECK(integral_to_form(na.alg, form_to_integral(na.alg, g)) == g);
        for (const Vec& v : integrals)
            CHECK(form_to_integral(na.alg, integral_to_form(na.alg, v)) == v);
    }
}

TEST_CASE("deciding Frobenius-ness") {
    FrobeniusDecision yes = is_frobenius(emit("2d-J1", Q, {{"k1", "1"}, {"k2", "-2"}}));
    CHECK(yes.frobenius);
    REQUIRE(yes.integral.has_value());
    CHECK(*yes.integral == Vec{Scalar::zero(Q), Scalar::one(Q)});

    CHECK_FALSE(is_frobenius(emit("2d-J1", Q, {{"k1", "1"}, {"k2", "0"}})).frobenius);

    // zero second product: only the commutative invariance constrains the form
    FrobeniusDecision zero = is_frobenius(emit("2d-J1", Q, {}));
    CHECK(zero.frobenius);
    CHECK(rank(*zero.form) == 2);
}

TEST_CASE("pair attached to a nondegenerate integral") {
    Algebra j1 = emit("2d-J1", Q, {{"k1", "1"}, {"k2", "-2"}});
    Vec v = {Scalar::zero(Q), Scalar::one(Q)};
    FrobeniusPair pair = frobenius_pair(j1, v);
    CHECK(pair.casimir == hyperbolic(Q)); // e = e1 (x) e2 + e2 (x) e1
    CHECK(pair.euler_casimir == Vec{Scalar::zero(Q), Scalar::from_int(Q, 2)});

    FrobeniusPair tiny = frobenius_pair(one_dim(Q), Vec{Scalar::one(Q)});
    CHECK(tiny.casimir.at(0, 0).is_one());
    CHECK(tiny.euler_casimir == unit_vec(Q, 1, 0));

    // a non-integral functional is rejected outright
    CHECK_THROWS_AS(frobenius_pair(j1, Vec{Scalar::one(Q), Scalar::zero(Q)}),
                    ConstraintViolation);
    // a degenerate integral is rejected too (zero circ makes everything integral)
    CHECK_THROWS_AS(frobenius_pair(emit("2d-J1", Q, {}), Vec{Scalar::one(Q), Scalar::zero(Q)}),
                    ConstraintViolation);
}

TEST_CASE("pair conditions hold for scanned witnesses across the corpus") {
    auto both = rational_jnp_corpus();
    for (const NamedAlgebra& na : prime_jnp_corpus()) both.push_back(na);
    for (const NamedAlgebra& na : both) {
        FrobeniusDecision dec = is_frobenius(na.alg);
        if (!dec.frobenius) continue;
        FrobeniusPair pair = frobenius_pair(na.alg, *dec.integral); // asserts internally
        CHECK(pair.casimir.rows() == na.alg.dim);
    }
}

TEST_CASE("adjoint operator with respect to a pairing") {
    Algebra four = emit("4d-diff-frobenius", Q);
    CHECK(adjoint_operator(four, Matrix(Q, 4, 4), *four.form) == Matrix(Q, 4, 4));
    CHECK(adjoint_operator(four, four.named_map("P"), *four.form) == four_dim_adjoint(Q));

    // self-adjoint when the pairing is the identity matrix
    Algebra tiny = one_dim(Q);
    Matrix p(Q, 1, 1);
    p.at(0, 0) = Scalar::from_int(Q, 5);
    CHECK(adjoint_operator(tiny, p, Matrix::identity(Q, 1)) == p);

    CHECK_THROWS_AS(adjoint_operator(four, four.named_map("P"), Matrix(Q, 4, 4)),
                    ConstraintViolation);
}

TEST_CASE("derivation plus adjoint twist produces the tabulated products") {
    Algebra four = emit("4d-diff-frobenius", Q);
    Matrix p = four.named_map("P");

    auto [alg, verdict] =
        differential_frobenius_construct(four, p, *four.form, Scalar::parse(Q, "-1/2"));
    CHECK(verdict.pass);

    StructureTensor expected(Q, 4);
    auto set = [&](std::size_t i, std::size_t j, std::size_t k, const char* c) {
        expected.at(i, j, k) = Scalar::parse(Q, c);
    };
    set(0, 0, 0, "-1/2"); set(0, 0, 1, "-1/2"); set(0, 0, 2, "-1/2");
    set(0, 1, 2, "1/4");  set(0, 1, 3, "1");
    set(0, 2, 2, "1/2");  set(0, 2, 3, "1");
    set(0, 3, 3, "1");
    set(1, 0, 1, "-1/2"); set(1, 0, 2, "-1/2"); set(1, 0, 3, "-1/2");
    set(1, 1, 3, "1/4");
    set(1, 2, 3, "1/2");
    set(2, 0, 2, "-1/2"); set(2, 0, 3, "-1/2");
    set(3, 0, 3, "-1/2");
    CHECK(alg.tensor(Product::Circ) == expected);

    auto [alg0, verdict0] =
        differential_frobenius_construct(four, p, *four.form, Scalar::zero(Q));
    CHECK_FALSE(verdict0.pass);

    auto [algz, verdictz] =
        differential_frobenius_construct(four, Matrix(Q, 4, 4), *four.form, Scalar::zero(Q));
    CHECK(verdictz.pass);
    CHECK(algz.tensor(Product::Circ).is_zero());
}

TEST_CASE("tensor of two quadratic algebras carries the product form") {
    Algebra a = emit("final-frobenius-A", Q);
    Algebra b = emit("final-frobenius-B", Q);
    FrobeniusJacobiResult res = frobenius_jacobi_tensor(a, *a.form, b, *b.form);
    CHECK(res.verdict.pass);

    Emission frozen = catalog_emit("final-frobenius-pair", Q, {});
    CHECK(res.jacobi.dot == frozen.algebra.dot);
    CHECK(res.jacobi.tensor(Product::Circ) == frozen.algebra.tensor(Product::Circ));
    CHECK(res.form == *frozen.form);

    FrobeniusJacobiResult tiny = frobenius_jacobi_tensor(
        one_dim(Q), Matrix::identity(Q, 1), opposite_circ(one_dim(Q)), Matrix::identity(Q, 1));
    CHECK(tiny.verdict.pass);
    CHECK(tiny.jacobi.tensor(Product::Circ).is_zero());

    CHECK_THROWS_AS(frobenius_jacobi_tensor(a, *a.form, a, *a.form), OrientationMismatch);
}

TEST_CASE("quadratic catalog pairs stay quadratic under the tensor") {
    std::vector<std::pair<Algebra, Matrix>> lefts;
    for (const auto& [name, asg] : std::vector<std::pair<std::string, Assignment>>{
             {"quad-2d-J1", {{"k1", "1"}, {"g12", "1"}}},
             {"quad-2d-J2", {{"k1", "2"}, {"g12", "3"}}},
             {"quad-2d-J3-k0", {{"g11", "2"}, {"g12", "1"}}}}) {
        Emission em = catalog_emit(name, Q, asg);
        lefts.push_back({em.algebra, *em.form});
    }
    for (const auto& [alg, form] : lefts) {
        Algebra right = opposite_circ(alg);
        FrobeniusJacobiResult res = frobenius_jacobi_tensor(alg, form, right, form);
        CHECK(res.verdict.pass);
    }
}
