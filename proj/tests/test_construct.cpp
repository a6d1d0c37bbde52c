#include <doctest.h>

#include "support.hpp"

using namespace jnp;
using namespace jnp::testing;

namespace {

const Field Q = Field::rational();

Matrix scale_e2(const Field& f) { // P(e2) = e2 on a 2-dim algebra
    Matrix p(f, 2, 2);
    p.at(1, 1) = Scalar::one(f);
    return p;
}

Algebra drop_circ(Algebra a) {
    a.circ.reset();
    return a;
}

} // namespace

TEST_CASE("from_derivation") {
    Algebra a1 = emit("2d-A1", Q);
    CHECK(from_derivation(a1, Matrix(Q, 2, 2)).out.tensor(Product::Circ).is_zero());

    Algebra built = from_derivation(a1, scale_e2(Q)).out;
    Algebra expected = emit("2d-J1", Q, {{"k1", "0"}, {"k2", "1"}});
    CHECK(built.tensor(Product::Circ) == expected.tensor(Product::Circ));

    CHECK_THROWS_AS(from_derivation(a1, Matrix::identity(Q, 2)), ConstraintViolation);

    // the degree derivation reproduces the catalog's truncated-polynomial circ
    Algebra trunc = emit("trunc-poly", Q, {{"m", "4"}});
    Algebra rebuilt = from_derivation(drop_circ(trunc), trunc.named_map("P")).out;
    CHECK(rebuilt.tensor(Product::Circ) == trunc.tensor(Product::Circ));
}

TEST_CASE("commutator of a derivation product is the derivation bracket") {
    // [a, b] = a . P(b) - P(a) . b, entrywise on structure constants
    Rng rng(314159);
    for (const char* entry : {"2d-A1", "trunc-poly"}) {
        Algebra alg = drop_circ(emit(entry, Q, entry[0] == 't' ? Assignment{{"m", "4"}}
                                                               : Assignment{}));
        auto ders = derivation_space(alg, Product::Dot);
        REQUIRE_FALSE(ders.empty());
        Matrix p = rand_in_span(rng, Q, alg.dim, ders);
        Algebra br = commutator_jacobi(from_derivation(alg, p).out).out;
        for (std::size_t i = 0; i < alg.dim; ++i)
            for (std::size_t j = 0; j < alg.dim; ++j) {
                Vec expect = vec_sub(
                    multiply(alg, Product::Dot, unit_vec(Q, alg.dim, i), p.column(j)),
                    multiply(alg, Product::Dot, p.column(i), unit_vec(Q, alg.dim, j)));
                CHECK(br.tensor(Product::Circ).product(i, j) == expect);
            }
    }
}

TEST_CASE("plain d/dx is not a derivation of a characteristic-0 truncation") {
    Algebra trunc = drop_circ(emit("trunc-poly", Q, {{"m", "3"}}));
    Matrix ddx(Q, 3, 3);
    ddx.at(0, 1) = Scalar::one(Q);
    ddx.at(1, 2) = Scalar::from_int(Q, 2);
    Verdict v = check_derivation(trunc, Product::Dot, ddx);
    CHECK_FALSE(v.pass);
    // failure is exactly at the top-degree pair
    CHECK(v.counterexample->indices == std::vector<long long>{1, 2});
    CHECK_THROWS_AS(from_derivation(trunc, ddx), ConstraintViolation);
}

TEST_CASE("circ_q") {
    Algebra a1 = emit("2d-A1", Q);
    Matrix p = scale_e2(Q);
    // q = 0 collapses to the derivation construction
    ConstructionReport viaP = from_derivation(a1, p);
    ConstructionReport via0 = circ_q(a1, p, (-Scalar::one(Q)) * p, Scalar::zero(Q));
    CHECK(via0.out.tensor(Product::Circ) == viaP.out.tensor(Product::Circ));

    CHECK(circ_q(a1, Matrix(Q, 2, 2), Matrix(Q, 2, 2), Scalar::from_int(Q, 7))
              .out.tensor(Product::Circ)
              .is_zero());

    // admissible pairs of the shape Q = -P + left multiplication
    Rng rng(42);
    for (const NamedAlgebra& na : rational_jnp_corpus()) {
        Algebra alg = drop_circ(na.alg);
        std::vector<Matrix> ders = derivation_space(alg, Product::Dot);
        if (ders.empty()) continue;
        Matrix P = rand_in_span(rng, Q, alg.dim, ders);
        Vec h = rand_vec(rng, Q, alg.dim);
        Matrix Qop = left_mult_operator(alg, Product::Dot, h) - P;
        REQUIRE(check_admissible_pair(alg, P, Qop).pass);
        ConstructionReport rep = circ_q(alg, P, Qop, rand_scalar(rng, Q));
        CHECK(rep.checks.front().pass);
    }
}

TEST_CASE("commutator bracket") {
    Algebra zero = emit("2d-J1", Q, {});
    CHECK(commutator_jacobi(zero).out.tensor(Product::Circ).is_zero());

    Algebra j1 = emit("2d-J1", Q, {{"k1", "1"}, {"k2", "-2"}});
    Algebra br = commutator_jacobi(j1).out;
    const StructureTensor& t = br.tensor(Product::Circ);
    CHECK(t.at(0, 1, 1) == Scalar::from_int(Q, -3)); // -2 - 1
    CHECK(t.at(1, 0, 1) == Scalar::from_int(Q, 3));
    CHECK(t.at(0, 0, 0).is_zero());

    Field f3 = Field::prime(3);
    Algebra simple = emit("char3-simple", f3, {{"k1", "1"}});
    Algebra sbr = commutator_jacobi(simple).out;
    // y_{-1} o y_0 = y_{-1} while y_0 o y_{-1} = 0
    CHECK(sbr.tensor(Product::Circ).at(0, 1, 0) == Scalar::one(f3));
    CHECK(check_jacobi(sbr).pass);
}

TEST_CASE("derivation-twisted bracket") {
    Algebra j1 = from_derivation(emit("2d-A1", Q), scale_e2(Q)).out;
    CHECK(twisted_jacobi(j1, Matrix(Q, 2, 2)).out.tensor(Product::Circ).is_zero());

    // the same derivation also differentiates the built product
    REQUIRE(check_derivation(j1, Product::Circ, scale_e2(Q)).pass);
    Algebra tw = twisted_jacobi(j1, scale_e2(Q)).out;
    CHECK(tw.tensor(Product::Circ).is_zero()); // e2 o e1 = 0 kills every term

    CHECK_THROWS_AS(twisted_jacobi(j1, Matrix::identity(Q, 2)), ConstraintViolation);
}

TEST_CASE("tensor of two algebras") {
    Algebra j1 = emit("2d-J1", Q, {{"k1", "1"}, {"k2", "0"}});

    Algebra trivial = Algebra::make(Q, 1);
    trivial.dot.at(0, 0, 0) = Scalar::one(Q);
    trivial.unit = unit_vec(Q, 1, 0);
    trivial.circ = StructureTensor(Q, 1);
    Algebra same = tensor_jnp(j1, trivial).out;
    CHECK(same.dot == j1.dot);
    CHECK(same.tensor(Product::Circ) == j1.tensor(Product::Circ));

    Algebra square = tensor_jnp(j1, j1).out;
    CHECK(square.dim == 4);
    CHECK(check_jnp(square).pass);

    Algebra zero = emit("2d-J1", Q, {});
    CHECK(tensor_jnp(zero, zero).out.tensor(Product::Circ).is_zero());

    Field f3 = Field::prime(3);
    CHECK_THROWS_AS(tensor_jnp(j1, emit("2d-J1", f3, {{"k1", "1"}})), FieldMismatch);
}

TEST_CASE("tensor product is associative on structure constants") {
    Algebra a = emit("2d-J1", Q, {{"k1", "1"}, {"k2", "0"}});
    Algebra b = emit("2d-J2", Q, {{"k1", "0"}, {"k2", "1"}});
    Algebra c = emit("2d-J3", Q, {{"k1", "1"}, {"k2", "0"}});
    Algebra left = tensor_jnp(tensor_jnp(a, b).out, c).out;
    Algebra right = tensor_jnp(a, tensor_jnp(b, c).out).out;
    CHECK(left.dot == right.dot);
    CHECK(left.tensor(Product::Circ) == right.tensor(Product::Circ));
    CHECK(left.unit == right.unit);
}

TEST_CASE("tensor with a right factor gives the closing bracket algebra") {
    Algebra a = emit("final-frobenius-A", Q);
    Algebra b = emit("final-frobenius-B", Q);
    Algebra j = tensor_jacobi(a, b).out;
    Algebra frozen = emit("final-frobenius-pair", Q);
    CHECK(j.dot == frozen.dot);
    CHECK(j.tensor(Product::Circ) == frozen.tensor(Product::Circ));
    CHECK(j.unit == frozen.unit);

    // any algebra against its own opposite also closes
    Algebra j1 = emit("2d-J1", Q, {{"k1", "1"}, {"k2", "0"}});
    CHECK(check_jacobi(tensor_jacobi(j1, opposite_circ(j1)).out).pass);

    Algebra zero = emit("2d-J1", Q, {});
    CHECK(tensor_jacobi(zero, opposite_circ(zero)).out.tensor(Product::Circ).is_zero());
}

TEST_CASE("shift of the second product by a fixed element") {
    Algebra j1 = emit("2d-J1", Q, {{"k1", "1"}, {"k2", "0"}});
    CHECK(xi_shift(j1, zero_vec(Q, 2)).out.tensor(Product::Circ) == j1.tensor(Product::Circ));

    // shifting by x makes x act on the unit: x . x . 1 = x^2
    Algebra trunc = emit("trunc-poly", Q, {{"m", "3"}});
    Algebra shifted = xi_shift(trunc, unit_vec(Q, 3, 1)).out;
    Vec x_times_one = multiply(shifted, Product::Circ, unit_vec(Q, 3, 1), shifted.unit);
    CHECK(x_times_one == unit_vec(Q, 3, 2));
    CHECK_FALSE(check_dnp(shifted).pass); // the unit is no longer killed

    Algebra zero = emit("2d-J1", Q, {});
    CHECK(xi_shift(zero, zero.unit).out.tensor(Product::Circ) == zero.dot);
}

TEST_CASE("product deformation by a fixed element") {
    Algebra j1 = emit("2d-J1", Q, {{"k1", "1"}, {"k2", "0"}});
    CHECK(kantor_deform(j1, j1.unit).out.tensor(Product::Circ) == j1.tensor(Product::Circ));
    CHECK(kantor_deform(j1, zero_vec(Q, 2)).out.tensor(Product::Circ).is_zero());

    Algebra c3 = emit("3d-conformal", Q);
    Vec u{Scalar::from_int(Q, 2), Scalar::from_int(Q, 5), Scalar::from_int(Q, 3)};
    Algebra deformed = kantor_deform(c3, u).out;
    const StructureTensor& t = deformed.tensor(Product::Circ);
    CHECK(t.at(0, 0, 2) == Scalar::from_int(Q, -1)); // alpha - gamma
    CHECK(t.at(0, 2, 2) == Scalar::from_int(Q, -2)); // -alpha
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 3; ++k)
                if (!(i == 0 && j == 0 && k == 2) && !(i == 0 && j == 2 && k == 2))
                    CHECK(t.at(i, j, k).is_zero());
}

TEST_CASE("right-product deformation commutes with transposition") {
    Algebra j1 = emit("2d-J1", Q, {{"k1", "1"}, {"k2", "0"}});
    Algebra right = opposite_circ(j1);
    Vec v = unit_vec(Q, 2, 1);
    CHECK(right_kantor_deform(right, right.unit).out.tensor(Product::Circ) ==
          right.tensor(Product::Circ));
    CHECK(right_kantor_deform(right, zero_vec(Q, 2)).out.tensor(Product::Circ).is_zero());
    Algebra via_right = right_kantor_deform(right, v).out;
    Algebra via_left = kantor_deform(j1, v).out;
    CHECK(via_right.tensor(Product::Circ) == via_left.tensor(Product::Circ).transposed());
}

TEST_CASE("bracket deformation by an invertible element") {
    Algebra br = commutator_jacobi(emit("2d-J1", Q, {{"k1", "1"}, {"k2", "-2"}})).out;
    CHECK(conformal_deform_jacobi(br, br.unit).out.tensor(Product::Circ) ==
          br.tensor(Product::Circ));

    Vec two = vec_scale(Scalar::from_int(Q, 2), br.unit);
    Algebra doubled = conformal_deform_jacobi(br, two).out;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                CHECK(doubled.tensor(Product::Circ).at(i, j, k) ==
                      Scalar::from_int(Q, 2) * br.tensor(Product::Circ).at(i, j, k));

    CHECK_THROWS_AS(conformal_deform_jacobi(br, unit_vec(Q, 2, 1)), NonInvertibleElement);
}

TEST_CASE("deformed factors match the deformed tensor bracket") {
    Algebra a = emit("final-frobenius-A", Q);
    Algebra b = emit("final-frobenius-B", Q);
    CHECK(check_deformation_compatibility(a, a.unit, b, b.unit).pass);

    Vec u{Scalar::one(Q), Scalar::one(Q)}; // e1 + e2, invertible in this product
    REQUIRE(invert_element(a, u).has_value());
    CHECK(check_deformation_compatibility(a, u, b, b.unit).pass);

    CHECK_THROWS_AS(check_deformation_compatibility(a, unit_vec(Q, 2, 1), b, b.unit),
                    NonInvertibleElement);
}

TEST_CASE("derivation spaces") {
    // every derivation of this 2-dim algebra scales e2
    auto basis = derivation_space(emit("2d-A1", Q), Product::Dot);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0].at(0, 0).is_zero());
    CHECK(basis[0].at(0, 1).is_zero());
    CHECK(basis[0].at(1, 0).is_zero());
    CHECK_FALSE(basis[0].at(1, 1).is_zero());

    CHECK(derivation_space(emit("2d-A2", Q), Product::Dot).empty());

    // derivations of a characteristic-0 truncation are x^j d/dx for j >= 1
    Algebra trunc = emit("trunc-poly", Q, {{"m", "3"}});
    CHECK(derivation_space(trunc, Product::Dot).size() == 2);
    CHECK(joint_derivation_space(trunc).size() == 1); // only x d/dx fixes circ too
}

TEST_CASE("element inversion") {
    Algebra a1 = emit("2d-A1", Q);
    auto inv = invert_element(a1, a1.unit);
    REQUIRE(inv.has_value());
    CHECK(*inv == a1.unit);
    CHECK_FALSE(invert_element(a1, unit_vec(Q, 2, 1)).has_value());
}
