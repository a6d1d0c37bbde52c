#include <doctest.h>

#include "jnp/io.hpp"
#include "support.hpp"

using namespace jnp;
using namespace jnp::testing;

namespace {
const Field Q = Field::rational();
}

TEST_CASE("multiply on tabulated products") {
    Algebra j1 = emit("2d-J1", Q, {{"k1", "1"}, {"k2", "0"}});
    Vec e1 = unit_vec(Q, 2, 0), e2 = unit_vec(Q, 2, 1);
    CHECK(multiply(j1, Product::Dot, e1, e2) == e2);
    CHECK(multiply(j1, Product::Circ, e2, e1) == e2); // the k1 e2 entry
    CHECK(is_zero_vec(multiply(j1, Product::Circ, e2, e2)));

    Algebra dot_only = emit("2d-A1", Q);
    CHECK_THROWS_AS(multiply(dot_only, Product::Circ, e1, e2), MissingProduct);
    CHECK_THROWS_AS(multiply(j1, Product::Dot, Vec{Scalar::one(Q)}, e2), DimMismatch);
}

TEST_CASE("tensor_index is the row-major bijection") {
    CHECK(tensor_index(2, 2, 0, 0) == 0);
    CHECK(tensor_index(2, 2, 1, 1) == 3);
    CHECK(tensor_index(3, 4, 2, 1) == 9);
    // enumeration oracle: all pairs hit [0, n1 n2) exactly once
    std::vector<bool> hit(12, false);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            std::size_t idx = tensor_index(3, 4, i, j);
            REQUIRE(idx < 12);
            CHECK_FALSE(hit[idx]);
            hit[idx] = true;
        }
    CHECK_THROWS_AS(tensor_index(3, 4, 3, 0), DimMismatch);
}

TEST_CASE("multiplication operators") {
    Algebra j1 = emit("2d-J1", Q, {{"k1", "1"}, {"k2", "0"}});
    CHECK(left_mult_operator(j1, Product::Dot, j1.unit) == Matrix::identity(Q, 2));

    // b |-> b o e1 fixes both basis vectors when k1 = 1
    CHECK(right_mult_operator(j1, Product::Circ, unit_vec(Q, 2, 0)) == Matrix::identity(Q, 2));

    // b |-> e2 o b sends e1 to e2 and e2 to 0
    Matrix l = left_mult_operator(j1, Product::Circ, unit_vec(Q, 2, 1));
    CHECK(l.column(0) == unit_vec(Q, 2, 1));
    CHECK(is_zero_vec(l.column(1)));
}

TEST_CASE("operators agree with multiply and products are bilinear") {
    Rng rng(20240601);
    for (const NamedAlgebra& na : rational_jnp_corpus()) {
        const Algebra& alg = na.alg;
        CHECK(left_mult_operator(alg, Product::Dot, alg.unit) ==
              Matrix::identity(alg.field, alg.dim));
        for (int trial = 0; trial < 4; ++trial) {
            Vec a = rand_vec(rng, Q, alg.dim);
            Vec a2 = rand_vec(rng, Q, alg.dim);
            Vec b = rand_vec(rng, Q, alg.dim);
            Scalar c = rand_scalar(rng, Q);
            for (Product which : {Product::Dot, Product::Circ}) {
                CHECK(left_mult_operator(alg, which, a).apply(b) == multiply(alg, which, a, b));
                CHECK(right_mult_operator(alg, which, a).apply(b) == multiply(alg, which, b, a));
                Vec lhs = multiply(alg, which, vec_add(a, vec_scale(c, a2)), b);
                Vec rhs = vec_add(multiply(alg, which, a, b),
                                  vec_scale(c, multiply(alg, which, a2, b)));
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("algebra JSON round-trips byte-exactly") {
    for (const NamedAlgebra& na : rational_jnp_corpus()) {
        std::string once = canonical_dump(algebra_to_json(na.alg));
        Algebra reread = algebra_from_json(Json::parse(once));
        CHECK(reread == na.alg);
        CHECK(canonical_dump(algebra_to_json(reread)) == once);
    }
    // with attached form and maps
    Emission em = catalog_emit("4d-diff-frobenius", Q, {});
    std::string once = canonical_dump(algebra_to_json(em.algebra));
    CHECK(canonical_dump(algebra_to_json(algebra_from_json(Json::parse(once)))) == once);
}

TEST_CASE("algebra JSON rejects malformed input") {
    Json j = algebra_to_json(emit("2d-J1", Q, {{"k1", "1"}}));
    SUBCASE("duplicate structure entries") {
        j["dot"].push_back(j["dot"][0]);
        CHECK_THROWS_AS(algebra_from_json(j), ParseError);
    }
    SUBCASE("index out of range") {
        j["dot"][0][0] = 7;
        CHECK_THROWS_AS(algebra_from_json(j), ParseError);
    }
    SUBCASE("bad orientation") {
        j["circ_orientation"] = "sideways";
        CHECK_THROWS_AS(algebra_from_json(j), ParseError);
    }
    SUBCASE("orientation without circ") {
        j.erase("circ");
        CHECK_THROWS_AS(algebra_from_json(j), ParseError);
    }
    SUBCASE("bad scalar") {
        j["unit"][0] = "1.5";
        CHECK_THROWS_AS(algebra_from_json(j), ParseError);
    }
    SUBCASE("wrong unit length") {
        j["unit"].push_back("0");
        CHECK_THROWS_AS(algebra_from_json(j), ParseError);
    }
}

TEST_CASE("prime-field algebra files") {
    Algebra alg = emit("char3-simple", Field::prime(3), {{"k1", "2"}, {"k2", "1"}});
    std::string once = canonical_dump(algebra_to_json(alg));
    Algebra reread = algebra_from_json(Json::parse(once));
    CHECK(reread == alg);
    CHECK(canonical_dump(algebra_to_json(reread)) == once);
}

TEST_CASE("vector parsing") {
    CHECK(parse_vec(Q, "1,-2,1/3", 3) ==
          Vec{Scalar::from_int(Q, 1), Scalar::from_int(Q, -2), Scalar::parse(Q, "1/3")});
    CHECK_THROWS_AS(parse_vec(Q, "1,2", 3), ParseError);
    CHECK_THROWS_AS(parse_vec(Q, "1,,2", 3), ParseError);
}
