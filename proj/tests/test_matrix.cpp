#include <doctest.h>

#include "jnp/matrix.hpp"

using namespace jnp;

namespace {

Matrix mat(const Field& f, std::size_t r, std::size_t c,
           const std::vector<std::string>& entries) {
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Scalar::parse(f, entries[i * c + j]);
    return m;
}

const Field Q = Field::rational();

} // namespace

TEST_CASE("rref fixes identity and zero") {
    Matrix id = Matrix::identity(Q, 2);
    RrefResult r = rref(id);
    CHECK(r.mat == id);
    CHECK(r.rank == 2);

    Matrix z(Q, 3, 3);
    RrefResult rz = rref(z);
    CHECK(rz.mat == z);
    CHECK(rz.rank == 0);
}

TEST_CASE("rref of a rank-1 matrix") {
    // hand reduction: subtract twice row 1 from row 2
    Matrix m = mat(Q, 2, 2, {"1", "2", "2", "4"});
    RrefResult r = rref(m);
    CHECK(r.rank == 1);
    CHECK(r.mat == mat(Q, 2, 2, {"1", "2", "0", "0"}));
    CHECK(r.pivot_columns == std::vector<std::size_t>{0});
}

TEST_CASE("rref is idempotent") {
    for (const auto& entries : {std::vector<std::string>{"1", "2", "3", "4", "5", "6"},
                                std::vector<std::string>{"0", "1", "0", "0", "0", "2"},
                                std::vector<std::string>{"1/2", "1/3", "1/4", "1/5", "1/6", "1/7"}}) {
        Matrix m = mat(Q, 2, 3, entries);
        Matrix once = rref(m).mat;
        CHECK(rref(once).mat == once);
    }
}

TEST_CASE("solve_linear") {
    Vec b{Scalar::from_int(Q, 5), Scalar::from_int(Q, -7)};
    CHECK(solve_linear(Matrix::identity(Q, 2), b) == b);

    Matrix z(Q, 2, 2);
    Vec zero = zero_vec(Q, 2);
    auto sol = solve_linear(z, zero);
    REQUIRE(sol.has_value());
    CHECK(is_zero_vec(*sol));

    // direct substitution: 2x = 3
    Matrix two = mat(Q, 1, 1, {"2"});
    auto x = solve_linear(two, Vec{Scalar::from_int(Q, 3)});
    REQUIRE(x.has_value());
    CHECK((*x)[0].str() == "3/2");

    // inconsistent system
    Matrix a = mat(Q, 2, 1, {"1", "1"});
    CHECK_FALSE(solve_linear(a, Vec{Scalar::from_int(Q, 1), Scalar::from_int(Q, 2)}).has_value());

    CHECK_THROWS_AS(solve_linear(two, zero), DimMismatch);
}

TEST_CASE("every consistent solve reproduces the right-hand side") {
    Matrix a = mat(Q, 3, 4, {"1", "2", "0", "1", "0", "0", "1", "3", "1", "2", "1", "4"});
    Vec x{Scalar::from_int(Q, 1), Scalar::from_int(Q, -2), Scalar::parse(Q, "1/3"),
          Scalar::from_int(Q, 2)};
    Vec b = a.apply(x);
    auto sol = solve_linear(a, b);
    REQUIRE(sol.has_value());
    CHECK(a.apply(*sol) == b);
}

TEST_CASE("kernel_basis") {
    CHECK(kernel_basis(Matrix::identity(Q, 4)).empty());
    CHECK(kernel_basis(Matrix(Q, 2, 3)).size() == 3);

    // oracle: enumerate all of F_3^2 for the matrix [1 1]
    Field f3 = Field::prime(3);
    Matrix m = mat(f3, 1, 2, {"1", "1"});
    std::vector<Vec> brute;
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) {
            Vec v{Scalar::from_int(f3, x), Scalar::from_int(f3, y)};
            if (is_zero_vec(m.apply(v)) && !is_zero_vec(v)) brute.push_back(v);
        }
    CHECK(brute.size() == 2); // one line through the origin
    auto basis = kernel_basis(m);
    REQUIRE(basis.size() == 1);
    bool found = false;
    for (const Vec& v : brute) found = found || v == basis[0];
    CHECK(found);
}

TEST_CASE("kernel vectors are independent and annihilated") {
    Matrix a = mat(Q, 2, 4, {"1", "2", "3", "4", "2", "4", "6", "8"});
    auto basis = kernel_basis(a);
    CHECK(basis.size() == 3);
    for (const Vec& v : basis) CHECK(is_zero_vec(a.apply(v)));
    CHECK(rank(Matrix::from_rows(Q, basis)) == basis.size());
}

TEST_CASE("invert") {
    CHECK(invert(Matrix::identity(Q, 3)) == Matrix::identity(Q, 3));

    Field f5 = Field::prime(5);
    Matrix two = mat(f5, 1, 1, {"2"});
    CHECK(invert(two) == mat(f5, 1, 1, {"3"}));

    CHECK_THROWS_AS(invert(mat(Q, 2, 2, {"1", "1", "1", "1"})), SingularMatrix);

    Matrix a = mat(Q, 3, 3, {"2", "1", "0", "1", "1", "1", "0", "3", "1"});
    Matrix inv = invert(a);
    CHECK(a * inv == Matrix::identity(Q, 3));
    CHECK(inv * a == Matrix::identity(Q, 3));
}

TEST_CASE("determinant") {
    CHECK(det(Matrix::identity(Q, 3)).is_one());
    CHECK(det(mat(Q, 2, 2, {"1", "2", "3", "4"})).str() == "-2");
    CHECK(det(mat(Q, 2, 2, {"0", "1", "1", "0"})).str() == "-1");
    CHECK(det(Matrix(Q, 2, 2)).is_zero());
}

TEST_CASE("det_poly_nonzero") {
    CHECK(det_poly_nonzero({Matrix::identity(Q, 2)}));
    CHECK_FALSE(det_poly_nonzero({Matrix(Q, 2, 2)}));

    // det(l1 [[0,1],[1,0]] + l2 [[1,0],[0,0]]) = -l1^2, nonzero at (1, 0)
    Matrix m1 = mat(Q, 2, 2, {"0", "1", "1", "0"});
    Matrix m2 = mat(Q, 2, 2, {"1", "0", "0", "0"});
    auto point = nonzero_det_point({m1, m2});
    REQUIRE(point.has_value());
    CHECK((*point)[0].str() == "1");
    CHECK((*point)[1].str() == "0");

    // m2 alone is singular everywhere
    CHECK_FALSE(det_poly_nonzero({m2}));

    CHECK_THROWS_AS(det_poly_nonzero({Matrix(Q, 2, 2), Matrix(Q, 3, 3)}), DimMismatch);
}

TEST_CASE("det scan exhausts small prime fields") {
    // over F_2 the polynomial l^2 + l vanishes identically on points
    Field f2 = Field::prime(2);
    Matrix m = mat(f2, 2, 2, {"1", "0", "0", "1"});
    CHECK(det_poly_nonzero({m}));
    Matrix odd = mat(f2, 2, 2, {"1", "1", "1", "1"});
    CHECK_FALSE(det_poly_nonzero({odd}));
}
