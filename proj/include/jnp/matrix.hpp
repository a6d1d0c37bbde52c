#ifndef JNP_MATRIX_HPP
#define JNP_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "jnp/scalar.hpp"

namespace jnp {

/// Coefficient vector over a fixed field.
using Vec = std::vector<Scalar>;

Vec zero_vec(const Field& f, std::size_t n);
Vec unit_vec(const Field& f, std::size_t n, std::size_t i);
bool is_zero_vec(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Scalar& c, const Vec& v);

/// Dense matrix of exact scalars, row-major.
class Matrix {
  public:
    Matrix(const Field& f, std::size_t rows, std::size_t cols);

    static Matrix identity(const Field& f, std::size_t n);
    static Matrix from_rows(const Field& f, const std::vector<Vec>& rows);
    static Matrix from_columns(const Field& f, std::size_t rows, const std::vector<Vec>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return field_; }

    Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Matrix transpose() const;
    Vec apply(const Vec& v) const;  // matrix * column vector
    Vec row(std::size_t i) const;
    Vec column(std::size_t j) const;
    bool is_zero() const;
    bool is_symmetric() const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& c, Matrix m);
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  private:
    std::size_t rows_, cols_;
    Field field_;
    std::vector<Scalar> a_;
};

struct RrefResult {
    Matrix mat;
    std::size_t rank;
    std::vector<std::size_t> pivot_columns;
};

/// Reduced row echelon form by exact Gauss-Jordan elimination.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Some solution of A x = b, or nullopt when the system is inconsistent.
std::optional<Vec> solve_linear(const Matrix& A, const Vec& b);

/// Basis of the null space; cols - rank vectors, deterministic order.
std::vector<Vec> kernel_basis(const Matrix& A);

/// Inverse of a square matrix; throws SingularMatrix.
Matrix invert(const Matrix& A);

Scalar det(const Matrix& A);

/// Decides whether det(l_1 M_1 + ... + l_k M_k) is nonzero for some field
/// point (l_1, ..., l_k), and returns the first such point in a fixed scan
/// order.  Over the rationals the scan runs over {0, ..., n}^k, which also
/// decides whether the determinant polynomial is identically zero (its degree
/// in each variable is at most n).  Over F_p the same grid is used when
/// p > n; otherwise all of F_p^k is scanned exhaustively, so the answer is
/// about values, not polynomials.
std::optional<std::vector<Scalar>> nonzero_det_point(const std::vector<Matrix>& mats,
                                                     std::uint64_t budget = 1u << 24);

bool det_poly_nonzero(const std::vector<Matrix>& mats, std::uint64_t budget = 1u << 24);

} // namespace jnp

#endif
