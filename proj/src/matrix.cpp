#include "jnp/matrix.hpp"

#include <algorithm>

namespace jnp {

Vec zero_vec(const Field& f, std::size_t n) {
    return Vec(n, Scalar::zero(f));
}

Vec unit_vec(const Field& f, std::size_t n, std::size_t i) {
    Vec v = zero_vec(f, n);
    v.at(i) = Scalar::one(f);
    return v;
}

bool is_zero_vec(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimMismatch("vector sizes differ");
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimMismatch("vector sizes differ");
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec vec_scale(const Scalar& c, const Vec& v) {
    Vec r = v;
    for (auto& x : r) x *= c;
    return r;
}

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), field_(f), a_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(const Field& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::from_rows(const Field& f, const std::vector<Vec>& rows) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(f, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw DimMismatch("ragged rows");
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::from_columns(const Field& f, std::size_t rows, const std::vector<Vec>& cols) {
    Matrix m(f, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw DimMismatch("ragged columns");
        for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

Matrix Matrix::transpose() const {
    Matrix m(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

Vec Matrix::apply(const Vec& v) const {
    if (v.size() != cols_) throw DimMismatch("matrix-vector size mismatch");
    Vec r = zero_vec(field_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
    return r;
}

Vec Matrix::row(std::size_t i) const {
    Vec r;
    r.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r.push_back(at(i, j));
    return r;
}

Vec Matrix::column(std::size_t j) const {
    Vec c;
    c.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c.push_back(at(i, j));
    return c;
}

bool Matrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Matrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimMismatch("matrix shapes differ");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimMismatch("matrix shapes differ");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimMismatch("matrix product shape mismatch");
    Matrix r(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) r.at(i, j) += aik * b.at(k, j);
        }
    return r;
}

Matrix operator*(const Scalar& c, Matrix m) {
    for (std::size_t i = 0; i < m.rows_; ++i)
        for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) *= c;
    return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

RrefResult rref(const Matrix& m) {
    Matrix r = m;
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < r.cols() && lead < r.rows(); ++col) {
        std::size_t sel = lead;
        while (sel < r.rows() && r.at(sel, col).is_zero()) ++sel;
        if (sel == r.rows()) continue;
        if (sel != lead)
            for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r.at(sel, j), r.at(lead, j));
        Scalar inv = r.at(lead, col).inverse();
        for (std::size_t j = 0; j < r.cols(); ++j) r.at(lead, j) *= inv;
        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == lead || r.at(i, col).is_zero()) continue;
            Scalar factor = r.at(i, col);
            for (std::size_t j = 0; j < r.cols(); ++j)
                r.at(i, j) -= factor * r.at(lead, j);
        }
        pivots.push_back(col);
        ++lead;
    }
    return RrefResult{std::move(r), pivots.size(), std::move(pivots)};
}

std::size_t rank(const Matrix& m) {
    return rref(m).rank;
}

std::optional<Vec> solve_linear(const Matrix& A, const Vec& b) {
    if (b.size() != A.rows()) throw DimMismatch("right-hand side has wrong length");
    Matrix aug(A.field(), A.rows(), A.cols() + 1);
    for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t j = 0; j < A.cols(); ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, A.cols()) = b[i];
    }
    RrefResult r = rref(aug);
    for (std::size_t idx : r.pivot_columns)
        if (idx == A.cols()) return std::nullopt; // pivot in the constant column
    Vec x = zero_vec(A.field(), A.cols());
    for (std::size_t i = 0; i < r.pivot_columns.size(); ++i)
        x[r.pivot_columns[i]] = r.mat.at(i, A.cols());
    return x;
}

std::vector<Vec> kernel_basis(const Matrix& A) {
    RrefResult r = rref(A);
    std::vector<bool> is_pivot(A.cols(), false);
    for (std::size_t c : r.pivot_columns) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t freec = 0; freec < A.cols(); ++freec) {
        if (is_pivot[freec]) continue;
        Vec v = zero_vec(A.field(), A.cols());
        v[freec] = Scalar::one(A.field());
        for (std::size_t i = 0; i < r.pivot_columns.size(); ++i)
            v[r.pivot_columns[i]] = -r.mat.at(i, freec);
        basis.push_back(std::move(v));
    }
    return basis;
}

Matrix invert(const Matrix& A) {
    if (A.rows() != A.cols()) throw DimMismatch("only square matrices invert");
    std::size_t n = A.rows();
    Matrix aug(A.field(), n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, n + i) = Scalar::one(A.field());
    }
    RrefResult r = rref(aug);
    for (std::size_t i = 0; i < n; ++i)
        if (i >= r.pivot_columns.size() || r.pivot_columns[i] != i)
            throw SingularMatrix("matrix is singular");
    Matrix inv(A.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.mat.at(i, n + j);
    return inv;
}

Scalar det(const Matrix& A) {
    if (A.rows() != A.cols()) throw DimMismatch("determinant of non-square matrix");
    Matrix m = A;
    std::size_t n = m.rows();
    Scalar d = Scalar::one(m.field());
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && m.at(sel, col).is_zero()) ++sel;
        if (sel == n) return Scalar::zero(m.field());
        if (sel != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(sel, j), m.at(col, j));
            d = -d;
        }
        d *= m.at(col, col);
        Scalar inv = m.at(col, col).inverse();
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m.at(i, col).is_zero()) continue;
            Scalar factor = m.at(i, col) * inv;
            for (std::size_t j = col; j < n; ++j) m.at(i, j) -= factor * m.at(col, j);
        }
    }
    return d;
}

std::optional<std::vector<Scalar>> nonzero_det_point(const std::vector<Matrix>& mats,
                                                     std::uint64_t budget) {
    if (mats.empty()) return std::nullopt;
    const Field& f = mats.front().field();
    std::size_t n = mats.front().rows();
    for (const Matrix& m : mats) {
        if (m.rows() != n || m.cols() != n) throw DimMismatch("matrices differ in size");
        if (m.field() != f) throw FieldMismatch("matrices over different fields");
    }
    // one value list per variable
    std::uint64_t nvalues;
    if (f.is_prime() && f.p() <= n)
        nvalues = f.p(); // exhaust the whole field
    else
        nvalues = static_cast<std::uint64_t>(n) + 1; // degree bound per variable
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < mats.size(); ++i) {
        if (total > budget / nvalues) throw BudgetExceeded("determinant scan exceeds budget");
        total *= nvalues;
    }
    std::vector<std::uint64_t> idx(mats.size(), 0);
    for (;;) {
        Matrix sum(f, n, n);
        std::vector<Scalar> point;
        point.reserve(mats.size());
        for (std::size_t i = 0; i < mats.size(); ++i) {
            Scalar c = Scalar::from_int(f, static_cast<long long>(idx[i]));
            point.push_back(c);
            sum += c * mats[i];
        }
        if (!det(sum).is_zero()) return point;
        std::size_t pos = 0;
        while (pos < idx.size()) {
            if (++idx[pos] < nvalues) break;
            idx[pos] = 0;
            ++pos;
        }
        if (pos == idx.size()) return std::nullopt;
    }
}

bool det_poly_nonzero(const std::vector<Matrix>& mats, std::uint64_t budget) {
    return nonzero_det_point(mats, budget).has_value();
}

} // namespace jnp
