#include "jnp/algebra.hpp"

namespace jnp {

Vec StructureTensor::product(std::size_t i, std::size_t j) const {
    Vec v;
    v.reserve(dim_);
    for (std::size_t k = 0; k < dim_; ++k) v.push_back(at(i, j, k));
    return v;
}

StructureTensor StructureTensor::transposed() const {
    StructureTensor r(field_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            for (std::size_t k = 0; k < dim_; ++k) r.at(i, j, k) = at(j, i, k);
    return r;
}

bool StructureTensor::is_zero() const {
    for (const Scalar& s : t_)
        if (!s.is_zero()) return false;
    return true;
}

Algebra Algebra::make(const Field& f, std::size_t dim) {
    Algebra a;
    a.field = f;
    a.dim = dim;
    a.dot = StructureTensor(f, dim);
    a.unit = zero_vec(f, dim);
    return a;
}

const StructureTensor& Algebra::tensor(Product which) const {
    if (which == Product::Dot) return dot;
    if (!circ) throw MissingProduct("algebra has no second product");
    return *circ;
}

StructureTensor& Algebra::tensor_mut(Product which) {
    if (which == Product::Dot) return dot;
    if (!circ) throw MissingProduct("algebra has no second product");
    return *circ;
}

const Matrix& Algebra::named_map(const std::string& name) const {
    auto it = maps.find(name);
    if (it == maps.end()) throw Error("algebra has no map named '" + name + "'");
    return it->second;
}

bool operator==(const Algebra& a, const Algebra& b) {
    return a.field == b.field && a.dim == b.dim && a.dot == b.dot && a.circ == b.circ &&
           a.circ_orientation == b.circ_orientation && a.unit == b.unit && a.form == b.form &&
           a.maps == b.maps;
}

Vec multiply(const Algebra& alg, Product which, const Vec& a, const Vec& b) {
    const StructureTensor& t = alg.tensor(which);
    if (a.size() != alg.dim || b.size() != alg.dim)
        throw DimMismatch("vector length does not match algebra dimension");
    Vec r = zero_vec(alg.field, alg.dim);
    for (std::size_t i = 0; i < alg.dim; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < alg.dim; ++j) {
            if (b[j].is_zero()) continue;
            Scalar c = a[i] * b[j];
            for (std::size_t k = 0; k < alg.dim; ++k) r[k] += c * t.at(i, j, k);
        }
    }
    return r;
}

Vec multiply_basis(const Algebra& alg, Product which, std::size_t i, std::size_t j) {
    return alg.tensor(which).product(i, j);
}

Matrix left_mult_operator(const Algebra& alg, Product which, const Vec& a) {
    const StructureTensor& t = alg.tensor(which);
    if (a.size() != alg.dim) throw DimMismatch("vector length does not match algebra dimension");
    Matrix m(alg.field, alg.dim, alg.dim);
    for (std::size_t j = 0; j < alg.dim; ++j)
        for (std::size_t i = 0; i < alg.dim; ++i) {
            if (a[i].is_zero()) continue;
            for (std::size_t k = 0; k < alg.dim; ++k) m.at(k, j) += a[i] * t.at(i, j, k);
        }
    return m;
}

Matrix right_mult_operator(const Algebra& alg, Product which, const Vec& a) {
    const StructureTensor& t = alg.tensor(which);
    if (a.size() != alg.dim) throw DimMismatch("vector length does not match algebra dimension");
    Matrix m(alg.field, alg.dim, alg.dim);
    for (std::size_t j = 0; j < alg.dim; ++j)
        for (std::size_t i = 0; i < alg.dim; ++i) {
            if (a[i].is_zero()) continue;
            for (std::size_t k = 0; k < alg.dim; ++k) m.at(k, j) += a[i] * t.at(j, i, k);
        }
    return m;
}

std::size_t tensor_index(std::size_t n1, std::size_t n2, std::size_t i, std::size_t j) {
    if (i >= n1 || j >= n2) throw DimMismatch("tensor index out of range");
    return i * n2 + j;
}

} // namespace jnp
