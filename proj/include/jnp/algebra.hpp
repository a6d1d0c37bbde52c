#ifndef JNP_ALGEBRA_HPP
#define JNP_ALGEBRA_HPP

#include <map>
#include <optional>
#include <string>

#include "jnp/matrix.hpp"

namespace jnp {

/// Which of the two products of an algebra description.
enum class Product { Dot, Circ };

/// Whether the second product is a left Novikov product or the opposite
/// (right) one.  Stored explicitly so tables with right products stay
/// literal instead of being transposed on the fly.
enum class Orientation { Left, Right };

/// Structure constants t[i][j][k] of a bilinear product:
/// e_i * e_j = sum_k t[i][j][k] e_k.
class StructureTensor {
  public:
    StructureTensor(const Field& f, std::size_t dim)
        : dim_(dim), field_(f), t_(dim * dim * dim, Scalar::zero(f)) {}

    std::size_t dim() const { return dim_; }
    const Field& field() const { return field_; }

    const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const {
        return t_[(i * dim_ + j) * dim_ + k];
    }
    Scalar& at(std::size_t i, std::size_t j, std::size_t k) {
        return t_[(i * dim_ + j) * dim_ + k];
    }

    /// The product of basis elements e_i * e_j as a coefficient vector.
    Vec product(std::size_t i, std::size_t j) const;

    /// The tensor of the opposite product (i and j swapped).
    StructureTensor transposed() const;

    bool is_zero() const;

    friend bool operator==(const StructureTensor& a, const StructureTensor& b) {
        return a.dim_ == b.dim_ && a.field_ == b.field_ && a.t_ == b.t_;
    }
    friend bool operator!=(const StructureTensor& a, const StructureTensor& b) {
        return !(a == b);
    }

  private:
    std::size_t dim_;
    Field field_;
    std::vector<Scalar> t_;
};

/// A finite-dimensional algebra with a commutative product (dot), an
/// optional second product (circ: a Novikov product, a right Novikov
/// product, or a Lie bracket, depending on which laws are being checked),
/// the coefficient vector of the dot unit, and optional attached data (a
/// Gram matrix and named linear operators).
struct Algebra {
    Field field = Field::rational();
    std::size_t dim = 0;
    StructureTensor dot{Field::rational(), 0};
    std::optional<StructureTensor> circ;
    Orientation circ_orientation = Orientation::Left;
    Vec unit;
    std::optional<Matrix> form;
    std::map<std::string, Matrix> maps;

    static Algebra make(const Field& f, std::size_t dim);

    bool has_circ() const { return circ.has_value(); }
    const StructureTensor& tensor(Product which) const;
    StructureTensor& tensor_mut(Product which);

    const Matrix& named_map(const std::string& name) const;
};

bool operator==(const Algebra& a, const Algebra& b);

/// Bilinear extension of the structure constants to coefficient vectors.
Vec multiply(const Algebra& alg, Product which, const Vec& a, const Vec& b);

/// Product of basis elements (no vector construction).
Vec multiply_basis(const Algebra& alg, Product which, std::size_t i, std::size_t j);

/// Matrix of b |-> a * b.
Matrix left_mult_operator(const Algebra& alg, Product which, const Vec& a);

/// Matrix of b |-> b * a.
Matrix right_mult_operator(const Algebra& alg, Product which, const Vec& a);

/// Position of e_i (x) e_j in the row-major basis of a tensor product of
/// spaces of dimensions n1 and n2.
std::size_t tensor_index(std::size_t n1, std::size_t n2, std::size_t i, std::size_t j);

} // namespace jnp

#endif
