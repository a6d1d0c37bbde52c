#include "jnp/frobenius.hpp"

#include "jnp/construct.hpp"

namespace jnp {

namespace {

long long ll(std::size_t v) {
    return static_cast<long long>(v);
}

void require_verdict(const Verdict& v, const std::string& who) {
    if (!v.pass) throw ConstraintViolation(who + ": input fails law '" + v.law + "'");
}

Scalar scalar_dot(const Vec& a, const Vec& b) {
    Scalar s = Scalar::zero(a.front().field());
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

/// v applied to a coefficient vector.
Scalar apply_functional(const Vec& v, const Vec& x) {
    return scalar_dot(v, x);
}

Verdict dot_invariance(const Algebra& alg, const Matrix& G, const char* name) {
    for (std::size_t i = 0; i < alg.dim; ++i)
        for (std::size_t j = 0; j < alg.dim; ++j)
            for (std::size_t k = 0; k < alg.dim; ++k) {
                Scalar lhs = form_value(G, multiply_basis(alg, Product::Dot, i, j),
                                        unit_vec(alg.field, alg.dim, k));
                Scalar rhs = form_value(G, unit_vec(alg.field, alg.dim, i),
                                        multiply_basis(alg, Product::Dot, j, k));
                if (lhs != rhs)
                    return Verdict::bad(name, {{ll(i), ll(j), ll(k)}, {lhs}, {rhs}});
            }
    return Verdict::ok(name);
}

// (a o b, c) = -(b, a o c + c o a)
Verdict circ_invariance(const Algebra& alg, const Matrix& G) {
    for (std::size_t i = 0; i < alg.dim; ++i)
        for (std::size_t j = 0; j < alg.dim; ++j)
            for (std::size_t k = 0; k < alg.dim; ++k) {
                Scalar lhs = form_value(G, multiply_basis(alg, Product::Circ, i, j),
                                        unit_vec(alg.field, alg.dim, k));
                Vec mix = vec_add(multiply_basis(alg, Product::Circ, i, k),
                                  multiply_basis(alg, Product::Circ, k, i));
                Scalar rhs = -form_value(G, unit_vec(alg.field, alg.dim, j), mix);
                if (lhs != rhs)
                    return Verdict::bad("form-circ-invariance", {{ll(i), ll(j), ll(k)}, {lhs}, {rhs}});
            }
    return Verdict::ok("form-circ-invariance");
}

Verdict form_shape(const Algebra& alg, const Matrix& G) {
    if (G.rows() != alg.dim || G.cols() != alg.dim)
        throw DimMismatch("Gram matrix size does not match the algebra");
    if (!G.is_symmetric())
        return Verdict::bad("form-symmetric", {{}, {}, {}});
    if (rank(G) != alg.dim)
        return Verdict::bad("form-nondegenerate", {{}, {}, {}});
    return Verdict::ok("form-shape");
}

} // namespace

Scalar form_value(const Matrix& G, const Vec& x, const Vec& y) {
    return scalar_dot(x, G.apply(y));
}

Verdict check_quadratic(const Algebra& alg, const Matrix& G) {
    require_verdict(check_jnp(alg), "check_quadratic");
    Verdict shape = form_shape(alg, G);
    if (!shape.pass) return shape;
    Verdict d = dot_invariance(alg, G, "form-dot-invariance");
    if (!d.pass) return d;
    Verdict c = circ_invariance(alg, G);
    if (!c.pass) return c;
    return Verdict::ok("quadratic");
}

std::vector<Matrix> invariant_form_space(const Algebra& alg) {
    require_verdict(check_jnp(alg), "invariant_form_space");
    std::size_t n = alg.dim;
    // unknowns g[i][j], flattened row-major
    std::vector<Vec> rows;
    const Field& f = alg.field;
    auto new_row = [&]() { return zero_vec(f, n * n); };

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vec row = new_row();
            row[i * n + j] += Scalar::one(f);
            row[j * n + i] -= Scalar::one(f);
            rows.push_back(row);
        }
    const StructureTensor& c = alg.dot;
    const StructureTensor& d = alg.tensor(Product::Circ);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec row = new_row();
                // (e_i . e_j, e_k) - (e_i, e_j . e_k) = 0
                for (std::size_t r = 0; r < n; ++r) {
                    row[r * n + k] += c.at(i, j, r);
                    row[i * n + r] -= c.at(j, k, r);
                }
                rows.push_back(row);
                Vec row2 = new_row();
                // (e_i o e_j, e_k) + (e_j, e_i o e_k + e_k o e_i) = 0
                for (std::size_t r = 0; r < n; ++r) {
                    row2[r * n + k] += d.at(i, j, r);
                    row2[j * n + r] += d.at(i, k, r) + d.at(k, i, r);
                }
                rows.push_back(row2);
            }

    std::vector<Matrix> basis;
    for (const Vec& v : kernel_basis(Matrix::from_rows(f, rows))) {
        Matrix g(f, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) g.at(i, j) = v[i * n + j];
        basis.push_back(std::move(g));
    }
    return basis;
}

std::vector<Vec> integral_space(const Algebra& alg) {
    require_verdict(check_jnp(alg), "integral_space");
    std::size_t n = alg.dim;
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                // v((e_i o e_j) . e_k) + v(e_j . (e_i o e_k + e_k o e_i)) = 0
                Vec lhs = multiply(alg, Product::Dot, multiply_basis(alg, Product::Circ, i, j),
                                   unit_vec(alg.field, n, k));
                Vec mix = vec_add(multiply_basis(alg, Product::Circ, i, k),
                                  multiply_basis(alg, Product::Circ, k, i));
                Vec rhs = multiply(alg, Product::Dot, unit_vec(alg.field, n, j), mix);
                rows.push_back(vec_add(lhs, rhs));
            }
    return kernel_basis(Matrix::from_rows(alg.field, rows));
}

namespace {

bool is_integral(const Algebra& alg, const Vec& v) {
    std::size_t n = alg.dim;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec lhs = multiply(alg, Product::Dot, multiply_basis(alg, Product::Circ, i, j),
                                   unit_vec(alg.field, n, k));
                Vec mix = vec_add(multiply_basis(alg, Product::Circ, i, k),
                                  multiply_basis(alg, Product::Circ, k, i));
                Vec rhs = multiply(alg, Product::Dot, unit_vec(alg.field, n, j), mix);
                if (apply_functional(v, lhs) != -apply_functional(v, rhs)) return false;
            }
    return true;
}

Matrix pairing_matrix(const Algebra& alg, const Vec& v) {
    Matrix F(alg.field, alg.dim, alg.dim);
    for (std::size_t i = 0; i < alg.dim; ++i)
        for (std::size_t j = 0; j < alg.dim; ++j)
            F.at(i, j) = apply_functional(v, multiply_basis(alg, Product::Dot, i, j));
    return F;
}

} // namespace

Matrix integral_to_form(const Algebra& alg, const Vec& v) {
    require_verdict(check_jnp(alg), "integral_to_form");
    if (v.size() != alg.dim) throw DimMismatch("functional has wrong length");
    if (!is_integral(alg, v))
        throw ConstraintViolation("functional is not an integral");
    return pairing_matrix(alg, v);
}

Vec form_to_integral(const Algebra& alg, const Matrix& G) {
    require_verdict(check_jnp(alg), "form_to_integral");
    if (G.rows() != alg.dim || G.cols() != alg.dim)
        throw DimMismatch("Gram matrix size does not match the algebra");
    if (!G.is_symmetric() || !dot_invariance(alg, G, "form-dot-invariance").pass ||
        !circ_invariance(alg, G).pass)
        throw ConstraintViolation("matrix is not an invariant symmetric form");
    return G.apply(alg.unit); // a |-> (a, 1) in coordinates, G symmetric
}

FrobeniusDecision is_frobenius(const Algebra& alg, std::uint64_t budget) {
    std::vector<Matrix> basis = invariant_form_space(alg);
    FrobeniusDecision dec;
    if (basis.empty()) return dec;
    std::optional<std::vector<Scalar>> point = nonzero_det_point(basis, budget);
    if (!point) return dec;
    Matrix g(alg.field, alg.dim, alg.dim);
    for (std::size_t i = 0; i < basis.size(); ++i) g += (*point)[i] * basis[i];
    dec.frobenius = true;
    dec.form = g;
    dec.integral = form_to_integral(alg, g);
    return dec;
}

FrobeniusPair frobenius_pair(const Algebra& alg, const Vec& v) {
    require_verdict(check_jnp(alg), "frobenius_pair");
    if (v.size() != alg.dim) throw DimMismatch("functional has wrong length");
    if (!is_integral(alg, v)) throw ConstraintViolation("functional is not an integral");
    Matrix F = pairing_matrix(alg, v);
    Matrix E(alg.field, 0, 0);
    try {
        E = invert(F);
    } catch (const SingularMatrix&) {
        throw ConstraintViolation("integral is degenerate");
    }

    FrobeniusPair pair{v, E, zero_vec(alg.field, alg.dim)};
    Vec left_sum = zero_vec(alg.field, alg.dim);
    Vec right_sum = zero_vec(alg.field, alg.dim);
    for (std::size_t i = 0; i < alg.dim; ++i)
        for (std::size_t j = 0; j < alg.dim; ++j) {
            const Scalar& e_ij = E.at(i, j);
            if (e_ij.is_zero()) continue;
            left_sum[j] += e_ij * v[i];
            right_sum[i] += e_ij * v[j];
            Vec prod = multiply_basis(alg, Product::Dot, i, j);
            for (std::size_t k = 0; k < alg.dim; ++k)
                pair.euler_casimir[k] += e_ij * prod[k];
        }
    if (left_sum != alg.unit || right_sum != alg.unit)
        throw InternalCheckFailure("frobenius_pair: counit condition failed");
    for (std::size_t a = 0; a < alg.dim; ++a) {
        Matrix L = left_mult_operator(alg, Product::Dot, unit_vec(alg.field, alg.dim, a));
        if (L * E != E * L.transpose())
            throw InternalCheckFailure("frobenius_pair: balance condition failed");
    }
    return pair;
}

Matrix adjoint_operator(const Algebra& alg, const Matrix& P, const Matrix& G) {
    if (P.rows() != alg.dim || P.cols() != alg.dim)
        throw DimMismatch("operator size does not match the algebra");
    Verdict shape = form_shape(alg, G);
    if (!shape.pass) throw ConstraintViolation("adjoint_operator: form is " + shape.law);
    require_verdict(dot_invariance(alg, G, "form-dot-invariance"), "adjoint_operator");
    Matrix adj = invert(G) * P.transpose() * G;
    for (std::size_t i = 0; i < alg.dim; ++i)
        for (std::size_t j = 0; j < alg.dim; ++j) {
            Scalar lhs = form_value(G, P.column(i), unit_vec(alg.field, alg.dim, j));
            Scalar rhs = form_value(G, unit_vec(alg.field, alg.dim, i), adj.column(j));
            if (lhs != rhs) throw InternalCheckFailure("adjoint identity failed");
        }
    return adj;
}

std::pair<Algebra, Verdict> differential_frobenius_construct(const Algebra& alg, const Matrix& P,
                                                             const Matrix& G, const Scalar& q) {
    if (alg.field.characteristic() == 2)
        throw CharacteristicError("construction needs characteristic != 2");
    require_verdict(check_unital_comm_assoc(alg), "differential_frobenius_construct");
    require_verdict(check_derivation(alg, Product::Dot, P), "differential_frobenius_construct");
    Matrix adj = adjoint_operator(alg, P, G);
    Matrix twist = P + q * adj;

    Algebra out = alg;
    StructureTensor t(alg.field, alg.dim);
    for (std::size_t i = 0; i < alg.dim; ++i)
        for (std::size_t j = 0; j < alg.dim; ++j) {
            Vec prod =
                multiply(alg, Product::Dot, unit_vec(alg.field, alg.dim, i), twist.column(j));
            for (std::size_t k = 0; k < alg.dim; ++k) t.at(i, j, k) = prod[k];
        }
    out.circ = t;
    out.circ_orientation = Orientation::Left;
    out.form = G;
    return {out, check_quadratic(out, G)};
}

Verdict check_frobenius_jacobi(const Algebra& alg, const Matrix& G) {
    Verdict jac = check_jacobi(alg);
    if (!jac.pass) return jac;
    Verdict shape = form_shape(alg, G);
    if (!shape.pass) return shape;
    Verdict d = dot_invariance(alg, G, "form-dot-invariance");
    if (!d.pass) return d;
    std::size_t n = alg.dim;
    // ([x, y], z) = (x, [y, z]) with the bracket in the circ slot
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Scalar lhs = form_value(G, multiply_basis(alg, Product::Circ, i, j),
                                        unit_vec(alg.field, n, k));
                Scalar rhs = form_value(G, unit_vec(alg.field, n, i),
                                        multiply_basis(alg, Product::Circ, j, k));
                if (lhs != rhs)
                    return Verdict::bad("form-bracket-invariance",
                                        {{ll(i), ll(j), ll(k)}, {lhs}, {rhs}});
            }
    return Verdict::ok("frobenius-jacobi");
}

Verdict check_dot_frobenius(const Algebra& alg, const Matrix& P, const Matrix& G) {
    Verdict uca = check_unital_comm_assoc(alg);
    if (!uca.pass) return uca;
    Verdict der = check_derivation(alg, Product::Dot, P);
    if (!der.pass) return der;
    Verdict shape = form_shape(alg, G);
    if (!shape.pass) return shape;
    return dot_invariance(alg, G, "form-dot-invariance");
}

FrobeniusJacobiResult frobenius_jacobi_tensor(const Algebra& a, const Matrix& Ga,
                                              const Algebra& b, const Matrix& Gb) {
    require_verdict(check_quadratic(a, Ga), "frobenius_jacobi_tensor");
    if (b.circ_orientation != Orientation::Right)
        throw OrientationMismatch("second factor must carry a right product");
    require_verdict(check_quadratic(opposite_circ(b), Gb), "frobenius_jacobi_tensor");

    Algebra out = tensor_jacobi(a, b).out;
    std::size_t n = out.dim;
    Matrix G(out.field, n, n);
    for (std::size_t i1 = 0; i1 < a.dim; ++i1)
        for (std::size_t i2 = 0; i2 < b.dim; ++i2)
            for (std::size_t j1 = 0; j1 < a.dim; ++j1)
                for (std::size_t j2 = 0; j2 < b.dim; ++j2)
                    G.at(tensor_index(a.dim, b.dim, i1, i2), tensor_index(a.dim, b.dim, j1, j2)) =
                        Ga.at(i1, j1) * Gb.at(i2, j2);

    Verdict verdict = check_frobenius_jacobi(out, G);
    out.form = G;
    return {out, G, verdict};
}

} // namespace jnp
