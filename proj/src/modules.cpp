#include "jnp/modules.hpp"

namespace jnp {

namespace {

long long ll(std::size_t v) {
    return static_cast<long long>(v);
}

void require_verdict(const Verdict& v, const std::string& who) {
    if (!v.pass) throw ConstraintViolation(who + ": input fails law '" + v.law + "'");
}

/// Linear extension of a matrix family along a coefficient vector.
Matrix lin(const Field& f, const std::vector<Matrix>& fam, const Vec& x) {
    Matrix m(f, fam.front().rows(), fam.front().cols());
    for (std::size_t i = 0; i < fam.size(); ++i)
        if (!x[i].is_zero()) m += x[i] * fam[i];
    return m;
}

std::optional<Counterexample> first_column_mismatch(const Matrix& lhs, const Matrix& rhs,
                                                    std::size_t a, std::size_t b) {
    if (lhs == rhs) return std::nullopt;
    for (std::size_t col = 0; col < lhs.cols(); ++col) {
        Vec l = lhs.column(col), r = rhs.column(col);
        if (l != r) return Counterexample{{ll(a), ll(b), ll(col)}, l, r};
    }
    return std::nullopt; // unreachable
}

} // namespace

Verdict check_module(const Algebra& alg, const ModuleStructure& mod) {
    require_verdict(check_jnp(alg), "check_module");
    if (mod.alg_dim != alg.dim) throw DimMismatch("module indexed by a different algebra dimension");
    if (mod.l.size() != alg.dim || mod.r.size() != alg.dim || mod.s.size() != alg.dim)
        throw DimMismatch("module families must have one matrix per basis vector");
    for (const auto& fam : {&mod.l, &mod.r, &mod.s})
        for (const Matrix& m : *fam)
            if (m.rows() != mod.mod_dim || m.cols() != mod.mod_dim)
                throw DimMismatch("module matrices must be dimV x dimV");

    const Field& f = alg.field;
    auto circ_vec = [&](std::size_t i, std::size_t j) {
        return multiply_basis(alg, Product::Circ, i, j);
    };
    auto dot_vec = [&](std::size_t i, std::size_t j) {
        return multiply_basis(alg, Product::Dot, i, j);
    };

    // unital associative action of the commutative product
    {
        Matrix su = lin(f, mod.s, alg.unit);
        Matrix id = Matrix::identity(f, mod.mod_dim);
        if (auto ce = first_column_mismatch(su, id, 0, 0))
            return Verdict::bad("module-unit-action", *ce);
    }
    for (std::size_t a = 0; a < alg.dim; ++a)
        for (std::size_t b = 0; b < alg.dim; ++b) {
            Matrix lhs = lin(f, mod.s, dot_vec(a, b));
            Matrix rhs = mod.s[a] * mod.s[b];
            if (auto ce = first_column_mismatch(lhs, rhs, a, b))
                return Verdict::bad("module-assoc-action", *ce);
        }

    // Novikov bimodule laws for (l, r)
    for (std::size_t a = 0; a < alg.dim; ++a)
        for (std::size_t b = 0; b < alg.dim; ++b) {
            Matrix lab = lin(f, mod.l, circ_vec(a, b));
            Matrix lba = lin(f, mod.l, circ_vec(b, a));
            Matrix rab = lin(f, mod.r, circ_vec(a, b));

            Matrix lhs = mod.l[a] * mod.l[b] - lab;
            Matrix rhs = mod.l[b] * mod.l[a] - lba;
            if (auto ce = first_column_mismatch(lhs, rhs, a, b))
                return Verdict::bad("module-left-sym", *ce);

            lhs = mod.l[a] * mod.r[b] - mod.r[b] * mod.l[a];
            rhs = rab - mod.r[b] * mod.r[a];
            if (auto ce = first_column_mismatch(lhs, rhs, a, b))
                return Verdict::bad("module-left-right", *ce);

            if (auto ce = first_column_mismatch(lab, mod.r[b] * mod.l[a], a, b))
                return Verdict::bad("module-left-compose", *ce);

            if (auto ce = first_column_mismatch(mod.r[a] * mod.r[b], mod.r[b] * mod.r[a], a, b))
                return Verdict::bad("module-right-comm", *ce);
        }

    // mixed compatibilities; the chained first law is enforced as two equalities
    for (std::size_t a = 0; a < alg.dim; ++a)
        for (std::size_t b = 0; b < alg.dim; ++b) {
            Matrix sab_circ = lin(f, mod.s, circ_vec(a, b));
            if (auto ce = first_column_mismatch(mod.r[b] * mod.s[a], mod.s[a] * mod.r[b], a, b))
                return Verdict::bad("module-scalar-right-commute", *ce);
            if (auto ce = first_column_mismatch(mod.s[a] * mod.r[b], sab_circ, a, b))
                return Verdict::bad("module-scalar-right-product", *ce);

            Matrix lab_dot = lin(f, mod.l, dot_vec(a, b));
            if (auto ce = first_column_mismatch(lab_dot, mod.s[a] * mod.l[b], a, b))
                return Verdict::bad("module-left-scalar", *ce);

            Vec a_circ_unit = multiply(alg, Product::Circ, unit_vec(f, alg.dim, a), alg.unit);
            Matrix lhs = mod.l[a] * mod.s[b] - mod.s[b] * mod.l[a];
            Matrix rhs = sab_circ - lin(f, mod.s, a_circ_unit) * mod.s[b];
            if (auto ce = first_column_mismatch(lhs, rhs, a, b))
                return Verdict::bad("module-left-scalar-twist", *ce);

            Matrix rab_dot = lin(f, mod.r, dot_vec(a, b));
            Matrix sab_dot = lin(f, mod.s, dot_vec(a, b));
            Matrix r_unit = lin(f, mod.r, alg.unit);
            lhs = rab_dot - mod.s[b] * mod.r[a];
            rhs = mod.s[a] * mod.r[b] - sab_dot * r_unit;
            if (auto ce = first_column_mismatch(lhs, rhs, a, b))
                return Verdict::bad("module-right-scalar-twist", *ce);
        }

    return Verdict::ok("module");
}

ModuleStructure adjoint_module(const Algebra& alg) {
    require_verdict(check_jnp(alg), "adjoint_module");
    ModuleStructure mod;
    mod.alg_dim = alg.dim;
    mod.mod_dim = alg.dim;
    for (std::size_t i = 0; i < alg.dim; ++i) {
        Vec e = unit_vec(alg.field, alg.dim, i);
        mod.l.push_back(left_mult_operator(alg, Product::Circ, e));
        mod.r.push_back(right_mult_operator(alg, Product::Circ, e));
        mod.s.push_back(left_mult_operator(alg, Product::Dot, e));
    }
    return mod;
}

ModuleStructure dual_module(const Algebra& alg, const ModuleStructure& mod) {
    require_verdict(check_module(alg, mod), "dual_module");
    ModuleStructure dual;
    dual.alg_dim = mod.alg_dim;
    dual.mod_dim = mod.mod_dim;
    for (std::size_t i = 0; i < mod.alg_dim; ++i) {
        Matrix lt = mod.l[i].transpose();
        Matrix rt = mod.r[i].transpose();
        // phi^*(a) = -phi(a)^T applied to (l + r, -r, -s)
        dual.l.push_back((-Scalar::one(alg.field)) * (lt + rt));
        dual.r.push_back(rt);
        dual.s.push_back(mod.s[i].transpose());
    }
    return dual;
}

Verdict check_frobenius_via_modules(const Algebra& alg, const Vec& v) {
    require_verdict(check_jnp(alg), "check_frobenius_via_modules");
    if (v.size() != alg.dim) throw DimMismatch("functional has wrong length");
    Matrix F(alg.field, alg.dim, alg.dim);
    for (std::size_t i = 0; i < alg.dim; ++i) {
        for (std::size_t j = 0; j < alg.dim; ++j) {
            Vec prod = multiply_basis(alg, Product::Dot, i, j);
            Scalar s = Scalar::zero(alg.field);
            for (std::size_t k = 0; k < alg.dim; ++k) s += v[k] * prod[k];
            F.at(j, i) = s;
        }
    }
    try {
        invert(F);
    } catch (const SingularMatrix&) {
        throw ConstraintViolation("pairing of the functional is degenerate");
    }

    ModuleStructure adj = adjoint_module(alg);
    ModuleStructure dual = dual_module(alg, adj);
    struct Family {
        const char* name;
        const std::vector<Matrix>* plain;
        const std::vector<Matrix>* dualized;
    };
    for (const Family& fam : {Family{"s", &adj.s, &dual.s}, Family{"l", &adj.l, &dual.l},
                              Family{"r", &adj.r, &dual.r}}) {
        for (std::size_t i = 0; i < alg.dim; ++i) {
            Matrix lhs = F * (*fam.plain)[i];
            Matrix rhs = (*fam.dualized)[i] * F;
            if (lhs != rhs) {
                for (std::size_t col = 0; col < alg.dim; ++col) {
                    Vec l = lhs.column(col), r = rhs.column(col);
                    if (l != r)
                        return Verdict::bad(std::string("frobenius-intertwiner-") + fam.name,
                                            {{ll(i), ll(col)}, l, r});
                }
            }
        }
    }
    return Verdict::ok("frobenius-intertwiner");
}

} // namespace jnp
