#include "jnp/laws.hpp"

#include <set>

namespace jnp {

namespace {

long long ll(std::size_t v) {
    return static_cast<long long>(v);
}

Verdict first_failure(std::initializer_list<Verdict> verdicts, const std::string& composite) {
    for (const Verdict& v : verdicts)
        if (!v.pass) return v;
    return Verdict::ok(composite);
}

void require_left_circ(const Algebra& alg) {
    if (!alg.has_circ()) throw MissingProduct("algebra has no second product");
    if (alg.circ_orientation != Orientation::Left)
        throw OrientationMismatch("second product is stored with right orientation");
}

void require_right_circ(const Algebra& alg) {
    if (!alg.has_circ()) throw MissingProduct("algebra has no second product");
    if (alg.circ_orientation != Orientation::Right)
        throw OrientationMismatch("second product is stored with left orientation");
}

Algebra with_opposite_circ(const Algebra& alg) {
    Algebra op = alg;
    op.circ = alg.tensor(Product::Circ).transposed();
    op.circ_orientation = Orientation::Left;
    return op;
}

} // namespace

Verdict check_commutative(const Algebra& alg) {
    for (std::size_t i = 0; i < alg.dim; ++i)
        for (std::size_t j = i + 1; j < alg.dim; ++j) {
            Vec lhs = multiply_basis(alg, Product::Dot, i, j);
            Vec rhs = multiply_basis(alg, Product::Dot, j, i);
            if (lhs != rhs) return Verdict::bad("comm", {{ll(i), ll(j)}, lhs, rhs});
        }
    return Verdict::ok("comm");
}

Verdict check_associative(const Algebra& alg) {
    for (std::size_t i = 0; i < alg.dim; ++i)
        for (std::size_t j = 0; j < alg.dim; ++j)
            for (std::size_t k = 0; k < alg.dim; ++k) {
                Vec lhs = multiply(alg, Product::Dot, multiply_basis(alg, Product::Dot, i, j),
                                   unit_vec(alg.field, alg.dim, k));
                Vec rhs = multiply(alg, Product::Dot, unit_vec(alg.field, alg.dim, i),
                                   multiply_basis(alg, Product::Dot, j, k));
                if (lhs != rhs) return Verdict::bad("assoc", {{ll(i), ll(j), ll(k)}, lhs, rhs});
            }
    return Verdict::ok("assoc");
}

Verdict check_unit(const Algebra& alg) {
    if (alg.unit.size() != alg.dim) throw DimMismatch("unit vector has wrong length");
    for (std::size_t i = 0; i < alg.dim; ++i) {
        Vec e = unit_vec(alg.field, alg.dim, i);
        Vec left = multiply(alg, Product::Dot, alg.unit, e);
        if (left != e) return Verdict::bad("unit", {{ll(i)}, left, e});
        Vec right = multiply(alg, Product::Dot, e, alg.unit);
        if (right != e) return Verdict::bad("unit", {{ll(i)}, right, e});
    }
    return Verdict::ok("unit");
}

Verdict check_unital_comm_assoc(const Algebra& alg) {
    return first_failure({check_unit(alg), check_commutative(alg), check_associative(alg)},
                         "unital-comm-assoc");
}

namespace {

// (a o b) o c - a o (b o c) = (b o a) o c - b o (a o c)
Verdict novikov_left_sym(const Algebra& alg) {
    for (std::size_t i = 0; i < alg.dim; ++i)
        for (std::size_t j = 0; j < alg.dim; ++j)
            for (std::size_t k = 0; k < alg.dim; ++k) {
                Vec ek = unit_vec(alg.field, alg.dim, k);
                Vec ei = unit_vec(alg.field, alg.dim, i);
                Vec ej = unit_vec(alg.field, alg.dim, j);
                Vec lhs = vec_sub(
                    multiply(alg, Product::Circ, multiply_basis(alg, Product::Circ, i, j), ek),
                    multiply(alg, Product::Circ, ei, multiply_basis(alg, Product::Circ, j, k)));
                Vec rhs = vec_sub(
                    multiply(alg, Product::Circ, multiply_basis(alg, Product::Circ, j, i), ek),
                    multiply(alg, Product::Circ, ej, multiply_basis(alg, Product::Circ, i, k)));
                if (lhs != rhs)
                    return Verdict::bad("novikov-left-sym", {{ll(i), ll(j), ll(k)}, lhs, rhs});
            }
    return Verdict::ok("novikov-left-sym");
}

// (a o b) o c = (a o c) o b
Verdict novikov_right_comm(const Algebra& alg) {
    for (std::size_t i = 0; i < alg.dim; ++i)
        for (std::size_t j = 0; j < alg.dim; ++j)
            for (std::size_t k = 0; k < alg.dim; ++k) {
                Vec lhs = multiply(alg, Product::Circ, multiply_basis(alg, Product::Circ, i, j),
                                   unit_vec(alg.field, alg.dim, k));
                Vec rhs = multiply(alg, Product::Circ, multiply_basis(alg, Product::Circ, i, k),
                                   unit_vec(alg.field, alg.dim, j));
                if (lhs != rhs)
                    return Verdict::bad("novikov-right-comm", {{ll(i), ll(j), ll(k)}, lhs, rhs});
            }
    return Verdict::ok("novikov-right-comm");
}

// (a . b) o c = a . (b o c)
Verdict compat_left_mult(const Algebra& alg, const char* name) {
    for (std::size_t i = 0; i < alg.dim; ++i)
        for (std::size_t j = 0; j < alg.dim; ++j)
            for (std::size_t k = 0; k < alg.dim; ++k) {
                Vec lhs = multiply(alg, Product::Circ, multiply_basis(alg, Product::Dot, i, j),
                                   unit_vec(alg.field, alg.dim, k));
                Vec rhs = multiply(alg, Product::Dot, unit_vec(alg.field, alg.dim, i),
                                   multiply_basis(alg, Product::Circ, j, k));
                if (lhs != rhs) return Verdict::bad(name, {{ll(i), ll(j), ll(k)}, lhs, rhs});
            }
    return Verdict::ok(name);
}

// a o (b . c) = (a o b) . c + b . (a o c)
Verdict diff_leibniz(const Algebra& alg) {
    for (std::size_t i = 0; i < alg.dim; ++i)
        for (std::size_t j = 0; j < alg.dim; ++j)
            for (std::size_t k = 0; k < alg.dim; ++k) {
                Vec lhs = multiply(alg, Product::Circ, unit_vec(alg.field, alg.dim, i),
                                   multiply_basis(alg, Product::Dot, j, k));
                Vec rhs = vec_add(
                    multiply(alg, Product::Dot, multiply_basis(alg, Product::Circ, i, j),
                             unit_vec(alg.field, alg.dim, k)),
                    multiply(alg, Product::Dot, unit_vec(alg.field, alg.dim, j),
                             multiply_basis(alg, Product::Circ, i, k)));
                if (lhs != rhs)
                    return Verdict::bad("diff-leibniz", {{ll(i), ll(j), ll(k)}, lhs, rhs});
            }
    return Verdict::ok("diff-leibniz");
}

// c o (a . b) = (c o a) . b + a . (c o b) - a . b . (c o 1)
Verdict unit_compat_leibniz(const Algebra& alg) {
    for (std::size_t c = 0; c < alg.dim; ++c) {
        Vec c_circ_unit =
            multiply(alg, Product::Circ, unit_vec(alg.field, alg.dim, c), alg.unit);
        for (std::size_t a = 0; a < alg.dim; ++a)
            for (std::size_t b = 0; b < alg.dim; ++b) {
                Vec ea = unit_vec(alg.field, alg.dim, a);
                Vec eb = unit_vec(alg.field, alg.dim, b);
                Vec lhs = multiply(alg, Product::Circ, unit_vec(alg.field, alg.dim, c),
                                   multiply_basis(alg, Product::Dot, a, b));
                Vec rhs = vec_add(
                    multiply(alg, Product::Dot, multiply_basis(alg, Product::Circ, c, a), eb),
                    multiply(alg, Product::Dot, ea, multiply_basis(alg, Product::Circ, c, b)));
                Vec correction = multiply(alg, Product::Dot,
                                          multiply_basis(alg, Product::Dot, a, b), c_circ_unit);
                rhs = vec_sub(rhs, correction);
                if (lhs != rhs)
                    return Verdict::bad("unit-compat-leibniz", {{ll(c), ll(a), ll(b)}, lhs, rhs});
            }
    }
    return Verdict::ok("unit-compat-leibniz");
}

Vec bracket(const Algebra& alg, const Vec& x, const Vec& y) {
    return multiply(alg, Product::Circ, x, y);
}

Verdict bracket_alternating(const Algebra& alg) {
    for (std::size_t i = 0; i < alg.dim; ++i) {
        Vec lhs = multiply_basis(alg, Product::Circ, i, i);
        if (!is_zero_vec(lhs))
            return Verdict::bad("bracket-alternating", {{ll(i)}, lhs, zero_vec(alg.field, alg.dim)});
    }
    return Verdict::ok("bracket-alternating");
}

Verdict bracket_antisym(const Algebra& alg) {
    for (std::size_t i = 0; i < alg.dim; ++i)
        for (std::size_t j = i + 1; j < alg.dim; ++j) {
            Vec lhs = multiply_basis(alg, Product::Circ, i, j);
            Vec rhs = vec_scale(-Scalar::one(alg.field), multiply_basis(alg, Product::Circ, j, i));
            if (lhs != rhs) return Verdict::bad("bracket-antisym", {{ll(i), ll(j)}, lhs, rhs});
        }
    return Verdict::ok("bracket-antisym");
}

Verdict bracket_jacobi(const Algebra& alg) {
    for (std::size_t i = 0; i < alg.dim; ++i)
        for (std::size_t j = 0; j < alg.dim; ++j)
            for (std::size_t k = 0; k < alg.dim; ++k) {
                Vec ei = unit_vec(alg.field, alg.dim, i);
                Vec ej = unit_vec(alg.field, alg.dim, j);
                Vec ek = unit_vec(alg.field, alg.dim, k);
                Vec sum = bracket(alg, ei, multiply_basis(alg, Product::Circ, j, k));
                sum = vec_add(sum, bracket(alg, ej, multiply_basis(alg, Product::Circ, k, i)));
                sum = vec_add(sum, bracket(alg, ek, multiply_basis(alg, Product::Circ, i, j)));
                if (!is_zero_vec(sum))
                    return Verdict::bad("bracket-jacobi",
                                        {{ll(i), ll(j), ll(k)}, sum, zero_vec(alg.field, alg.dim)});
            }
    return Verdict::ok("bracket-jacobi");
}

// [a, b . c] = [a, b] . c + b . [a, c] + b . c . [1, a]
Verdict bracket_unit_leibniz(const Algebra& alg) {
    for (std::size_t a = 0; a < alg.dim; ++a) {
        Vec ea = unit_vec(alg.field, alg.dim, a);
        Vec unit_bracket_a = bracket(alg, alg.unit, ea);
        for (std::size_t b = 0; b < alg.dim; ++b)
            for (std::size_t c = 0; c < alg.dim; ++c) {
                Vec eb = unit_vec(alg.field, alg.dim, b);
                Vec ec = unit_vec(alg.field, alg.dim, c);
                Vec lhs = bracket(alg, ea, multiply_basis(alg, Product::Dot, b, c));
                Vec rhs = multiply(alg, Product::Dot, multiply_basis(alg, Product::Circ, a, b), ec);
                rhs = vec_add(rhs, multiply(alg, Product::Dot, eb,
                                            multiply_basis(alg, Product::Circ, a, c)));
                rhs = vec_add(rhs, multiply(alg, Product::Dot,
                                            multiply_basis(alg, Product::Dot, b, c),
                                            unit_bracket_a));
                if (lhs != rhs)
                    return Verdict::bad("bracket-unit-leibniz", {{ll(a), ll(b), ll(c)}, lhs, rhs});
            }
    }
    return Verdict::ok("bracket-unit-leibniz");
}

// 2c . [a, b] = [c . a, b] + [a, c . b]
Verdict double_leibniz(const Algebra& alg) {
    Scalar two = Scalar::from_int(alg.field, 2);
    for (std::size_t c = 0; c < alg.dim; ++c)
        for (std::size_t a = 0; a < alg.dim; ++a)
            for (std::size_t b = 0; b < alg.dim; ++b) {
                Vec ec = unit_vec(alg.field, alg.dim, c);
                Vec ea = unit_vec(alg.field, alg.dim, a);
                Vec eb = unit_vec(alg.field, alg.dim, b);
                Vec lhs = vec_scale(
                    two, multiply(alg, Product::Dot, ec, multiply_basis(alg, Product::Circ, a, b)));
                Vec rhs = vec_add(bracket(alg, multiply_basis(alg, Product::Dot, c, a), eb),
                                  bracket(alg, ea, multiply_basis(alg, Product::Dot, c, b)));
                if (lhs != rhs)
                    return Verdict::bad("double-leibniz", {{ll(c), ll(a), ll(b)}, lhs, rhs});
            }
    return Verdict::ok("double-leibniz");
}

} // namespace

Verdict check_novikov(const Algebra& alg) {
    require_left_circ(alg);
    return first_failure({novikov_left_sym(alg), novikov_right_comm(alg)}, "novikov");
}

Verdict check_right_novikov(const Algebra& alg) {
    require_right_circ(alg);
    Verdict v = check_novikov(with_opposite_circ(alg));
    if (v.pass) return Verdict::ok("right-novikov");
    v.law = "right-novikov/" + v.law; // witness indices refer to the opposite product
    return v;
}

Verdict check_dnp(const Algebra& alg) {
    require_left_circ(alg);
    return first_failure({check_commutative(alg), check_associative(alg), novikov_left_sym(alg),
                          novikov_right_comm(alg), compat_left_mult(alg, "diff-left-mult"),
                          diff_leibniz(alg)},
                         "dnp");
}

Verdict check_jnp(const Algebra& alg) {
    require_left_circ(alg);
    return first_failure({check_unital_comm_assoc(alg), novikov_left_sym(alg),
                          novikov_right_comm(alg), compat_left_mult(alg, "unit-compat-left-mult"),
                          unit_compat_leibniz(alg)},
                         "jnp");
}

Verdict check_right_jnp(const Algebra& alg) {
    require_right_circ(alg);
    Verdict v = check_jnp(with_opposite_circ(alg));
    if (v.pass) return Verdict::ok("right-jnp");
    v.law = "right-jnp/" + v.law;
    return v;
}

Verdict check_jacobi(const Algebra& alg) {
    if (!alg.has_circ()) throw MissingProduct("no bracket tensor present");
    return first_failure({check_unital_comm_assoc(alg), bracket_alternating(alg),
                          bracket_antisym(alg), bracket_jacobi(alg), bracket_unit_leibniz(alg)},
                         "jacobi");
}

Verdict check_transposed_poisson(const Algebra& alg) {
    if (!alg.has_circ()) throw MissingProduct("no bracket tensor present");
    if (alg.field.characteristic() == 2)
        throw CharacteristicError("transposed Poisson law needs characteristic != 2");
    return first_failure({check_commutative(alg), check_associative(alg),
                          bracket_alternating(alg), bracket_antisym(alg), bracket_jacobi(alg),
                          double_leibniz(alg)},
                         "transposed-poisson");
}

Verdict check_derivation(const Algebra& alg, Product which, const Matrix& P) {
    if (P.rows() != alg.dim || P.cols() != alg.dim)
        throw DimMismatch("operator size does not match algebra dimension");
    for (std::size_t i = 0; i < alg.dim; ++i)
        for (std::size_t j = 0; j < alg.dim; ++j) {
            Vec lhs = P.apply(multiply_basis(alg, which, i, j));
            Vec rhs = vec_add(multiply(alg, which, P.column(i), unit_vec(alg.field, alg.dim, j)),
                              multiply(alg, which, unit_vec(alg.field, alg.dim, i), P.column(j)));
            if (lhs != rhs) return Verdict::bad("derivation", {{ll(i), ll(j)}, lhs, rhs});
        }
    return Verdict::ok("derivation");
}

Verdict check_admissible_pair(const Algebra& alg, const Matrix& P, const Matrix& Q) {
    Verdict d = check_derivation(alg, Product::Dot, P);
    if (!d.pass) return d;
    if (Q.rows() != alg.dim || Q.cols() != alg.dim)
        throw DimMismatch("operator size does not match algebra dimension");
    for (std::size_t i = 0; i < alg.dim; ++i)
        for (std::size_t j = 0; j < alg.dim; ++j) {
            Vec lhs = Q.apply(multiply_basis(alg, Product::Dot, i, j));
            Vec rhs = vec_sub(
                multiply(alg, Product::Dot, Q.column(i), unit_vec(alg.field, alg.dim, j)),
                multiply(alg, Product::Dot, unit_vec(alg.field, alg.dim, i), P.column(j)));
            if (lhs != rhs) return Verdict::bad("admissible", {{ll(i), ll(j)}, lhs, rhs});
        }
    return Verdict::ok("admissible");
}

Verdict check_simple_novikov(const Algebra& alg, std::uint64_t budget) {
    if (!alg.field.is_prime())
        throw ConstraintViolation("simplicity scan needs a finite field");
    const StructureTensor& t = alg.tensor(Product::Circ);
    std::uint64_t p = alg.field.p();
    std::uint64_t points = 1;
    for (std::size_t i = 0; i < alg.dim; ++i) {
        if (points > budget / p) throw BudgetExceeded("too many lines to enumerate");
        points *= p;
    }
    if (t.is_zero())
        return Verdict::bad("simple-novikov",
                            {{}, zero_vec(alg.field, alg.dim), zero_vec(alg.field, alg.dim)});

    std::vector<Matrix> mult_ops;
    for (std::size_t i = 0; i < alg.dim; ++i) {
        Vec ei = unit_vec(alg.field, alg.dim, i);
        mult_ops.push_back(left_mult_operator(alg, Product::Circ, ei));
        mult_ops.push_back(right_mult_operator(alg, Product::Circ, ei));
    }

    // enumerate one generator per line: first coordinate in canonical form
    std::vector<std::uint64_t> digits(alg.dim, 0);
    for (std::uint64_t code = 1; code < points; ++code) {
        std::uint64_t c = code;
        for (std::size_t i = 0; i < alg.dim; ++i) {
            digits[i] = c % p;
            c /= p;
        }
        std::size_t lead = 0;
        while (digits[lead] == 0) ++lead;
        if (digits[lead] != 1) continue; // not the canonical generator of its line

        Vec v = zero_vec(alg.field, alg.dim);
        for (std::size_t i = 0; i < alg.dim; ++i)
            v[i] = Scalar::from_int(alg.field, static_cast<long long>(digits[i]));

        // grow the subspace closure of v under all multiplication operators,
        // keeping a reduced basis between rounds
        std::vector<Vec> basis{v};
        for (bool grew = true; grew;) {
            grew = false;
            std::vector<Vec> rows_acc = basis;
            for (const Vec& g : basis)
                for (const Matrix& op : mult_ops) rows_acc.push_back(op.apply(g));
            RrefResult rr = rref(Matrix::from_rows(alg.field, rows_acc));
            if (rr.rank > basis.size()) {
                basis.clear();
                for (std::size_t i = 0; i < rr.rank; ++i) basis.push_back(rr.mat.row(i));
                grew = true;
            }
        }
        if (basis.size() < alg.dim)
            return Verdict::bad("simple-novikov", {{}, v, zero_vec(alg.field, alg.dim)});
    }
    return Verdict::ok("simple-novikov");
}

Verdict check_law(const Algebra& alg, const std::string& law, std::uint64_t budget) {
    if (law == "unital-comm-assoc" || law == "unital") return check_unital_comm_assoc(alg);
    if (law == "novikov") return check_novikov(alg);
    if (law == "right-novikov") return check_right_novikov(alg);
    if (law == "dnp") return check_dnp(alg);
    if (law == "jnp") return check_jnp(alg);
    if (law == "right-jnp") return check_right_jnp(alg);
    if (law == "jacobi") return check_jacobi(alg);
    if (law == "transposed-poisson") return check_transposed_poisson(alg);
    if (law == "simple-novikov") return check_simple_novikov(alg, budget);
    throw Error("unknown law '" + law + "'");
}

} // namespace jnp
