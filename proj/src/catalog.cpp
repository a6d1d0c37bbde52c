#include "jnp/catalog.hpp"

#include <algorithm>

#include "jnp/frobenius.hpp"

namespace jnp {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw ConstraintViolation(msg);
}

Scalar arg(const Field& f, const Assignment& asg, const std::string& name) {
    auto it = asg.find(name);
    if (it == asg.end()) return Scalar::zero(f);
    return Scalar::parse(f, it->second);
}

long long int_arg(const Assignment& asg, const std::string& name, long long fallback) {
    auto it = asg.find(name);
    if (it == asg.end()) return fallback;
    try {
        return std::stoll(it->second);
    } catch (const std::exception&) {
        throw ParseError("parameter " + name + " must be an integer");
    }
}

void known_params(const CatalogEntry& entry, const Assignment& asg) {
    for (const auto& [key, value] : asg) {
        bool ok = std::any_of(entry.params.begin(), entry.params.end(),
                              [&](const ParamSpec& p) { return p.name == key; });
        if (!ok)
            throw ConstraintViolation("entry '" + entry.name + "' has no parameter '" + key + "'");
    }
}

// ---- 2- and 3-dimensional families --------------------------------------

Algebra base_2d(const Field& f, bool idempotent_e2) {
    Algebra a = Algebra::make(f, 2);
    Scalar one = Scalar::one(f);
    a.dot.at(0, 0, 0) = one;
    a.dot.at(0, 1, 1) = one;
    a.dot.at(1, 0, 1) = one;
    if (idempotent_e2) a.dot.at(1, 1, 1) = one;
    a.unit = unit_vec(f, 2, 0);
    return a;
}

Algebra family_2d(const Field& f, int type, const Scalar& k1, const Scalar& k2) {
    Algebra a = base_2d(f, type == 3);
    StructureTensor t(f, 2);
    if (type == 1 || type == 2) {
        t.at(0, 0, 0) = k1;
        if (type == 2) t.at(0, 0, 1) = Scalar::one(f);
        t.at(0, 1, 1) = k2;
        t.at(1, 0, 1) = k1;
    } else {
        Scalar s = k1 + k2;
        t.at(0, 0, 0) = k1;
        t.at(0, 0, 1) = k2;
        t.at(0, 1, 1) = s;
        t.at(1, 0, 1) = s;
        t.at(1, 1, 1) = s;
    }
    a.circ = t;
    return a;
}

Algebra base_3d(const Field& f, int type) {
    Algebra a = Algebra::make(f, 3);
    Scalar one = Scalar::one(f);
    for (std::size_t i = 0; i < 3; ++i) {
        a.dot.at(0, i, i) = one;
        a.dot.at(i, 0, i) = one;
    }
    if (type <= 4)
        a.dot.at(1, 1, 2) = one; // truncated polynomials
    else if (type <= 6)
        a.dot.at(1, 1, 1) = one;
    else if (type == 7) {
        a.dot.at(1, 1, 1) = one;
        a.dot.at(2, 2, 2) = one;
    }
    // types 8..23 share the square-zero radical
    a.unit = unit_vec(f, 3, 0);
    return a;
}

Algebra family_3d(const Field& f, int type, const Scalar& k1, const Scalar& k2,
                  const Scalar& k3) {
    Algebra a = base_3d(f, type);
    StructureTensor t(f, 3);
    Scalar one = Scalar::one(f);
    Scalar two = Scalar::from_int(f, 2);
    if (type >= 1 && type <= 4) {
        t.at(0, 0, 0) = k1;
        t.at(0, 1, 1) = k2;
        t.at(0, 1, 2) = k3;
        t.at(0, 2, 2) = two * k2 - k1;
        t.at(1, 0, 1) = k1;
        t.at(1, 1, 2) = k2;
        t.at(2, 0, 2) = k1;
        if (type == 2) t.at(0, 0, 2) = one;
        if (type == 3) {
            t.at(0, 0, 1) = one;
            t.at(0, 0, 2) = one;
            t.at(1, 0, 2) = one;
        }
        if (type == 4) {
            t.at(0, 0, 1) = one;
            t.at(1, 0, 2) = one;
        }
    } else if (type == 5 || type == 6) {
        Scalar s = k1 + k2;
        t.at(0, 0, 0) = k1;
        t.at(0, 0, 1) = k2;
        if (type == 5) t.at(0, 0, 2) = one;
        t.at(0, 1, 1) = s;
        t.at(0, 2, 2) = k3;
        t.at(1, 0, 1) = s;
        t.at(1, 1, 1) = s;
        t.at(2, 0, 2) = k1;
    } else if (type == 7) {
        Scalar s12 = k1 + k2;
        Scalar s13 = k1 + k3;
        t.at(0, 0, 0) = k1;
        t.at(0, 0, 1) = k2;
        t.at(0, 0, 2) = k3;
        t.at(0, 1, 1) = s12;
        t.at(0, 2, 2) = s13;
        t.at(1, 0, 1) = s12;
        t.at(1, 1, 1) = s12;
        t.at(2, 0, 2) = s13;
        t.at(2, 2, 2) = s13;
    } else {
        // the sixteen families over the square-zero radical share
        // e1 o e1 = k1 e1 + ..., e2 o e1 = k1 e2, e3 o e1 = k1 e3
        t.at(0, 0, 0) = k1;
        t.at(1, 0, 1) = k1;
        t.at(2, 0, 2) = k1;
        auto row13 = [&](const Scalar& c2, const Scalar& c3) {
            t.at(0, 2, 1) = c2;
            t.at(0, 2, 2) = c3;
        };
        auto row12 = [&](const Scalar& c2, const Scalar& c3) {
            t.at(0, 1, 1) = c2;
            t.at(0, 1, 2) = c3;
        };
        Scalar z = Scalar::zero(f);
        switch (type) {
            case 8: t.at(0, 0, 1) = one; row12(z, one); row13(k2, k3); break;
            case 9: t.at(0, 0, 1) = one; row12(one, one); row13(k2, k3); break;
            case 10: t.at(0, 0, 2) = one; row12(k2, k3); row13(one, z); break;
            case 11: t.at(0, 0, 2) = one; row12(k2, k3); row13(one, one); break;
            case 12: t.at(0, 0, 1) = one; row12(one, z); row13(k2, k3); break;
            case 13: t.at(0, 0, 1) = one; row13(k2, k3); break;
            case 14: t.at(0, 0, 2) = one; row12(k2, k3); row13(z, one); break;
            case 15: t.at(0, 0, 2) = one; row12(k2, k3); break;
            case 16: t.at(0, 0, 1) = one; t.at(0, 0, 2) = one; row12(one, one); row13(k2, k3); break;
            case 17: t.at(0, 0, 1) = one; t.at(0, 0, 2) = one; row12(z, one); row13(k2, k3); break;
            case 18: t.at(0, 0, 1) = one; t.at(0, 0, 2) = one; row12(one, z); row13(k2, k3); break;
            case 19: t.at(0, 0, 1) = one; t.at(0, 0, 2) = one; row13(k2, k3); break;
            case 20: row12(k2, k3); row13(z, one); break;
            case 21: row12(k2, k3); row13(one, z); break;
            case 22: row12(k2, k3); break;
            case 23: row12(k2, k3); row13(one, one); break;
            default: throw Error("unknown 3-dimensional family");
        }
    }
    a.circ = t;
    return a;
}

// ---- prime-characteristic families ---------------------------------------

/// Binomial coefficient modulo p by the digit-wise (Lucas) product.
std::uint64_t binom_mod_p(long long top, long long bot, std::uint32_t p) {
    if (bot < 0 || top < 0 || bot > top) return 0;
    std::uint64_t result = 1;
    while (top > 0 || bot > 0) {
        std::uint64_t td = static_cast<std::uint64_t>(top % p);
        std::uint64_t bd = static_cast<std::uint64_t>(bot % p);
        if (bd > td) return 0;
        // small digit binomial
        std::uint64_t num = 1, den = 1;
        for (std::uint64_t i = 0; i < bd; ++i) {
            num = (num * ((td - i) % p)) % p;
            den = (den * ((i + 1) % p)) % p;
        }
        // den is invertible mod p: all factors < p
        std::uint64_t deninv = 1;
        for (std::uint64_t e = p - 2, base = den; e > 0; e >>= 1) {
            if (e & 1) deninv = (deninv * base) % p;
            base = (base * base) % p;
        }
        result = (result * ((num * deninv) % p)) % p;
        top /= p;
        bot /= p;
    }
    return result;
}

/// Places coeff * y_target, asserting vanishing when target is out of range.
void place_graded(StructureTensor& t, const Field& f, long long lo, long long hi,
                  std::size_t i_idx, std::size_t j_idx, long long target, std::uint64_t coeff) {
    if (target >= lo && target <= hi) {
        t.at(i_idx, j_idx, static_cast<std::size_t>(target - lo)) +=
            Scalar::from_int(f, static_cast<long long>(coeff));
    } else if (coeff % f.p() != 0) {
        throw InternalCheckFailure("graded product escapes the basis with nonzero coefficient");
    }
}

Algebra simple_novikov_family(const Field& f, long long n_param, const Scalar& a_par,
                              const Scalar& b_par) {
    require(f.is_prime() && f.p() > 2, "family needs a prime field with p > 2");
    require(n_param >= 1, "n must be at least 1");
    std::uint64_t dim = 1;
    for (long long i = 0; i < n_param; ++i) {
        dim *= f.p();
        require(dim <= 4096, "p^n is too large");
    }
    long long lo = -1, hi = static_cast<long long>(dim) - 2;
    Algebra alg = Algebra::make(f, static_cast<std::size_t>(dim));
    StructureTensor circ(f, alg.dim);
    for (long long i = lo; i <= hi; ++i)
        for (long long j = lo; j <= hi; ++j) {
            std::size_t ii = static_cast<std::size_t>(i - lo);
            std::size_t jj = static_cast<std::size_t>(j - lo);
            place_graded(alg.dot, f, lo, hi, ii, jj, i + j + 1, binom_mod_p(i + j + 2, j + 1, f.p()));
            place_graded(circ, f, lo, hi, ii, jj, i + j, binom_mod_p(i + j + 1, j, f.p()));
        }
    std::size_t top = alg.dim - 1; // y_{p^n - 2}
    circ.at(0, 0, top) += a_par;
    circ.at(0, 1, top) += b_par;
    alg.circ = circ;
    alg.unit = unit_vec(f, alg.dim, 0); // y_{-1}
    return alg;
}

Algebra char3_simple(const Field& f, const Scalar& k1, const Scalar& k2, const Scalar& k3,
                     const Scalar& a_par, const Scalar& b_par) {
    require(f.is_prime() && f.p() == 3, "family lives over F_3");
    require(!k1.is_zero(), "k1 must be nonzero");
    Algebra alg = Algebra::make(f, 3);
    // basis order y_{-1}, y_0, y_1
    alg.dot.at(0, 0, 0) = k1;
    alg.dot.at(0, 0, 1) = k2;
    alg.dot.at(0, 0, 2) = k3;
    alg.dot.at(0, 1, 1) = k1;
    alg.dot.at(0, 1, 2) = -k2;
    alg.dot.at(1, 0, 1) = k1;
    alg.dot.at(1, 0, 2) = -k2;
    alg.dot.at(0, 2, 2) = k1;
    alg.dot.at(2, 0, 2) = k1;
    alg.dot.at(1, 1, 2) = -k1;
    StructureTensor circ(f, 3);
    for (long long i = -1; i <= 1; ++i)
        for (long long j = -1; j <= 1; ++j)
            place_graded(circ, f, -1, 1, static_cast<std::size_t>(i + 1),
                         static_cast<std::size_t>(j + 1), i + j, binom_mod_p(i + j + 1, j, 3));
    circ.at(0, 0, 2) += a_par;
    circ.at(0, 1, 2) += b_par;
    alg.circ = circ;
    Scalar k1inv = k1.inverse();
    alg.unit = {k1inv, -(k1inv * k1inv) * k2, -(k1inv * k1inv * k3 + k1inv * k1inv * k1inv * k2 * k2)};
    return alg;
}

// ---- worked examples ------------------------------------------------------

// Truncated polynomials with the degree (Euler) derivation x d/dx, which
// descends to the quotient in every characteristic; plain d/dx does not
// (it violates the derivation law at (x, x^{m-1}) unless char divides m).
Algebra truncated_polynomial(const Field& f, long long m) {
    require(m >= 1 && m <= 64, "degree bound must be in [1, 64]");
    std::size_t n = static_cast<std::size_t>(m);
    Algebra alg = Algebra::make(f, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j + i < n; ++j) alg.dot.at(i, j, i + j) = Scalar::one(f);
    alg.unit = unit_vec(f, n, 0);
    Matrix P(f, n, n); // x d/dx
    for (std::size_t j = 1; j < n; ++j)
        P.at(j, j) = Scalar::from_int(f, static_cast<long long>(j));
    StructureTensor circ(f, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 1; j < n; ++j)
            if (i + j < n) circ.at(i, j, i + j) = Scalar::from_int(f, static_cast<long long>(j));
    alg.circ = circ;
    alg.maps.emplace("P", P);
    return alg;
}

Algebra conformal_3d(const Field& f) {
    Algebra alg = Algebra::make(f, 3);
    Scalar one = Scalar::one(f);
    for (std::size_t i = 0; i < 3; ++i) {
        alg.dot.at(0, i, i) = one;
        alg.dot.at(i, 0, i) = one;
    }
    alg.dot.at(1, 1, 1) = one;
    alg.unit = unit_vec(f, 3, 0);
    StructureTensor circ(f, 3);
    circ.at(0, 0, 2) = one;
    circ.at(0, 2, 2) = -one;
    alg.circ = circ;
    return alg;
}

Emission diff_frobenius_4d(const Field& f) {
    require(f.is_rational(), "example lives in characteristic 0");
    Algebra alg = Algebra::make(f, 4);
    Scalar one = Scalar::one(f);
    for (std::size_t i = 0; i < 4; ++i) {
        alg.dot.at(0, i, i) = one;
        alg.dot.at(i, 0, i) = one;
    }
    alg.dot.at(1, 1, 2) = one;
    alg.dot.at(1, 2, 3) = one;
    alg.dot.at(2, 1, 3) = one;
    alg.unit = unit_vec(f, 4, 0);
    Matrix P(f, 4, 4);
    P.at(1, 1) = Scalar::parse(f, "1/3");
    P.at(2, 1) = Scalar::parse(f, "1/2");
    P.at(3, 1) = one;
    P.at(2, 2) = Scalar::parse(f, "2/3");
    P.at(3, 2) = one;
    P.at(3, 3) = one;
    alg.maps.emplace("P", P);
    Matrix G(f, 4, 4);
    G.at(0, 3) = one;
    G.at(3, 0) = one;
    G.at(1, 2) = one;
    G.at(2, 1) = one;
    alg.form = G;
    return {alg, G};
}

Emission closing_pair_factor(const Field& f, bool right) {
    Algebra alg = base_2d(f, false);
    StructureTensor t(f, 2);
    Scalar one = Scalar::one(f);
    Scalar minus_two = Scalar::from_int(f, -2);
    if (!right) {
        t.at(0, 0, 0) = one;
        t.at(0, 1, 1) = minus_two;
        t.at(1, 0, 1) = one;
        alg.circ_orientation = Orientation::Left;
    } else {
        t.at(0, 0, 0) = one;
        t.at(0, 1, 1) = one;
        t.at(1, 0, 1) = minus_two;
        alg.circ_orientation = Orientation::Right;
    }
    alg.circ = t;
    Matrix G(f, 2, 2);
    G.at(0, 1) = one;
    G.at(1, 0) = one;
    alg.form = G;
    return {alg, G};
}

Emission closing_pair_tensor(const Field& f) {
    Algebra alg = Algebra::make(f, 4);
    Scalar one = Scalar::one(f);
    Scalar three = Scalar::from_int(f, 3);
    // basis e1(x)e1, e1(x)e2, e2(x)e1, e2(x)e2
    for (std::size_t i = 0; i < 4; ++i) {
        alg.dot.at(0, i, i) = one;
        alg.dot.at(i, 0, i) = one;
    }
    alg.dot.at(1, 2, 3) = one;
    alg.dot.at(2, 1, 3) = one;
    alg.unit = unit_vec(f, 4, 0);
    StructureTensor br(f, 4);
    br.at(0, 1, 1) = three;
    br.at(1, 0, 1) = -three;
    br.at(0, 2, 2) = -three;
    br.at(2, 0, 2) = three;
    br.at(1, 2, 3) = three;
    br.at(2, 1, 3) = -three;
    alg.circ = br;
    Matrix G(f, 4, 4);
    G.at(0, 3) = one;
    G.at(3, 0) = one;
    G.at(1, 2) = one;
    G.at(2, 1) = one;
    alg.form = G;
    return {alg, G};
}

// ---- entry table ----------------------------------------------------------

ParamSpec k_par(const std::string& n) {
    return {n, "family parameter"};
}
ParamSpec g_par(const std::string& n) {
    return {n, "form parameter"};
}

void no_char_2_or_3(const Field& f) {
    require(f.characteristic() != 2 && f.characteristic() != 3,
            "table row needs characteristic not in {2, 3}");
}

std::vector<CatalogEntry> build_entries() {
    std::vector<CatalogEntry> v;

    v.push_back({"2d-A1", "2-dim commutative: e2^2 = 0", "unital-comm-assoc", "any", {},
                 [](const Field& f, const Assignment&) -> Emission {
                     return {base_2d(f, false), std::nullopt};
                 }});
    v.push_back({"2d-A2", "2-dim commutative: e2^2 = e2", "unital-comm-assoc", "any", {},
                 [](const Field& f, const Assignment&) -> Emission {
                     return {base_2d(f, true), std::nullopt};
                 }});

    for (int type = 1; type <= 3; ++type) {
        v.push_back({"2d-J" + std::to_string(type), "2-dim family", "jnp", "any",
                     {k_par("k1"), k_par("k2")},
                     [type](const Field& f, const Assignment& asg) -> Emission {
                         return {family_2d(f, type, arg(f, asg, "k1"), arg(f, asg, "k2")),
                                 std::nullopt};
                     }});
    }
    for (int type = 1; type <= 23; ++type) {
        v.push_back({"3d-J" + std::to_string(type), "3-dim family", "jnp", "any",
                     {k_par("k1"), k_par("k2"), k_par("k3")},
                     [type](const Field& f, const Assignment& asg) -> Emission {
                         return {family_3d(f, type, arg(f, asg, "k1"), arg(f, asg, "k2"),
                                           arg(f, asg, "k3")),
                                 std::nullopt};
                     }});
    }

    v.push_back({"char3-simple", "3-dim with simple second product", "jnp", "char 3",
                 {k_par("k1"), k_par("k2"), k_par("k3"), k_par("a"), k_par("b")},
                 [](const Field& f, const Assignment& asg) -> Emission {
                     return {char3_simple(f, arg(f, asg, "k1"), arg(f, asg, "k2"),
                                          arg(f, asg, "k3"), arg(f, asg, "a"), arg(f, asg, "b")),
                             std::nullopt};
                 }});
    v.push_back({"charp-simple", "p^n-dim graded family with simple second product", "jnp",
                 "char p > 2",
                 {{"n", "power of p giving the dimension"}, k_par("a"), k_par("b")},
                 [](const Field& f, const Assignment& asg) -> Emission {
                     return {simple_novikov_family(f, int_arg(asg, "n", 1), arg(f, asg, "a"),
                                                   arg(f, asg, "b")),
                             std::nullopt};
                 }});

    v.push_back({"trunc-poly", "truncated polynomials with d/dx", "jnp", "any",
                 {{"m", "dimension (truncation degree)"}},
                 [](const Field& f, const Assignment& asg) -> Emission {
                     return {truncated_polynomial(f, int_arg(asg, "m", 3)), std::nullopt};
                 }});
    v.push_back({"3d-conformal", "3-dim example used for product deformations", "jnp", "any", {},
                 [](const Field& f, const Assignment&) -> Emission {
                     return {conformal_3d(f), std::nullopt};
                 }});
    v.push_back({"4d-diff-frobenius", "4-dim commutative algebra with derivation and pairing",
                 "dot-frobenius", "char 0", {},
                 [](const Field& f, const Assignment&) -> Emission {
                     return diff_frobenius_4d(f);
                 }});
    v.push_back({"final-frobenius-A", "left factor of the closing tensor example", "quadratic",
                 "any", {},
                 [](const Field& f, const Assignment&) -> Emission {
                     return closing_pair_factor(f, false);
                 }});
    v.push_back({"final-frobenius-B", "right factor of the closing tensor example",
                 "right-quadratic", "any", {},
                 [](const Field& f, const Assignment&) -> Emission {
                     return closing_pair_factor(f, true);
                 }});
    v.push_back({"final-frobenius-pair", "the closing 4-dim bracket algebra with its form",
                 "frobenius-jacobi", "any", {},
                 [](const Field& f, const Assignment&) -> Emission {
                     return closing_pair_tensor(f);
                 }});

    // quadratic table rows; pinned parameters are computed, free ones are taken
    auto quad = [&](const std::string& name, const std::string& note,
                    std::vector<ParamSpec> params,
                    std::function<Emission(const Field&, const Assignment&)> emit) {
        v.push_back({name, "quadratic table row", "quadratic", note, std::move(params),
                     std::move(emit)});
    };

    quad("quad-2d-J1-k0", "any", {g_par("g11"), g_par("g12")},
         [](const Field& f, const Assignment& asg) -> Emission {
             Scalar g11 = arg(f, asg, "g11"), g12 = arg(f, asg, "g12");
             require(!g12.is_zero(), "g12 must be nonzero");
             Algebra a = family_2d(f, 1, Scalar::zero(f), Scalar::zero(f));
             Matrix G(f, 2, 2);
             G.at(0, 0) = g11;
             G.at(0, 1) = g12;
             G.at(1, 0) = g12;
             a.form = G;
             return {a, G};
         });
    quad("quad-2d-J1", "any", {k_par("k1"), g_par("g12")},
         [](const Field& f, const Assignment& asg) -> Emission {
             Scalar k1 = arg(f, asg, "k1"), g12 = arg(f, asg, "g12");
             require(!k1.is_zero(), "k1 must be nonzero");
             require(!g12.is_zero(), "g12 must be nonzero");
             Algebra a = family_2d(f, 1, k1, Scalar::from_int(f, -2) * k1);
             Matrix G(f, 2, 2);
             G.at(0, 1) = g12;
             G.at(1, 0) = g12;
             a.form = G;
             return {a, G};
         });
    quad("quad-2d-J2", "any", {k_par("k1"), g_par("g12")},
         [](const Field& f, const Assignment& asg) -> Emission {
             Scalar k1 = arg(f, asg, "k1"), g12 = arg(f, asg, "g12");
             require(!k1.is_zero(), "k1 must be nonzero");
             require(!g12.is_zero(), "g12 must be nonzero");
             Algebra a = family_2d(f, 2, k1, Scalar::from_int(f, -2) * k1);
             Matrix G(f, 2, 2);
             G.at(0, 0) = -(g12 / k1);
             G.at(0, 1) = g12;
             G.at(1, 0) = g12;
             a.form = G;
             return {a, G};
         });
    quad("quad-2d-J3-k0", "any", {g_par("g11"), g_par("g12")},
         [](const Field& f, const Assignment& asg) -> Emission {
             Scalar g11 = arg(f, asg, "g11"), g12 = arg(f, asg, "g12");
             require(!g12.is_zero(), "g12 must be nonzero");
             require(g11 != g12, "g11 must differ from g12");
             Algebra a = family_2d(f, 3, Scalar::zero(f), Scalar::zero(f));
             Matrix G(f, 2, 2);
             G.at(0, 0) = g11;
             G.at(0, 1) = g12;
             G.at(1, 0) = g12;
             G.at(1, 1) = g12;
             a.form = G;
             return {a, G};
         });

    auto sym3 = [](const Field& f, const Scalar& g11, const Scalar& g12, const Scalar& g13,
                   const Scalar& g22, const Scalar& g23, const Scalar& g33) {
        Matrix G(f, 3, 3);
        G.at(0, 0) = g11;
        G.at(0, 1) = g12;
        G.at(1, 0) = g12;
        G.at(0, 2) = g13;
        G.at(2, 0) = g13;
        G.at(1, 1) = g22;
        G.at(1, 2) = g23;
        G.at(2, 1) = g23;
        G.at(2, 2) = g33;
        return G;
    };

    quad("quad-3d-J1-k0", "any", {g_par("g11"), g_par("g12"), g_par("g13")},
         [sym3](const Field& f, const Assignment& asg) -> Emission {
             Scalar g11 = arg(f, asg, "g11"), g12 = arg(f, asg, "g12"), g13 = arg(f, asg, "g13");
             require(!g13.is_zero(), "g13 must be nonzero");
             Scalar z = Scalar::zero(f);
             Algebra a = family_3d(f, 1, z, z, z);
             Matrix G = sym3(f, g11, g12, g13, g13, z, z);
             a.form = G;
             return {a, G};
         });
    auto half_pinned = [sym3](int type) {
        return [type, sym3](const Field& f, const Assignment& asg) -> Emission {
            no_char_2_or_3(f);
            Scalar k1 = arg(f, asg, "k1"), k3 = arg(f, asg, "k3"), g13 = arg(f, asg, "g13");
            require(!k1.is_zero(), "k1 must be nonzero");
            require(!g13.is_zero(), "g13 must be nonzero");
            Scalar k2 = -(k1 / Scalar::from_int(f, 2));
            Algebra a = family_3d(f, type, k1, k2, k3);
            Scalar three_k1 = Scalar::from_int(f, 3) * k1;
            Scalar g12 = -(Scalar::from_int(f, 2) * k3 / three_k1) * g13;
            Scalar g11 = Scalar::zero(f);
            Scalar two_k3_plus_4 = Scalar::from_int(f, 2) * k3 + Scalar::from_int(f, 4);
            if (type == 2) g11 = -(g13 / k1);
            if (type == 3) {
                g11 = (two_k3_plus_4 - three_k1) / (three_k1 * k1) * g13;
                g12 = -(two_k3_plus_4 / three_k1) * g13;
            }
            if (type == 4) {
                g11 = two_k3_plus_4 / (three_k1 * k1) * g13;
                g12 = -(two_k3_plus_4 / three_k1) * g13;
            }
            Matrix G = sym3(f, g11, g12, g13, g13, Scalar::zero(f), Scalar::zero(f));
            a.form = G;
            return {a, G};
        };
    };
    quad("quad-3d-J1", "char not in {2,3}", {k_par("k1"), k_par("k3"), g_par("g13")},
         half_pinned(1));
    quad("quad-3d-J2", "char not in {2,3}", {k_par("k1"), k_par("k3"), g_par("g13")},
         half_pinned(2));
    quad("quad-3d-J3", "char not in {2,3}", {k_par("k1"), k_par("k3"), g_par("g13")},
         half_pinned(3));
    quad("quad-3d-J4", "char not in {2,3}", {k_par("k1"), k_par("k3"), g_par("g13")},
         half_pinned(4));
    quad("quad-3d-J3-k0", "any", {g_par("g11"), g_par("g13")},
         [sym3](const Field& f, const Assignment& asg) -> Emission {
             Scalar g11 = arg(f, asg, "g11"), g13 = arg(f, asg, "g13");
             require(!g13.is_zero(), "g13 must be nonzero");
             Scalar z = Scalar::zero(f);
             Algebra a = family_3d(f, 3, z, z, Scalar::from_int(f, -2));
             Matrix G = sym3(f, g11, -g13, g13, g13, z, z);
             a.form = G;
             return {a, G};
         });
    quad("quad-3d-J4-k0", "any", {g_par("g11"), g_par("g13")},
         [sym3](const Field& f, const Assignment& asg) -> Emission {
             Scalar g11 = arg(f, asg, "g11"), g13 = arg(f, asg, "g13");
             require(!g13.is_zero(), "g13 must be nonzero");
             Scalar z = Scalar::zero(f);
             Algebra a = family_3d(f, 4, z, z, Scalar::from_int(f, -2));
             Matrix G = sym3(f, g11, z, g13, g13, z, z);
             a.form = G;
             return {a, G};
         });
    quad("quad-3d-J5", "any", {k_par("k1"), g_par("g12"), g_par("g13")},
         [sym3](const Field& f, const Assignment& asg) -> Emission {
             Scalar k1 = arg(f, asg, "k1"), g12 = arg(f, asg, "g12"), g13 = arg(f, asg, "g13");
             require(!k1.is_zero(), "k1 must be nonzero");
             require(!g12.is_zero() && !g13.is_zero(), "g12 and g13 must be nonzero");
             Scalar m2 = Scalar::from_int(f, -2);
             Algebra a = family_3d(f, 5, k1, -k1, m2 * k1);
             Matrix G = sym3(f, g12 - g13 / k1, g12, g13, g12, Scalar::zero(f), Scalar::zero(f));
             a.form = G;
             return {a, G};
         });
    quad("quad-3d-J6-k0", "any", {g_par("g11"), g_par("g12"), g_par("g13")},
         [sym3](const Field& f, const Assignment& asg) -> Emission {
             Scalar g11 = arg(f, asg, "g11"), g12 = arg(f, asg, "g12"), g13 = arg(f, asg, "g13");
             require(!g12.is_zero() && !g13.is_zero(), "g12 and g13 must be nonzero");
             Scalar z = Scalar::zero(f);
             Algebra a = family_3d(f, 6, z, z, z);
             Matrix G = sym3(f, g11, g12, g13, g12, z, z);
             a.form = G;
             return {a, G};
         });
    quad("quad-3d-J6", "any", {k_par("k1"), g_par("g12"), g_par("g13")},
         [sym3](const Field& f, const Assignment& asg) -> Emission {
             Scalar k1 = arg(f, asg, "k1"), g12 = arg(f, asg, "g12"), g13 = arg(f, asg, "g13");
             require(!k1.is_zero(), "k1 must be nonzero");
             require(!g12.is_zero() && !g13.is_zero(), "g12 and g13 must be nonzero");
             Algebra a = family_3d(f, 6, k1, -k1, Scalar::from_int(f, -2) * k1);
             Matrix G = sym3(f, g12, g12, g13, g12, Scalar::zero(f), Scalar::zero(f));
             a.form = G;
             return {a, G};
         });
    quad("quad-3d-J7-k0", "any", {g_par("g11"), g_par("g12"), g_par("g13")},
         [sym3](const Field& f, const Assignment& asg) -> Emission {
             Scalar g11 = arg(f, asg, "g11"), g12 = arg(f, asg, "g12"), g13 = arg(f, asg, "g13");
             require(!g12.is_zero() && !g13.is_zero(), "g12 and g13 must be nonzero");
             require(g11 != g12 + g13, "g11 must differ from g12 + g13");
             Scalar z = Scalar::zero(f);
             Algebra a = family_3d(f, 7, z, z, z);
             Matrix G = sym3(f, g11, g12, g13, g12, z, g13);
             a.form = G;
             return {a, G};
         });

    return v;
}

} // namespace

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = build_entries();
    return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
    for (const CatalogEntry& e : catalog_entries())
        if (e.name == name) return e;
    throw Error("no catalog entry named '" + name + "'");
}

Emission catalog_emit(const std::string& name, const Field& f, const Assignment& asg) {
    const CatalogEntry& entry = catalog_entry(name);
    known_params(entry, asg);
    return entry.emit(f, asg);
}

Verdict verify_emission(const CatalogEntry& entry, const Emission& em) {
    const Algebra& alg = em.algebra;
    if (entry.law == "unital-comm-assoc") return check_unital_comm_assoc(alg);
    if (entry.law == "jnp") return check_jnp(alg);
    if (entry.law == "right-jnp") return check_right_jnp(alg);
    if (entry.law == "quadratic") return check_quadratic(alg, *em.form);
    if (entry.law == "right-quadratic") {
        Algebra op = alg;
        op.circ = alg.tensor(Product::Circ).transposed();
        op.circ_orientation = Orientation::Left;
        return check_quadratic(op, *em.form);
    }
    if (entry.law == "frobenius-jacobi") return check_frobenius_jacobi(alg, *em.form);
    if (entry.law == "dot-frobenius")
        return check_dot_frobenius(alg, alg.named_map("P"), *em.form);
    throw Error("entry '" + entry.name + "' asserts unknown law '" + entry.law + "'");
}

namespace {

std::vector<Assignment> sweep(const std::vector<std::pair<std::string, std::vector<std::string>>>& axes) {
    std::vector<Assignment> out{Assignment{}};
    for (const auto& [name, values] : axes) {
        std::vector<Assignment> next;
        for (const Assignment& base : out)
            for (const std::string& val : values) {
                Assignment a = base;
                a[name] = val;
                next.push_back(std::move(a));
            }
        out = std::move(next);
    }
    return out;
}

} // namespace

VerifyPlan default_verify_plan() {
    VerifyPlan plan;
    Field q = Field::rational();
    const std::vector<std::string> kvals{"0", "1", "-1", "2"};

    auto add = [&](const std::string& name, const Field& f, std::vector<Assignment> assignments) {
        auto& slot = plan.cases[name];
        for (Assignment& a : assignments) slot.push_back({f, std::move(a)});
    };

    add("2d-A1", q, {{}});
    add("2d-A2", q, {{}});
    for (int t = 1; t <= 3; ++t)
        add("2d-J" + std::to_string(t), q, sweep({{"k1", kvals}, {"k2", kvals}}));
    for (int t = 1; t <= 23; ++t)
        add("3d-J" + std::to_string(t), q, sweep({{"k1", kvals}, {"k2", kvals}, {"k3", kvals}}));

    Field f3 = Field::prime(3);
    add("char3-simple", f3,
        sweep({{"k1", {"1", "2"}},
               {"k2", {"0", "1", "2"}},
               {"k3", {"0", "1", "2"}},
               {"a", {"0", "1", "2"}},
               {"b", {"0", "1", "2"}}}));
    add("charp-simple", f3, sweep({{"n", {"1"}}, {"a", {"0", "1"}}, {"b", {"0", "1"}}}));
    add("charp-simple", Field::prime(5), sweep({{"a", {"0", "1"}}, {"b", {"0", "1"}}}));

    add("trunc-poly", q, {{{"m", "1"}}, {{"m", "3"}}, {{"m", "4"}}});
    add("3d-conformal", q, {{}});
    add("4d-diff-frobenius", q, {{}});
    add("final-frobenius-A", q, {{}});
    add("final-frobenius-B", q, {{}});
    add("final-frobenius-pair", q, {{}});

    add("quad-2d-J1-k0", q, sweep({{"g11", {"0", "2"}}, {"g12", {"1", "-1"}}}));
    add("quad-2d-J1", q, sweep({{"k1", {"1", "2"}}, {"g12", {"1", "3"}}}));
    add("quad-2d-J2", q, sweep({{"k1", {"1", "-1"}}, {"g12", {"1", "2"}}}));
    add("quad-2d-J3-k0", q, {{{"g11", "0"}, {"g12", "1"}}, {{"g11", "2"}, {"g12", "1"}}});
    add("quad-3d-J1-k0", q, sweep({{"g11", {"0", "1"}}, {"g12", {"0", "1"}}, {"g13", {"1", "2"}}}));
    for (const char* row : {"quad-3d-J1", "quad-3d-J2", "quad-3d-J3", "quad-3d-J4"})
        add(row, q, sweep({{"k1", {"1", "2"}}, {"k3", {"0", "1"}}, {"g13", {"1"}}}));
    add("quad-3d-J3-k0", q, sweep({{"g11", {"0", "1"}}, {"g13", {"1", "2"}}}));
    add("quad-3d-J4-k0", q, sweep({{"g11", {"0", "1"}}, {"g13", {"1", "2"}}}));
    add("quad-3d-J5", q, sweep({{"k1", {"1", "2"}}, {"g12", {"1"}}, {"g13", {"1", "2"}}}));
    add("quad-3d-J6-k0", q, sweep({{"g11", {"0", "1"}}, {"g12", {"1"}}, {"g13", {"1", "2"}}}));
    add("quad-3d-J6", q, sweep({{"k1", {"1", "2"}}, {"g12", {"1"}}, {"g13", {"1", "2"}}}));
    add("quad-3d-J7-k0", q, {{{"g11", "0"}, {"g12", "1"}, {"g13", "1"}},
                             {{"g11", "3"}, {"g12", "1"}, {"g13", "1"}}});
    return plan;
}

bool VerifyReport::all_pass() const {
    for (const EntryReport& e : entries)
        if (e.failures != 0) return false;
    return true;
}

VerifyReport catalog_verify(const VerifyPlan& plan) {
    const VerifyPlan& effective = plan.cases.empty() ? default_verify_plan() : plan;
    VerifyReport report;
    for (const auto& [name, cases] : effective.cases) {
        const CatalogEntry& entry = catalog_entry(name);
        EntryReport er;
        er.name = name;
        for (const VerifyCase& vc : cases) {
            Emission em = catalog_emit(name, vc.field, vc.assignment);
            Verdict verdict = verify_emission(entry, em);
            ++er.instances;
            if (!verdict.pass) {
                ++er.failures;
                if (!er.first_failure) er.first_failure = verdict;
            }
        }
        report.entries.push_back(std::move(er));
    }
    return report;
}

InvariantProfile invariant_profile(const Algebra& alg) {
    InvariantProfile prof;
    std::size_t n = alg.dim;
    const Field& f = alg.field;

    auto annihilator_dim = [&](Product which) {
        std::vector<Vec> rows;
        for (std::size_t i = 0; i < n; ++i) {
            Vec e = unit_vec(f, n, i);
            Matrix L = left_mult_operator(alg, which, e);
            Matrix R = right_mult_operator(alg, which, e);
            // a is annihilated when e_i * a and a * e_i vanish for all i
            for (std::size_t r = 0; r < n; ++r) {
                rows.push_back(L.row(r));
                rows.push_back(R.row(r));
            }
        }
        return kernel_basis(Matrix::from_rows(f, rows)).size();
    };

    prof.dot_annihilator = annihilator_dim(Product::Dot);
    if (!alg.has_circ()) {
        prof.circ_annihilator = n;
        prof.symmetrized_circ_rank = 0;
        prof.integral_dim = n;
        return prof;
    }
    prof.circ_annihilator = annihilator_dim(Product::Circ);

    std::vector<Vec> sym_rows;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            sym_rows.push_back(vec_add(multiply_basis(alg, Product::Circ, i, j),
                                       multiply_basis(alg, Product::Circ, j, i)));
    prof.symmetrized_circ_rank = rank(Matrix::from_rows(f, sym_rows));

    std::vector<Vec> integral_rows;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec lhs = multiply(alg, Product::Dot, multiply_basis(alg, Product::Circ, i, j),
                                   unit_vec(f, n, k));
                Vec mix = vec_add(multiply_basis(alg, Product::Circ, i, k),
                                  multiply_basis(alg, Product::Circ, k, i));
                integral_rows.push_back(
                    vec_add(lhs, multiply(alg, Product::Dot, unit_vec(f, n, j), mix)));
            }
    prof.integral_dim = kernel_basis(Matrix::from_rows(f, integral_rows)).size();
    return prof;
}

} // namespace jnp
