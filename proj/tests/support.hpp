#ifndef JNP_TESTS_SUPPORT_HPP
#define JNP_TESTS_SUPPORT_HPP

#include <random>
#include <string>
#include <vector>

#include "jnp/catalog.hpp"
#include "jnp/construct.hpp"

namespace jnp::testing {

struct NamedAlgebra {
    std::string name;
    Algebra alg;
};

inline Algebra emit(const std::string& entry, const Field& f, const Assignment& asg = {}) {
    return catalog_emit(entry, f, asg).algebra;
}

/// Algebras over the rationals used across the suites: a spread of the
/// catalog families at fixed parameters.
inline std::vector<NamedAlgebra> rational_jnp_corpus() {
    Field q = Field::rational();
    std::vector<NamedAlgebra> v;
    auto add = [&](const std::string& entry, const Assignment& asg, const std::string& tag) {
        v.push_back({entry + tag, emit(entry, q, asg)});
    };
    add("2d-J1", {}, "(0,0)");
    add("2d-J1", {{"k1", "1"}, {"k2", "0"}}, "(1,0)");
    add("2d-J1", {{"k1", "1"}, {"k2", "-2"}}, "(1,-2)");
    add("2d-J2", {{"k1", "1"}, {"k2", "-2"}}, "(1,-2)");
    add("2d-J2", {{"k1", "0"}, {"k2", "1"}}, "(0,1)");
    add("2d-J3", {}, "(0,0)");
    add("2d-J3", {{"k1", "1"}, {"k2", "0"}}, "(1,0)");
    add("3d-J1", {{"k1", "1"}, {"k2", "2"}, {"k3", "3"}}, "(1,2,3)");
    add("3d-J5", {{"k1", "1"}, {"k2", "2"}, {"k3", "3"}}, "(1,2,3)");
    add("3d-J7", {{"k1", "1"}, {"k2", "0"}, {"k3", "2"}}, "(1,0,2)");
    add("3d-J13", {{"k1", "1"}, {"k2", "1"}, {"k3", "1"}}, "(1,1,1)");
    add("3d-J20", {{"k1", "2"}, {"k2", "1"}, {"k3", "0"}}, "(2,1,0)");
    add("trunc-poly", {{"m", "3"}}, "(3)");
    add("trunc-poly", {{"m", "4"}}, "(4)");
    add("3d-conformal", {}, "");
    add("final-frobenius-A", {}, "");
    return v;
}

inline std::vector<NamedAlgebra> prime_jnp_corpus() {
    std::vector<NamedAlgebra> v;
    Field f3 = Field::prime(3);
    v.push_back({"char3-simple(1,0,0,0,0)",
                 emit("char3-simple", f3, {{"k1", "1"}})});
    v.push_back({"char3-simple(2,1,0,1,2)",
                 emit("char3-simple", f3,
                      {{"k1", "2"}, {"k2", "1"}, {"k3", "0"}, {"a", "1"}, {"b", "2"}})});
    v.push_back({"charp-simple(5,1,0,1)",
                 emit("charp-simple", Field::prime(5), {{"n", "1"}, {"a", "0"}, {"b", "1"}})});
    return v;
}

using Rng = std::mt19937_64;

inline Scalar rand_scalar(Rng& rng, const Field& f, int lo = -3, int hi = 3) {
    std::uniform_int_distribution<int> d(lo, hi);
    return Scalar::from_int(f, d(rng));
}

inline Vec rand_vec(Rng& rng, const Field& f, std::size_t n, int lo = -3, int hi = 3) {
    Vec v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(rand_scalar(rng, f, lo, hi));
    return v;
}

inline Matrix rand_in_span(Rng& rng, const Field& f, std::size_t n,
                           const std::vector<Matrix>& basis) {
    Matrix m(f, n, n);
    for (const Matrix& b : basis) m += rand_scalar(rng, f) * b;
    return m;
}

inline Vec rand_invertible(Rng& rng, const Algebra& alg, int tries = 64) {
    for (int i = 0; i < tries; ++i) {
        Vec u = rand_vec(rng, alg.field, alg.dim);
        if (invert_element(alg, u)) return u;
    }
    return alg.unit;
}

} // namespace jnp::testing

#endif
