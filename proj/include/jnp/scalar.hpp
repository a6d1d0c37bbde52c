#ifndef JNP_SCALAR_HPP
#define JNP_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "jnp/error.hpp"

namespace jnp {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Coefficient domain: the rationals or a prime field F_p.
class Field {
  public:
    enum class Kind { Rational, Prime };

    static Field rational() { return Field(Kind::Rational, 0); }
    static Field prime(std::uint32_t p);

    Kind kind() const { return kind_; }
    bool is_rational() const { return kind_ == Kind::Rational; }
    bool is_prime() const { return kind_ == Kind::Prime; }
    std::uint32_t p() const { return p_; }

    /// 0 for the rationals, p for F_p.
    std::uint32_t characteristic() const { return is_prime() ? p_ : 0; }

    friend bool operator==(const Field& a, const Field& b) {
        return a.kind_ == b.kind_ && a.p_ == b.p_;
    }
    friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

    std::string str() const;

  private:
    Field(Kind k, std::uint32_t p) : kind_(k), p_(p) {}
    Kind kind_;
    std::uint32_t p_;
};

/// An exact field element.  Rational values are kept in lowest terms with a
/// positive denominator, prime-field values as residues in [0, p), so
/// equality is structural and serialization is canonical.  No rounding ever
/// occurs anywhere.
class Scalar {
  public:
    Scalar() : field_(Field::rational()), res_(0) {}

    static Scalar zero(const Field& f) { return from_int(f, 0); }
    static Scalar one(const Field& f) { return from_int(f, 1); }
    static Scalar from_int(const Field& f, long long n);
    static Scalar from_rational(const Field& f, const Rational& q);

    /// Parses the string grammar used in files and on the command line:
    /// optional-sign decimal integers, and "a/b" over the rationals.
    static Scalar parse(const Field& f, const std::string& text);

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    const Rational& rational_value() const;
    std::uint64_t residue() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    Scalar inverse() const;

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Total order used only for deterministic sorting of reports.
    friend bool operator<(const Scalar& a, const Scalar& b);

    std::string str() const;

  private:
    explicit Scalar(const Field& f) : field_(f), res_(0) {}
    void check_same_field(const Scalar& o) const;

    Field field_;
    Rational rat_;      // valid iff field_ is rational
    std::uint64_t res_; // valid iff field_ is prime
};

} // namespace jnp

#endif
