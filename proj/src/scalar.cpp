#include "jnp/scalar.hpp"

#include <cctype>

namespace jnp {

namespace {

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    // extended Euclid; a in [1, p)
    long long t = 0, new_t = 1;
    long long r = static_cast<long long>(p), new_r = static_cast<long long>(a);
    while (new_r != 0) {
        long long q = r / new_r;
        long long tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw Error("element has no inverse mod p");
    if (t < 0) t += static_cast<long long>(p);
    return static_cast<std::uint64_t>(t);
}

bool valid_integer_literal(const std::string& s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

BigInt parse_integer(const std::string& s) {
    return BigInt(s[0] == '+' ? s.substr(1) : s); // cpp_int rejects a leading '+'
}

} // namespace

Field Field::prime(std::uint32_t p) {
    if (!is_prime_u32(p)) throw Error("modulus " + std::to_string(p) + " is not prime");
    return Field(Kind::Prime, p);
}

std::string Field::str() const {
    return is_rational() ? "Q" : "F_" + std::to_string(p_);
}

Scalar Scalar::from_int(const Field& f, long long n) {
    Scalar s(f);
    if (f.is_rational()) {
        s.rat_ = Rational(n);
    } else {
        long long p = static_cast<long long>(f.p());
        long long r = n % p;
        if (r < 0) r += p;
        s.res_ = static_cast<std::uint64_t>(r);
    }
    return s;
}

Scalar Scalar::from_rational(const Field& f, const Rational& q) {
    if (f.is_rational()) {
        Scalar s(f);
        s.rat_ = q;
        return s;
    }
    // canonical image of a rational in F_p: numerator times inverse denominator
    BigInt p(f.p());
    BigInt num = numerator(q) % p;
    if (num < 0) num += p;
    BigInt den = denominator(q) % p;
    if (den == 0) throw Error("denominator vanishes in F_" + std::to_string(f.p()));
    Scalar s(f);
    std::uint64_t n = num.convert_to<std::uint64_t>();
    std::uint64_t d = den.convert_to<std::uint64_t>();
    s.res_ = (n * mod_inverse(d, f.p())) % f.p();
    return s;
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!valid_integer_literal(text)) throw ParseError("bad scalar literal: '" + text + "'");
        return from_rational(f, Rational(parse_integer(text)));
    }
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    if (!valid_integer_literal(num) || !valid_integer_literal(den))
        throw ParseError("bad scalar literal: '" + text + "'");
    if (f.is_prime())
        throw ParseError("prime-field scalars are decimal residues, got '" + text + "'");
    BigInt d = parse_integer(den);
    if (d == 0) throw ParseError("zero denominator in '" + text + "'");
    return from_rational(f, Rational(parse_integer(num), d));
}

bool Scalar::is_zero() const {
    return field_.is_rational() ? rat_.is_zero() : res_ == 0;
}

bool Scalar::is_one() const {
    return field_.is_rational() ? rat_ == 1 : res_ == 1;
}

const Rational& Scalar::rational_value() const {
    if (!field_.is_rational()) throw Error("not a rational scalar");
    return rat_;
}

std::uint64_t Scalar::residue() const {
    if (!field_.is_prime()) throw Error("not a prime-field scalar");
    return res_;
}

void Scalar::check_same_field(const Scalar& o) const {
    if (field_ != o.field_)
        throw FieldMismatch("scalars live over " + field_.str() + " and " + o.field_.str());
}

Scalar Scalar::operator-() const {
    Scalar s(field_);
    if (field_.is_rational())
        s.rat_ = -rat_;
    else
        s.res_ = res_ == 0 ? 0 : field_.p() - res_;
    return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check_same_field(o);
    if (field_.is_rational())
        rat_ += o.rat_;
    else
        res_ = (res_ + o.res_) % field_.p();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    check_same_field(o);
    if (field_.is_rational())
        rat_ -= o.rat_;
    else
        res_ = (res_ + field_.p() - o.res_) % field_.p();
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    check_same_field(o);
    if (field_.is_rational())
        rat_ *= o.rat_;
    else
        res_ = (res_ * o.res_) % field_.p(); // p < 2^31, no overflow
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    check_same_field(o);
    if (o.is_zero()) throw Error("division by zero");
    if (field_.is_rational())
        rat_ /= o.rat_;
    else
        res_ = (res_ * mod_inverse(o.res_, field_.p())) % field_.p();
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error("zero has no inverse");
    return one(field_) / *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
    a.check_same_field(b);
    return a.field_.is_rational() ? a.rat_ == b.rat_ : a.res_ == b.res_;
}

bool operator<(const Scalar& a, const Scalar& b) {
    a.check_same_field(b);
    return a.field_.is_rational() ? a.rat_ < b.rat_ : a.res_ < b.res_;
}

std::string Scalar::str() const {
    return field_.is_rational() ? rat_.str() : std::to_string(res_);
}

} // namespace jnp
