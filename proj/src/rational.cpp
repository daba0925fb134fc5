#include "famcake/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace famcake {

namespace {

BigInt big_gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a, b);
}

} // namespace

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) {
        throw std::invalid_argument("Rational: zero denominator");
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    BigInt g = big_gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::parse(std::string_view text) {
    auto parse_int = [](std::string_view s) -> BigInt {
        if (s.empty()) throw std::invalid_argument("Rational: empty integer");
        size_t i = 0;
        if (s[0] == '-' || s[0] == '+') i = 1;
        if (i == s.size()) throw std::invalid_argument("Rational: sign without digits");
        for (size_t j = i; j < s.size(); ++j) {
            if (s[j] < '0' || s[j] > '9') {
                throw std::invalid_argument("Rational: bad digit in '" + std::string(s) + "'");
            }
        }
        return BigInt(std::string(s));
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_int(text), BigInt(1));
    }
    BigInt num = parse_int(text.substr(0, slash));
    BigInt den = parse_int(text.substr(slash + 1));
    return Rational(num, den);
}

BigInt Rational::floor() const {
    if (num_ >= 0) return num_ / den_;
    BigInt q = num_ / den_;
    if (q * den_ != num_) q -= 1;
    return q;
}

BigInt Rational::ceil() const {
    return -Rational(-num_, den_).floor();
}

std::string Rational::str() const {
    return num_.str() + "/" + den_.str();
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::invalid_argument("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    // Denominators are positive, so cross-multiplication preserves order.
    BigInt lhs = a.num_ * b.den_;
    BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

long long ceil_to_ll(const Rational& r) {
    return r.ceil().convert_to<long long>();
}

} // namespace famcake
