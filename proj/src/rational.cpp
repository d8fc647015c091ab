#include "oneplace/rational.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace oneplace {

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
    reduce();
}

void Rational::reduce() {
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
}

Rational Rational::from_string(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(BigInt::from_string(s), BigInt(1));
    return Rational(BigInt::from_string(s.substr(0, slash)), BigInt::from_string(s.substr(slash + 1)));
}

long long Rational::to_int64() const {
    if (!is_integer()) throw std::domain_error("Rational: not an integer: " + to_string());
    return num_.to_int64();
}

Rational Rational::operator-() const {
    Rational out = *this;
    out.num_ = -out.num_;
    return out;
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) { return Rational(a.num_ * b.num_, a.den_ * b.den_); }

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

int Rational::compare(const Rational& a, const Rational& b) {
    return BigInt::compare(a.num_ * b.den_, b.num_ * a.den_);
}

Rational Rational::pow(const Rational& base, long long e) {
    if (e >= 0)
        return Rational(BigInt::pow(base.num_, static_cast<unsigned long long>(e)),
                        BigInt::pow(base.den_, static_cast<unsigned long long>(e)));
    if (base.is_zero()) throw std::domain_error("Rational: negative power of zero");
    return Rational(BigInt::pow(base.den_, static_cast<unsigned long long>(-e)),
                    BigInt::pow(base.num_, static_cast<unsigned long long>(-e)));
}

bool Rational::nth_root_exact(const Rational& a, unsigned long long n, Rational& root) {
    if (n == 0) return false;
    bool neg = a.sign() < 0;
    if (neg && n % 2 == 0) return false;
    BigInt rn, rd;
    if (!BigInt::nth_root_exact(a.num_.abs(), n, rn)) return false;
    if (!BigInt::nth_root_exact(a.den_, n, rd)) return false;
    root = Rational(neg ? -rn : rn, rd);
    return true;
}

std::string Rational::to_string() const {
    if (is_integer()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

} // namespace oneplace
