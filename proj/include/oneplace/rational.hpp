#ifndef ONEPLACE_RATIONAL_HPP
#define ONEPLACE_RATIONAL_HPP

#include <iosfwd>
#include <string>
#include <string_view>

#include "oneplace/bigint.hpp"

namespace oneplace {

/// Exact rational number, always in lowest terms with positive denominator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}
    Rational(long long n, long long d) : Rational(BigInt(n), BigInt(d)) {}
    Rational(BigInt n, BigInt d);
    explicit Rational(BigInt n) : num_(std::move(n)), den_(1) {}

    static Rational from_string(std::string_view s); // "n", "-n/d"

    const BigInt& num() const noexcept { return num_; }
    const BigInt& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_integer() const noexcept { return den_.is_one(); }
    int sign() const noexcept { return num_.sign(); }

    long long num_ll() const { return num_.to_int64(); }
    long long den_ll() const { return den_.to_int64(); }
    long long to_int64() const; // throws unless integral and in range

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b); // throws on b == 0

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    static int compare(const Rational& a, const Rational& b);
    friend bool operator==(const Rational& a, const Rational& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return compare(a, b) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return compare(a, b) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return compare(a, b) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return compare(a, b) >= 0; }

    static Rational pow(const Rational& base, long long e);

    /// Exact n-th root if one exists in Q (numerator and denominator both
    /// perfect n-th powers, sign permitting).
    static bool nth_root_exact(const Rational& a, unsigned long long n, Rational& root);

    std::string to_string() const; // "n" or "n/d"
    friend std::ostream& operator<<(std::ostream& os, const Rational& v);

private:
    BigInt num_, den_;
    void reduce();
};

} // namespace oneplace

#endif
