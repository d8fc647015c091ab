#ifndef ONEPLACE_BIGINT_HPP
#define ONEPLACE_BIGINT_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace oneplace {

/// Arbitrary-precision signed integer (sign + base-2^32 magnitude).
/// Small by design: only the operations the library needs, all exact.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);

    static BigInt from_string(std::string_view s);
    std::string to_string() const;

    bool is_zero() const noexcept { return limbs_.empty(); }
    bool is_one() const noexcept { return !neg_ && limbs_.size() == 1 && limbs_[0] == 1; }
    bool negative() const noexcept { return neg_; }
    int sign() const noexcept { return is_zero() ? 0 : (neg_ ? -1 : 1); }

    bool fits_int64() const noexcept;
    long long to_int64() const; // throws std::overflow_error if out of range

    BigInt operator-() const;
    BigInt abs() const;

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);
    /// Truncated division (C semantics): quotient rounds toward zero,
    /// remainder carries the dividend's sign.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
    friend BigInt operator/(const BigInt& a, const BigInt& b);
    friend BigInt operator%(const BigInt& a, const BigInt& b);

    BigInt& operator+=(const BigInt& b) { return *this = *this + b; }
    BigInt& operator-=(const BigInt& b) { return *this = *this - b; }
    BigInt& operator*=(const BigInt& b) { return *this = *this * b; }

    /// Three-way comparison: -1, 0, +1.
    static int compare(const BigInt& a, const BigInt& b) noexcept;
    friend bool operator==(const BigInt& a, const BigInt& b) noexcept { return compare(a, b) == 0; }
    friend bool operator!=(const BigInt& a, const BigInt& b) noexcept { return compare(a, b) != 0; }
    friend bool operator<(const BigInt& a, const BigInt& b) noexcept { return compare(a, b) < 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) noexcept { return compare(a, b) <= 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) noexcept { return compare(a, b) > 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) noexcept { return compare(a, b) >= 0; }

    static BigInt gcd(BigInt a, BigInt b); // non-negative
    static BigInt lcm(const BigInt& a, const BigInt& b);
    static BigInt pow(const BigInt& base, unsigned long long e);

    /// Exact n-th root of a non-negative integer, if it exists.
    static bool nth_root_exact(const BigInt& a, unsigned long long n, BigInt& root);

    friend std::ostream& operator<<(std::ostream& os, const BigInt& v);

private:
    std::vector<std::uint32_t> limbs_; // little-endian, no trailing zero limb
    bool neg_ = false;

    void trim();
    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) noexcept;
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static void divmod_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                           std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r);
};

} // namespace oneplace

#endif
