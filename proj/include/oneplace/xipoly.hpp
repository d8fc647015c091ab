#ifndef ONEPLACE_XIPOLY_HPP
#define ONEPLACE_XIPOLY_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "oneplace/rational.hpp"

namespace oneplace {

/// Polynomial in the generic indeterminate xi with rational coefficients.
/// Carries the genericity of series tails: a value that depends on xi shows
/// up here as positive xi-degree.
class XiPoly {
public:
    XiPoly() = default;
    explicit XiPoly(const Rational& c);
    static XiPoly xi(); // the indeterminate itself

    bool is_zero() const noexcept { return coeffs_.empty(); }
    long long degree() const noexcept { return static_cast<long long>(coeffs_.size()) - 1; } // -1 for 0
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
    const Rational& leading() const; // pre: nonzero

    friend XiPoly operator+(const XiPoly& a, const XiPoly& b);
    friend XiPoly operator-(const XiPoly& a, const XiPoly& b);
    friend XiPoly operator*(const XiPoly& a, const XiPoly& b);
    XiPoly operator-() const;
    XiPoly& operator+=(const XiPoly& b) { return *this = *this + b; }
    XiPoly& operator-=(const XiPoly& b) { return *this = *this - b; }
    friend bool operator==(const XiPoly& a, const XiPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const XiPoly& a, const XiPoly& b) { return !(a == b); }

    static XiPoly pow(const XiPoly& base, unsigned long long e);

    std::string to_string() const; // e.g. "5xi^2 - 1"
    friend std::ostream& operator<<(std::ostream& os, const XiPoly& p);

private:
    std::vector<Rational> coeffs_; // coeffs_[k] multiplies xi^k; trailing nonzero
    void trim();
};

} // namespace oneplace

#endif
