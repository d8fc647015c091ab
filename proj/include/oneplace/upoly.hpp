#ifndef ONEPLACE_UPOLY_HPP
#define ONEPLACE_UPOLY_HPP

#include <vector>

#include "oneplace/bilaurent.hpp"

namespace oneplace {

/// Univariate polynomial in a distinguished variable t with BiLaurent
/// coefficients. Used to phrase elimination problems (resultants).
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<BiLaurent> coeffs); // coeffs[k] multiplies t^k

    static UPoly from_term(const BiLaurent& c, std::size_t k);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    long long degree() const noexcept { return static_cast<long long>(coeffs_.size()) - 1; }
    BiLaurent coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BiLaurent(); }

    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);

private:
    std::vector<BiLaurent> coeffs_; // leading coefficient nonzero
    void trim();
};

/// Sylvester-matrix resultant eliminating t. Both inputs must be nonzero.
BiLaurent resultant(const UPoly& f, const UPoly& g);

/// Determinant of a square BiLaurent matrix via fraction-free elimination.
BiLaurent matrix_determinant(std::vector<std::vector<BiLaurent>> m);

} // namespace oneplace

#endif
