#include "oneplace/upoly.hpp"

#include <stdexcept>
#include <utility>

namespace oneplace {

UPoly::UPoly(std::vector<BiLaurent> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UPoly UPoly::from_term(const BiLaurent& c, std::size_t k) {
    std::vector<BiLaurent> v(k + 1);
    v[k] = c;
    return UPoly(std::move(v));
}

void UPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<BiLaurent> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
    return UPoly(std::move(out));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<BiLaurent> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UPoly(std::move(out));
}

// Bareiss one-step fraction-free Gaussian elimination. Divisions are exact
// because every intermediate entry is a minor of the input matrix.
BiLaurent matrix_determinant(std::vector<std::vector<BiLaurent>> m) {
    const std::size_t n = m.size();
    if (n == 0) return BiLaurent::constant(Rational(1));
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("matrix_determinant: not square");

    BiLaurent prev = BiLaurent::constant(Rational(1));
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t pivot = k + 1;
            while (pivot < n && m[pivot][k].is_zero()) ++pivot;
            if (pivot == n) return BiLaurent();
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BiLaurent num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                m[i][j] = BiLaurent::divide_exact(num, prev);
            }
            m[i][k] = BiLaurent();
        }
        prev = m[k][k];
    }
    BiLaurent det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

BiLaurent resultant(const UPoly& f, const UPoly& g) {
    if (f.is_zero() || g.is_zero()) throw Error(errc::zero_polynomial, "resultant of a zero polynomial");
    const std::size_t df = static_cast<std::size_t>(f.degree());
    const std::size_t dg = static_cast<std::size_t>(g.degree());
    if (df == 0 && dg == 0) return BiLaurent::constant(Rational(1));
    if (df == 0) return BiLaurent::pow(f.coeff(0), dg);
    if (dg == 0) return BiLaurent::pow(g.coeff(0), df);

    const std::size_t n = df + dg;
    std::vector<std::vector<BiLaurent>> s(n, std::vector<BiLaurent>(n));
    for (std::size_t row = 0; row < dg; ++row)
        for (std::size_t k = 0; k <= df; ++k) s[row][row + df - k] = f.coeff(k);
    for (std::size_t row = 0; row < df; ++row)
        for (std::size_t k = 0; k <= dg; ++k) s[dg + row][row + dg - k] = g.coeff(k);
    return matrix_determinant(std::move(s));
}

} // namespace oneplace
