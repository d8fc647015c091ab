#include "oneplace/xipoly.hpp"

#include <ostream>
#include <stdexcept>

namespace oneplace {

XiPoly::XiPoly(const Rational& c) {
    if (!c.is_zero()) coeffs_.push_back(c);
}

XiPoly XiPoly::xi() {
    XiPoly p;
    p.coeffs_ = {Rational(0), Rational(1)};
    return p;
}

void XiPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const Rational& XiPoly::leading() const {
    if (is_zero()) throw std::domain_error("XiPoly: leading coefficient of zero");
    return coeffs_.back();
}

XiPoly operator+(const XiPoly& a, const XiPoly& b) {
    XiPoly out;
    out.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] = a.coeff(i) + b.coeff(i);
    out.trim();
    return out;
}

XiPoly operator-(const XiPoly& a, const XiPoly& b) { return a + (-b); }

XiPoly XiPoly::operator-() const {
    XiPoly out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

XiPoly operator*(const XiPoly& a, const XiPoly& b) {
    XiPoly out;
    if (a.is_zero() || b.is_zero()) return out;
    out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    out.trim();
    return out;
}

XiPoly XiPoly::pow(const XiPoly& base, unsigned long long e) {
    XiPoly out{Rational(1)};
    XiPoly acc = base;
    while (e != 0) {
        if (e & 1) out = out * acc;
        if (e >>= 1) acc = acc * acc;
    }
    return out;
}

std::string XiPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const Rational& c = coeffs_[k];
        if (c.is_zero()) continue;
        Rational a = c.sign() < 0 ? -c : c;
        if (out.empty())
            out += c.sign() < 0 ? "-" : "";
        else
            out += c.sign() < 0 ? " - " : " + ";
        bool unit = a == Rational(1);
        if (k == 0 || !unit) out += a.to_string();
        if (k > 0) {
            out += "xi";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const XiPoly& p) { return os << p.to_string(); }

} // namespace oneplace
