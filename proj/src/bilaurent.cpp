#include "oneplace/bilaurent.hpp"

#include <algorithm>
#include <stdexcept>

namespace oneplace {

BiLaurent BiLaurent::constant(const Rational& c) { return monomial(c, 0, 0); }

BiLaurent BiLaurent::monomial(const Rational& c, long long xe, long long ye) {
    if (ye < 0) throw std::invalid_argument("BiLaurent: negative y-exponent");
    BiLaurent out;
    if (!c.is_zero()) out.terms_.emplace(Mono{xe, ye}, c);
    return out;
}

bool BiLaurent::is_polynomial() const {
    for (const auto& [m, c] : terms_)
        if (m.xe < 0) return false;
    return true;
}

Rational BiLaurent::coeff(long long xe, long long ye) const {
    auto it = terms_.find(Mono{xe, ye});
    return it == terms_.end() ? Rational(0) : it->second;
}

void BiLaurent::add_term(const Mono& m, const Rational& c) {
    if (c.is_zero()) return;
    if (m.ye < 0) throw std::invalid_argument("BiLaurent: negative y-exponent");
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

long long BiLaurent::min_xexp() const {
    if (is_zero()) throw Error(errc::zero_polynomial, "min_xexp of the zero polynomial");
    long long best = terms_.begin()->first.xe;
    for (const auto& [m, c] : terms_) best = std::min(best, m.xe);
    return best;
}

long long BiLaurent::max_xexp() const {
    if (is_zero()) throw Error(errc::zero_polynomial, "max_xexp of the zero polynomial");
    long long best = terms_.begin()->first.xe;
    for (const auto& [m, c] : terms_) best = std::max(best, m.xe);
    return best;
}

long long BiLaurent::max_yexp() const {
    if (is_zero()) throw Error(errc::zero_polynomial, "max_yexp of the zero polynomial");
    long long best = 0;
    for (const auto& [m, c] : terms_) best = std::max(best, m.ye);
    return best;
}

long long BiLaurent::total_degree() const {
    if (is_zero()) throw Error(errc::zero_polynomial, "degree of the zero polynomial");
    long long best = terms_.begin()->first.xe + terms_.begin()->first.ye;
    for (const auto& [m, c] : terms_) best = std::max(best, m.xe + m.ye);
    return best;
}

BiLaurent BiLaurent::y_coefficient(long long k) const {
    BiLaurent out;
    for (const auto& [m, c] : terms_)
        if (m.ye == k) out.terms_.emplace(Mono{m.xe, 0}, c);
    return out;
}

bool BiLaurent::monic_in_y() const {
    if (is_zero()) return false;
    return y_coefficient(max_yexp()) == constant(Rational(1));
}

BiLaurent BiLaurent::operator-() const {
    BiLaurent out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

BiLaurent operator+(const BiLaurent& a, const BiLaurent& b) {
    BiLaurent out = a;
    for (const auto& [m, c] : b.terms_) out.add_term(m, c);
    return out;
}

BiLaurent operator-(const BiLaurent& a, const BiLaurent& b) {
    BiLaurent out = a;
    for (const auto& [m, c] : b.terms_) out.add_term(m, -c);
    return out;
}

BiLaurent operator*(const BiLaurent& a, const BiLaurent& b) {
    BiLaurent out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(Mono{ma.xe + mb.xe, ma.ye + mb.ye}, ca * cb);
    return out;
}

BiLaurent operator*(const Rational& c, const BiLaurent& a) {
    BiLaurent out;
    if (c.is_zero()) return out;
    for (const auto& [m, cc] : a.terms_) out.terms_.emplace(m, c * cc);
    return out;
}

BiLaurent BiLaurent::pow(const BiLaurent& base, unsigned long long e) {
    BiLaurent out = constant(Rational(1));
    BiLaurent acc = base;
    while (e != 0) {
        if (e & 1) out *= acc;
        if (e >>= 1) acc *= acc;
    }
    return out;
}

BiLaurent BiLaurent::shifted(long long dx, long long dy) const {
    BiLaurent out;
    for (const auto& [m, c] : terms_) {
        if (m.ye + dy < 0) throw std::invalid_argument("BiLaurent: shift drives y-exponent negative");
        out.terms_.emplace(Mono{m.xe + dx, m.ye + dy}, c);
    }
    return out;
}

namespace {

// Exact division of Laurent polynomials in x alone (ye == 0 throughout).
bool laurent_x_divide(const BiLaurent& a, const BiLaurent& b, BiLaurent& q) {
    q = BiLaurent();
    if (a.is_zero()) return true;
    // shift both to ordinary polynomials in x and long-divide
    long long sa = a.min_xexp(), sb = b.min_xexp();
    std::vector<Rational> pa(static_cast<std::size_t>(a.max_xexp() - sa) + 1);
    std::vector<Rational> pb(static_cast<std::size_t>(b.max_xexp() - sb) + 1);
    for (const auto& [m, c] : a.terms()) pa[static_cast<std::size_t>(m.xe - sa)] = c;
    for (const auto& [m, c] : b.terms()) pb[static_cast<std::size_t>(m.xe - sb)] = c;
    if (pa.size() < pb.size()) return false;
    std::vector<Rational> pq(pa.size() - pb.size() + 1);
    for (std::size_t i = pq.size(); i-- > 0;) {
        Rational c = pa[i + pb.size() - 1] / pb.back();
        pq[i] = c;
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j < pb.size(); ++j) pa[i + j] -= c * pb[j];
    }
    for (const auto& c : pa)
        if (!c.is_zero()) return false;
    for (std::size_t i = 0; i < pq.size(); ++i)
        if (!pq[i].is_zero()) q.add_term(Mono{static_cast<long long>(i) + sa - sb, 0}, pq[i]);
    return true;
}

} // namespace

bool BiLaurent::try_divide(const BiLaurent& a, const BiLaurent& b, BiLaurent& quotient) {
    if (b.is_zero()) throw Error(errc::zero_polynomial, "division by the zero polynomial");
    quotient = BiLaurent();
    BiLaurent rem = a;
    const long long db = b.max_yexp();
    const BiLaurent lead_b = b.y_coefficient(db);
    while (!rem.is_zero()) {
        long long dr = rem.max_yexp();
        if (dr < db) return false;
        BiLaurent lead_r = rem.y_coefficient(dr);
        BiLaurent c;
        if (!laurent_x_divide(lead_r, lead_b, c)) return false;
        BiLaurent piece = c.shifted(0, dr - db);
        quotient += piece;
        rem -= piece * b;
        if (!rem.is_zero() && rem.max_yexp() >= dr) return false; // no progress: not divisible
    }
    return true;
}

BiLaurent BiLaurent::divide_exact(const BiLaurent& a, const BiLaurent& b) {
    BiLaurent q;
    if (!try_divide(a, b, q)) throw std::domain_error("BiLaurent: inexact division");
    return q;
}

BiLaurent BiLaurent::substitute_y(const BiLaurent& g) const {
    // group by y-exponent, evaluate with Horner on powers of g
    if (is_zero()) return BiLaurent();
    long long dy = max_yexp();
    BiLaurent out;
    for (long long k = dy; k >= 0; --k) {
        if (k != dy) out = out * g;
        out += y_coefficient(k);
    }
    return out;
}

} // namespace oneplace
