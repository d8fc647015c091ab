#include "oneplace/puiseux.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "oneplace/upoly.hpp"

namespace oneplace {

PuiseuxPoly::PuiseuxPoly(SeriesMode mode, std::vector<PuiseuxTerm> terms)
    : mode_(mode), terms_(std::move(terms)) {
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].coeff.is_zero()) throw std::invalid_argument("PuiseuxPoly: zero coefficient");
        if (mode_ == SeriesMode::Local && terms_[i].exp.sign() <= 0)
            throw std::invalid_argument("PuiseuxPoly: local exponents must be positive");
        if (i > 0) {
            bool ok = mode_ == SeriesMode::Local ? terms_[i - 1].exp < terms_[i].exp
                                                 : terms_[i - 1].exp > terms_[i].exp;
            if (!ok) throw std::invalid_argument("PuiseuxPoly: exponents out of order");
        }
    }
}

const Rational& PuiseuxPoly::leading_exponent() const {
    if (is_zero()) throw Error(errc::zero_series, "leading exponent of the zero series");
    return terms_.front().exp;
}

const Rational& PuiseuxPoly::leading_coeff() const {
    if (is_zero()) throw Error(errc::zero_series, "leading coefficient of the zero series");
    return terms_.front().coeff;
}

namespace {

std::string exponent_string(const Rational& e) {
    if (e.is_integer()) return e.to_string();
    return "(" + e.to_string() + ")";
}

std::string term_string(const Rational& coeff, const Rational& exp, const char* var, bool lead) {
    Rational a = coeff.sign() < 0 ? -coeff : coeff;
    std::string out = lead ? (coeff.sign() < 0 ? "-" : "") : (coeff.sign() < 0 ? " - " : " + ");
    bool unit = a == Rational(1);
    bool has_var = !exp.is_zero();
    if (!unit || !has_var) out += a.to_string();
    if (has_var) {
        out += var;
        if (exp != Rational(1)) out += "^" + exponent_string(exp);
    }
    return out;
}

} // namespace

std::string PuiseuxPoly::to_string(const char* var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        out += term_string(terms_[i].coeff, terms_[i].exp, var, i == 0);
    return out;
}

void validate_pairs(const PuiseuxPairs& pairs) {
    Rational prev(0);
    BigInt denom(1);
    for (const auto& [q, p] : pairs) {
        if (q < 1 || p < 2 || std::gcd(static_cast<long long>(q), static_cast<long long>(p)) != 1)
            throw Error(errc::invalid_pairs, "pairs must be coprime with q >= 1, p >= 2");
        denom = denom * BigInt(p);
        Rational exponent(BigInt(q), denom);
        if (!(prev < exponent))
            throw Error(errc::invalid_pairs, "characteristic exponents must increase");
        prev = exponent;
    }
}

long long polydromy_order(const PuiseuxPoly& s) {
    BigInt l(1);
    for (const auto& t : s.terms()) l = BigInt::lcm(l, t.exp.den());
    return l.to_int64();
}

PuiseuxPairs exponent_pairs(const std::vector<Rational>& exps) {
    PuiseuxPairs pairs;
    BigInt denom(1);
    for (const auto& e : exps) {
        BigInt next = BigInt::lcm(denom, e.den());
        if (next != denom) {
            long long p = (next / denom).to_int64();
            long long q = (e * Rational(next)).to_int64();
            pairs.push_back(PuiseuxPair{q, p});
            denom = next;
        }
    }
    return pairs;
}

PuiseuxPairs puiseux_pairs(const PuiseuxPoly& s) {
    std::vector<Rational> exps;
    exps.reserve(s.terms().size());
    for (const auto& t : s.terms()) exps.push_back(t.exp);
    return exponent_pairs(exps);
}

PuiseuxPoly truncate_below(const PuiseuxPoly& s, const Rational& omega) {
    std::vector<PuiseuxTerm> kept;
    for (const auto& t : s.terms()) {
        bool keep = s.mode() == SeriesMode::Local ? t.exp < omega : t.exp > omega;
        if (keep) kept.push_back(t);
    }
    return PuiseuxPoly(s.mode(), std::move(kept));
}

GenericSeries::GenericSeries(PuiseuxPoly fixed, Rational xi_exponent)
    : fixed_(std::move(fixed)), xi_exp_(std::move(xi_exponent)), scale_(1) {
    if (!fixed_.is_zero()) {
        const Rational& last = fixed_.terms().back().exp;
        bool ok = fixed_.mode() == SeriesMode::Local ? last < xi_exp_ : last > xi_exp_;
        if (!ok) throw std::invalid_argument("GenericSeries: xi exponent must extend the fixed part");
    }
    BigInt l = xi_exp_.den();
    for (const auto& t : fixed_.terms()) l = BigInt::lcm(l, t.exp.den());
    scale_ = l.to_int64();
}

PuiseuxPairs GenericSeries::pairs() const {
    std::vector<Rational> exps;
    for (const auto& t : fixed_.terms()) exps.push_back(t.exp);
    exps.push_back(xi_exp_);
    return exponent_pairs(exps);
}

std::string GenericSeries::to_string(const char* var) const {
    std::string out = fixed_.is_zero() ? "" : fixed_.to_string(var);
    std::string xi = "xi";
    if (!xi_exp_.is_zero()) {
        xi += "*";
        xi += var;
        if (xi_exp_ != Rational(1)) xi += "^" + exponent_string(xi_exp_);
    }
    return out.empty() ? xi : out + " + " + xi;
}

GenericSeries generic_series_from_germ(const PuiseuxPoly& phi, long long r) {
    if (phi.mode() != SeriesMode::Local)
        throw std::invalid_argument("generic_series_from_germ: local series expected");
    if (r < 0) throw std::invalid_argument("generic_series_from_germ: r must be >= 0");
    PuiseuxPairs pairs = puiseux_pairs(phi);
    if (pairs.empty())
        throw Error(errc::no_characteristic_exponent, "series has integer exponents only");
    long long p = polydromy_order(phi);
    // last characteristic exponent q_l/(p_1...p_l), rescaled to denominator p
    BigInt denom(1);
    for (const auto& pr : pairs) denom = denom * BigInt(pr.p);
    Rational last_char(BigInt(pairs.back().q), denom);
    Rational xi_exp = last_char + Rational(r, p);
    return GenericSeries(truncate_below(phi, xi_exp), xi_exp);
}

GenericSeries to_global(const GenericSeries& sigma) {
    if (sigma.mode() != SeriesMode::Local) throw std::invalid_argument("to_global: local series expected");
    Rational lowest = sigma.fixed().is_zero() ? sigma.xi_exponent() : sigma.fixed().leading_exponent();
    if (!(lowest < Rational(1)))
        throw Error(errc::not_tangent, "series order is >= 1, the germ is not tangent to the line");
    std::vector<PuiseuxTerm> terms;
    terms.reserve(sigma.fixed().terms().size());
    for (auto it = sigma.fixed().terms().rbegin(); it != sigma.fixed().terms().rend(); ++it)
        terms.push_back(PuiseuxTerm{Rational(1) - it->exp, it->coeff});
    // reversed order: increasing local exponents become decreasing global ones
    std::reverse(terms.begin(), terms.end());
    return GenericSeries(PuiseuxPoly(SeriesMode::Degreewise, std::move(terms)),
                         Rational(1) - sigma.xi_exponent());
}

namespace {

using XiSeries = std::map<Rational, XiPoly>;

void xs_add(XiSeries& a, const Rational& exp, const XiPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = a.emplace(exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) a.erase(it);
    }
}

XiSeries xs_mul(const XiSeries& a, const XiSeries& b) {
    XiSeries out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) xs_add(out, ea + eb, ca * cb);
    return out;
}

} // namespace

SeriesExpansion substitute(const BiLaurent& f, const GenericSeries& sigma) {
    if (f.is_zero()) throw Error(errc::zero_polynomial, "substitute into the zero polynomial");
    XiSeries base;
    for (const auto& t : sigma.fixed().terms()) xs_add(base, t.exp, XiPoly(t.coeff));
    xs_add(base, sigma.xi_exponent(), XiPoly::xi());

    long long maxy = f.max_yexp();
    std::vector<XiSeries> powers(static_cast<std::size_t>(maxy) + 1);
    powers[0] = XiSeries{{Rational(0), XiPoly(Rational(1))}};
    for (long long k = 1; k <= maxy; ++k) powers[static_cast<std::size_t>(k)] =
        xs_mul(powers[static_cast<std::size_t>(k - 1)], base);

    XiSeries out;
    for (const auto& [m, c] : f.terms()) {
        const XiSeries& pw = powers[static_cast<std::size_t>(m.ye)];
        for (const auto& [e, xc] : pw) xs_add(out, e + Rational(m.xe), XiPoly(c) * xc);
    }
    return out;
}

BiLaurent minimal_polynomial(const PuiseuxPoly& fixed) {
    if (fixed.is_zero()) throw Error(errc::zero_series, "minimal polynomial of the zero series");
    const long long p = polydromy_order(fixed);
    const std::size_t n = static_cast<std::size_t>(p);

    // multiplication by the series on Q[x,x^-1][t]/(t^p - x),
    // with t^e reduced to x^floor(e/p) * t^(e mod p)
    std::vector<std::vector<BiLaurent>> mul(n, std::vector<BiLaurent>(n));
    for (const auto& term : fixed.terms()) {
        long long g = (term.exp * Rational(p)).to_int64();
        for (long long j = 0; j < p; ++j) {
            long long e = g + j;
            long long fq = e >= 0 ? e / p : -((-e + p - 1) / p);
            long long s = e - fq * p;
            mul[static_cast<std::size_t>(s)][static_cast<std::size_t>(j)] +=
                BiLaurent::monomial(term.coeff, fq, 0);
        }
    }
    std::vector<std::vector<BiLaurent>> m(n, std::vector<BiLaurent>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            m[i][j] = -mul[i][j];
            if (i == j) m[i][j] += BiLaurent::var_y();
        }
    BiLaurent phi = matrix_determinant(std::move(m));
    if (!phi.monic_in_y() || phi.max_yexp() != p)
        throw std::logic_error("minimal_polynomial: conjugate product is not monic of the right degree");
    return phi;
}

long long intersection_multiplicity(const PuiseuxPoly& phi, const BiLaurent& g) {
    if (phi.mode() != SeriesMode::Local)
        throw std::invalid_argument("intersection_multiplicity: local series expected");
    if (g.is_zero()) throw Error(errc::curve_contains_branch, "curve vanishes on the branch");
    const long long p = polydromy_order(phi);

    // phi(t^p) as a Laurent polynomial in t
    std::map<long long, Rational> param;
    for (const auto& t : phi.terms()) param[(t.exp * Rational(p)).to_int64()] = t.coeff;

    auto mul = [](const std::map<long long, Rational>& a, const std::map<long long, Rational>& b) {
        std::map<long long, Rational> out;
        for (const auto& [ea, ca] : a)
            for (const auto& [eb, cb] : b) {
                Rational& slot = out[ea + eb];
                slot += ca * cb;
                if (slot.is_zero()) out.erase(ea + eb);
            }
        return out;
    };

    long long maxy = g.max_yexp();
    std::vector<std::map<long long, Rational>> powers(static_cast<std::size_t>(maxy) + 1);
    powers[0] = {{0, Rational(1)}};
    for (long long k = 1; k <= maxy; ++k)
        powers[static_cast<std::size_t>(k)] = mul(powers[static_cast<std::size_t>(k - 1)], param);

    std::map<long long, Rational> total;
    for (const auto& [m, c] : g.terms())
        for (const auto& [e, pc] : powers[static_cast<std::size_t>(m.ye)]) {
            Rational& slot = total[e + p * m.xe];
            slot += c * pc;
            if (slot.is_zero()) total.erase(e + p * m.xe);
        }
    if (total.empty()) throw Error(errc::curve_contains_branch, "curve vanishes along the branch");
    return total.begin()->first;
}

} // namespace oneplace
