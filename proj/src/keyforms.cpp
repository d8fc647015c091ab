#include "oneplace/keyforms.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "oneplace/newton.hpp"
#include "oneplace/resolution.hpp"
#include "oneplace/weighted.hpp"

namespace oneplace {

namespace {

long long checked_gcd(long long a, long long b) { return std::gcd(a, b); }

// product forms[i]^e over the step's exponent map; only index 0 (a monomial)
// may carry a negative exponent
BiLaurent step_product(const std::vector<BiLaurent>& forms, const KeyStep& st) {
    BiLaurent out = BiLaurent::constant(st.theta);
    for (const auto& [idx, e] : st.exps) {
        if (e == 0) continue;
        if (idx == 0) {
            out = out * BiLaurent::monomial(Rational(1), e, 0);
        } else {
            if (e < 0) throw std::logic_error("key step: negative exponent off the x-form");
            out = out * BiLaurent::pow(forms[idx], static_cast<unsigned long long>(e));
        }
    }
    return out;
}

} // namespace

void verify_key_properties(const KeyFormSeq& seq) {
    const std::size_t k = seq.forms.size();
    if (seq.values.size() != k || (k >= 2 ? seq.steps.size() != k - 2 : !seq.steps.empty()))
        throw std::logic_error("key sequence: inconsistent lengths");
    for (std::size_t t = 0; t < seq.steps.size(); ++t) {
        const KeyStep& st = seq.steps[t];
        const std::size_t j = t + 1; // the step builds forms[j + 1] from forms[j]

        // minimality of n_j against the lattice of earlier values
        long long lattice = 0;
        for (std::size_t i = 0; i < j; ++i) lattice = checked_gcd(lattice, seq.values[i]);
        long long expected_n = lattice == 0 ? 1 : lattice / checked_gcd(lattice, seq.values[j]);
        if (st.n != expected_n) throw std::logic_error("key sequence: wrong n");

        // value identity and strict drop/rise
        long long rhs = 0;
        for (const auto& [idx, e] : st.exps) {
            if (idx >= j) throw std::logic_error("key sequence: step uses a later form");
            if (idx >= 1 && (e < 0 || e >= seq.steps[idx - 1].n))
                throw std::logic_error("key sequence: exponent out of range");
            rhs += e * seq.values[idx];
        }
        if (rhs != st.n * seq.values[j]) throw std::logic_error("key sequence: value identity fails");
        bool strict = seq.mode == KeyMode::GlobalDegree ? seq.values[j + 1] < st.n * seq.values[j]
                                                        : seq.values[j + 1] > st.n * seq.values[j];
        if (!strict) throw std::logic_error("key sequence: no strict value step");

        // recursion identity on the forms
        BiLaurent expect = BiLaurent::pow(seq.forms[j], static_cast<unsigned long long>(st.n)) -
                           step_product(seq.forms, st);
        if (expect != seq.forms[j + 1]) throw std::logic_error("key sequence: recursion identity fails");
    }
}

namespace {

// shared chain assembly: push a form produced by `step`, with its value
struct ChainBuilder {
    KeyFormSeq seq;
    const GenericSeries* series = nullptr;

    long long eval(const BiLaurent& f, XiPoly* leading = nullptr) const {
        SeriesExpansion e = substitute(f, *series);
        if (e.empty()) throw std::logic_error("key chain: expansion vanished");
        const auto& it = seq.mode == KeyMode::GlobalDegree ? *e.rbegin() : *e.begin();
        if (leading) *leading = it.second;
        return (it.first * Rational(series->scale())).to_int64();
    }

    void push(BiLaurent f, KeyStep st) {
        seq.values.push_back(eval(f));
        seq.forms.push_back(std::move(f));
        seq.steps.push_back(std::move(st));
    }

    void finish() {
        // the generic coefficient must enter the leading term of the last form
        XiPoly lead;
        eval(seq.forms.back(), &lead);
        if (lead.is_constant())
            throw std::logic_error("key chain: generic coefficient absent from the last value");
        verify_key_properties(seq);
    }
};

} // namespace

KeyFormSeq local_key_polynomials(const PuiseuxPoly& phi, long long r) {
    if (phi.is_zero()) throw Error(errc::zero_series, "key polynomials of the zero germ");
    if (r < 0) throw std::invalid_argument("local_key_polynomials: r must be >= 0");
    if (!(phi.leading_exponent() < Rational(1)))
        throw Error(errc::not_tangent, "germ is not tangent to the line");
    PuiseuxPairs pairs = puiseux_pairs(phi);
    if (pairs.size() > 1)
        throw Error(errc::too_many_pairs, "key polynomials are computed for at most one pair");

    const long long q = pairs[0].q, p = pairs[0].p;
    GenericSeries series = generic_series_from_germ(phi, r);

    ChainBuilder chain;
    chain.seq.mode = KeyMode::LocalOrder;
    chain.series = &series;
    chain.seq.forms = {BiLaurent::var_x(), BiLaurent::var_y()};
    chain.seq.values = {chain.eval(BiLaurent::var_x()), chain.eval(BiLaurent::var_y())};
    if (r == 0) {
        chain.finish();
        return chain.seq;
    }

    const BiLaurent f = minimal_polynomial(phi);
    const Rational a0 = phi.leading_coeff();
    const Rational theta1 = Rational::pow(a0, p);
    const BiLaurent head =
        BiLaurent::monomial(Rational(1), 0, p) - BiLaurent::monomial(theta1, q, 0);
    const WeightedDegree w = WeightedDegree::order(p, q);

    // every monomial of weight p*q belongs to the head
    const long long alpha = p * q + r;
    const BiLaurent tail = f - head;
    std::vector<std::pair<long long, std::pair<Mono, Rational>>> extras;
    for (const auto& [m, c] : tail.terms()) {
        long long wv = weighted_monomial_value(m, w);
        if (wv <= p * q) throw std::logic_error("local key chain: unexpected low-weight monomial");
        if (wv < alpha) extras.emplace_back(wv, std::make_pair(m, c));
    }
    std::sort(extras.begin(), extras.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    KeyStep first;
    first.n = p;
    first.exps[0] = q;
    first.theta = theta1;
    chain.push(head, std::move(first));

    // the effective part collects the low-weight terms of f: each step adds
    // one stored term, i.e. subtracts theta = -coefficient times the monomial
    BiLaurent current = head;
    for (const auto& [wv, term] : extras) {
        const auto& [m, c] = term;
        current += BiLaurent::monomial(c, m.xe, m.ye);
        KeyStep st;
        st.n = 1;
        st.exps[0] = m.xe;
        st.exps[1] = m.ye;
        st.theta = -c;
        chain.push(current, std::move(st));
    }
    chain.finish();
    return chain.seq;
}

GlobalKeyForms key_forms(const Semidegree& delta) {
    const GenericSeries& series = delta.series;
    if (!validate_positive(delta))
        throw Error(errc::not_positive, "semidegree is not positive on nonconstant polynomials");
    if (series.pairs().size() > 1)
        throw Error(errc::too_many_pairs, "key forms are computed for at most one pair");

    ChainBuilder chain;
    chain.seq.mode = KeyMode::GlobalDegree;
    chain.series = &series;
    chain.seq.forms = {BiLaurent::var_x(), BiLaurent::var_y()};
    chain.seq.values = {chain.eval(BiLaurent::var_x()), chain.eval(BiLaurent::var_y())};

    // integer-exponent prefix of the series goes into the y-chain
    std::vector<PuiseuxTerm> prefix, tail;
    bool fractional_seen = false;
    for (const auto& t : series.fixed().terms()) {
        if (!fractional_seen && t.exp.is_integer())
            prefix.push_back(t);
        else {
            fractional_seen = true;
            tail.push_back(t);
        }
    }

    BiLaurent h;
    std::size_t h_last_index = 1; // index of the form playing the role of y'
    for (const auto& t : prefix) {
        h += BiLaurent::monomial(t.coeff, t.exp.to_int64(), 0);
        KeyStep st;
        st.n = 1;
        st.exps[0] = t.exp.to_int64();
        st.theta = t.coeff;
        chain.push(BiLaurent::var_y() - h, std::move(st));
        h_last_index = chain.seq.forms.size() - 1;
    }

    GlobalKeyForms out;
    if (tail.empty()) {
        chain.finish();
        out.seq = std::move(chain.seq);
        return out;
    }

    // fractional level: one pair means the first fractional exponent carries
    // the full polydromy
    PuiseuxPoly frac(SeriesMode::Degreewise, tail);
    const long long p = series.scale();
    const Rational& lead_exp = frac.leading_exponent();
    if (lead_exp.den() != BigInt(p)) throw std::logic_error("key forms: fractional level is not primitive");
    const long long q = (lead_exp * Rational(p)).to_int64();
    const Rational a0 = frac.leading_coeff();
    const long long s = q - (series.xi_exponent() * Rational(p)).to_int64();
    const long long d_delta = p * q - s;

    const BiLaurent phi = minimal_polynomial(frac); // in (x, y')
    const Rational theta1 = Rational::pow(a0, p);
    const BiLaurent head =
        BiLaurent::monomial(Rational(1), 0, p) - BiLaurent::monomial(theta1, q, 0);
    const WeightedDegree w = WeightedDegree::degree(p, q);

    const BiLaurent tail_terms = phi - head;
    std::vector<std::pair<long long, std::pair<Mono, Rational>>> extras;
    for (const auto& [m, c] : tail_terms.terms()) {
        long long wv = weighted_monomial_value(m, w);
        if (wv >= p * q) throw std::logic_error("global key chain: unexpected high-weight monomial");
        if (wv > d_delta) extras.emplace_back(wv, std::make_pair(m, c));
    }
    std::sort(extras.begin(), extras.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });

    OnePairNormalForm nf;
    nf.h = h;
    nf.a.assign(static_cast<std::size_t>(s), Rational(0));
    for (const auto& t : tail) {
        long long i = q - (t.exp * Rational(p)).to_int64();
        nf.a[static_cast<std::size_t>(i)] = t.coeff;
    }
    nf.p = p;
    nf.q = q;
    nf.s = s;
    nf.d_delta = d_delta;
    nf.phi = phi;

    const BiLaurent yprime = chain.seq.forms[h_last_index];
    KeyStep first;
    first.n = p;
    first.exps[0] = q;
    first.theta = theta1;
    BiLaurent current = BiLaurent::pow(yprime, static_cast<unsigned long long>(p)) -
                        BiLaurent::monomial(theta1, q, 0);
    chain.push(current, std::move(first));

    for (const auto& [wv, term] : extras) {
        const auto& [m, c] = term;
        nf.g.push_back(BiLaurent::monomial(c, m.xe, m.ye));
        BiLaurent piece = BiLaurent::monomial(c, m.xe, 0) *
                          BiLaurent::pow(yprime, static_cast<unsigned long long>(m.ye));
        current += piece;
        KeyStep st;
        st.n = 1;
        st.exps[0] = m.xe;
        if (m.ye != 0) st.exps[h_last_index] = m.ye;
        st.theta = -c;
        chain.push(current, std::move(st));
    }
    chain.finish();
    out.seq = std::move(chain.seq);
    out.normal_form = std::move(nf);
    return out;
}

BiLaurent local_to_global_keyform(const BiLaurent& U, long long p) {
    if (U.is_zero()) throw Error(errc::zero_polynomial, "transform of the zero polynomial");
    BiLaurent out;
    for (const auto& [m, c] : U.terms()) out.add_term(Mono{p - m.xe - m.ye, m.ye}, c);
    return out;
}

BiLaurent ftilde(const BiLaurent& f, long long q, long long p, long long r) {
    if (std::gcd(p, q) != 1) throw Error(errc::not_weierstrass, "pair (q, p) must be coprime");
    if (f.is_zero() || !f.monic_in_y() || f.max_yexp() != p)
        throw Error(errc::not_weierstrass, "expected a polynomial monic in v of degree p");
    const WeightedDegree w = WeightedDegree::order(p, q);
    BiLaurent out;
    for (const auto& [m, c] : f.terms())
        if (weighted_monomial_value(m, w) < p * q + r) out.add_term(m, c);
    return out;
}

namespace {

AlgebraicityVerdict decide_from_series(const PuiseuxPoly& phi, const BiLaurent* weierstrass,
                                       long long r) {
    if (phi.is_zero()) throw Error(errc::zero_series, "verdict for the zero germ");
    if (!(phi.leading_exponent() < Rational(1)))
        throw Error(errc::not_tangent, "germ is not tangent to the line");
    PuiseuxPairs pairs = puiseux_pairs(phi);
    if (pairs.size() > 1)
        throw Error(errc::too_many_pairs, "verdict via key forms needs at most one pair");
    const long long q = pairs[0].q, p = pairs[0].p;

    AlgebraicityVerdict v;
    v.contractible = is_contractible(pairs, r);

    KeyFormSeq local = local_key_polynomials(phi, r);
    if (r == 0) {
        v.ftilde_part = BiLaurent();
        v.last_global_form = BiLaurent::var_y();
    } else {
        v.ftilde_part = local.last();
        v.last_global_form = local_to_global_keyform(local.last(), p);
        if (weierstrass != nullptr && ftilde(*weierstrass, q, p, r) != v.ftilde_part)
            throw std::logic_error("effective part disagrees with the key-polynomial chain");
    }

    // two routes: degree bound on the effective part, polynomiality of the
    // last global key form
    bool by_degree = r == 0 || v.ftilde_part.total_degree() <= p;
    bool by_polynomiality = v.last_global_form.is_polynomial();
    if (by_degree != by_polynomiality)
        throw std::logic_error("degree-bound and key-form routes disagree");

    if (v.contractible) {
        v.algebraic = by_degree;
        if (!by_degree) {
            // grlex-largest negative-exponent monomial as the witness
            for (const auto& [m, c] : v.last_global_form.terms())
                if (m.xe < 0) {
                    v.witness = m;
                    v.witness_coeff = c;
                }
        }
    }
    return v;
}

} // namespace

AlgebraicityVerdict decide_algebraic(const PuiseuxPoly& phi, long long r) {
    return decide_from_series(phi, nullptr, r);
}

AlgebraicityVerdict decide_algebraic(const BiLaurent& weierstrass, long long r) {
    PuiseuxPoly phi = branch_series(weierstrass, r);
    PuiseuxPairs pairs = puiseux_pairs(phi);
    if (pairs.size() == 1 && weierstrass.max_yexp() != pairs[0].p)
        throw Error(errc::not_weierstrass, "degree in v must equal the polydromy order");
    return decide_from_series(phi, &weierstrass, r);
}

std::vector<long long> wp_weights(const KeyFormSeq& seq) {
    for (const auto& f : seq.forms)
        if (!f.is_polynomial())
            throw Error(errc::not_polynomial_key_forms, "a key form has a negative exponent");
    std::vector<long long> out;
    out.reserve(seq.values.size() + 1);
    out.push_back(1);
    out.insert(out.end(), seq.values.begin(), seq.values.end());
    return out;
}

bool verify_one_place(const BiLaurent& f, long long p, long long q) {
    if (f.is_zero() || !f.is_polynomial()) return false;
    if (p < 1 || q < 1 || std::gcd(p, q) != 1) return false;
    if (!f.monic_in_y() || f.max_yexp() != p) return false;
    if (f.max_xexp() != q) return false;
    // top x-coefficient must be a nonzero constant
    BiLaurent topx;
    for (const auto& [m, c] : f.terms())
        if (m.xe == q) topx.add_term(Mono{0, m.ye}, c);
    if (topx.is_zero() || topx.max_yexp() != 0) return false;
    return weighted_value(f, WeightedDegree::degree(p, q)) == p * q;
}

} // namespace oneplace
