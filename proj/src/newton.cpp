#include "oneplace/newton.hpp"

#include <algorithm>
#include <numeric>

namespace oneplace {

namespace {

void require_weierstrass(const BiLaurent& f) {
    if (f.is_zero() || !f.is_polynomial())
        throw Error(errc::not_weierstrass, "defining polynomial must be a nonzero polynomial");
    if (f.max_yexp() < 1 || !f.monic_in_y())
        throw Error(errc::not_weierstrass, "defining polynomial must be monic in v");
    if (!f.coeff(0, 0).is_zero())
        throw Error(errc::not_weierstrass, "germ must pass through the origin");
}

// g(s, w) -> g(s, s^k * (c + w)), divided by the least s-power of the result.
BiLaurent shift_root(const BiLaurent& g, long long k, const Rational& c) {
    BiLaurent out;
    const BiLaurent cw = BiLaurent::constant(c) + BiLaurent::var_y();
    long long maxy = g.max_yexp();
    std::vector<BiLaurent> powers(static_cast<std::size_t>(maxy) + 1);
    powers[0] = BiLaurent::constant(Rational(1));
    for (long long b = 1; b <= maxy; ++b)
        powers[static_cast<std::size_t>(b)] = powers[static_cast<std::size_t>(b - 1)] * cw;
    for (const auto& [m, coeff] : g.terms())
        out += BiLaurent::monomial(coeff, m.xe + k * m.ye, 0) * powers[static_cast<std::size_t>(m.ye)];
    return out.shifted(-out.min_xexp(), 0);
}

BiLaurent ramify(const BiLaurent& g, long long p) {
    BiLaurent out;
    for (const auto& [m, coeff] : g.terms()) out.add_term(Mono{m.xe * p, m.ye}, coeff);
    return out;
}

} // namespace

PuiseuxPoly newton_puiseux_truncated(const BiLaurent& f, const Rational& bound) {
    require_weierstrass(f);

    BiLaurent g = f;
    long long m = 1;           // current ramification: u = s^m
    Rational base(0);          // exponent (in u units) accumulated so far
    std::vector<PuiseuxTerm> acc;

    for (int step = 0; step < 10000; ++step) {
        // A = ord_s g(s, 0); absent pure-s terms mean the root ended exactly
        bool has_a = false;
        long long a_min = 0;
        // b0 = ord_w g(0, w): number of branch continuations of positive order
        bool has_b = false;
        long long b0 = 0;
        for (const auto& [mono, c] : g.terms()) {
            if (mono.ye == 0 && (!has_a || mono.xe < a_min)) {
                has_a = true;
                a_min = mono.xe;
            }
            if (mono.xe == 0 && (!has_b || mono.ye < b0)) {
                has_b = true;
                b0 = mono.ye;
            }
        }
        if (!has_a) return PuiseuxPoly(SeriesMode::Local, std::move(acc));
        if (!has_b || a_min == 0 || b0 == 0)
            throw Error(errc::not_unibranch, "no branch of positive order continues");

        // single lower edge from (0, b0) to (a_min, 0): every point on or above it
        for (const auto& [mono, c] : g.terms())
            if (mono.xe * b0 + mono.ye * a_min < a_min * b0)
                throw Error(errc::not_unibranch, "Newton polygon has several edges");

        const long long hgcd = std::gcd(a_min, b0);
        const long long p1 = b0 / hgcd;   // denominator of the slope a_min/b0
        const long long q1 = a_min / hgcd;
        const long long h = hgcd;

        // edge polynomial E(z) = sum over on-edge points of coeff * z^b,
        // a polynomial in z^p1 of z-degree b0
        std::vector<Rational> edge(static_cast<std::size_t>(h) + 1); // coefficient of z^(j*p1)
        for (const auto& [mono, c] : g.terms())
            if (mono.xe * b0 + mono.ye * a_min == a_min * b0)
                edge[static_cast<std::size_t>(mono.ye / p1)] = c;

        // unibranch over Q requires E = lead * (z^p1 - theta)^h with a
        // rational p1-th root of theta
        const Rational lead = edge[static_cast<std::size_t>(h)];
        const Rational theta = -edge[static_cast<std::size_t>(h - 1)] / (Rational(h) * lead);
        if (theta.is_zero()) throw Error(errc::not_unibranch, "degenerate Newton edge");
        {
            Rational binom(1);
            for (long long j = h; j >= 0; --j) {
                // lead * C(h, j) * (-theta)^(h-j)
                Rational expect = lead * binom * Rational::pow(-theta, h - j);
                if (edge[static_cast<std::size_t>(j)] != expect)
                    throw Error(errc::not_unibranch, "edge polynomial splits into distinct roots");
                binom *= Rational(j) / Rational(h - j + 1);
            }
        }
        Rational c;
        if (!Rational::nth_root_exact(theta, static_cast<unsigned long long>(p1), c))
            throw Error(errc::unsupported_coefficient_field,
                        "Puiseux coefficient requires an irrational root of " + theta.to_string());

        if (p1 > 1) {
            g = ramify(g, p1);
            m *= p1;
        }
        const Rational exponent = base + Rational(q1, m);
        if (!(exponent < bound)) return PuiseuxPoly(SeriesMode::Local, std::move(acc));
        g = shift_root(g, q1, c);
        acc.push_back(PuiseuxTerm{exponent, c});
        base = exponent;
    }
    throw Error(errc::not_unibranch, "Newton iteration did not terminate");
}

PuiseuxPoly branch_series(const BiLaurent& f, long long r) {
    require_weierstrass(f);
    const long long target = f.max_yexp(); // polydromy of a unibranch root equals deg_v
    const long long cap = 4 * (f.max_xexp() + 1) * (f.max_yexp() + 1) + r + 4;
    Rational bound(2);
    for (;;) {
        PuiseuxPoly root = newton_puiseux_truncated(f, bound);
        if (polydromy_order(root) == target) {
            // all characteristic exponents found; extend past the xi slot
            PuiseuxPairs pairs = puiseux_pairs(root);
            if (pairs.empty()) return root; // integer exponents only (deg_v = 1)
            BigInt denom(1);
            for (const auto& pr : pairs) denom = denom * BigInt(pr.p);
            Rational need = Rational(BigInt(pairs.back().q), denom) + Rational(r + 1, target);
            if (!(bound < need)) return root;
            bound = need;
        } else {
            if (bound > Rational(cap))
                throw Error(errc::not_unibranch, "root never reaches full polydromy; germ is not unibranch");
            bound += bound;
        }
    }
}

} // namespace oneplace
