#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "oneplace/puiseux.hpp"
#include "oneplace/upoly.hpp"
#include "testutil.hpp"

using namespace oneplace;
using testutil::parse_global;
using testutil::parse_local;
using testutil::series;

namespace {

// test-only oracle: plug an exact (xi-free) fractional-exponent series into f
std::map<Rational, Rational> plug_series(const BiLaurent& f, const PuiseuxPoly& s) {
    std::map<Rational, Rational> acc;
    long long maxy = f.max_yexp();
    std::vector<std::map<Rational, Rational>> pw(static_cast<std::size_t>(maxy) + 1);
    pw[0][Rational(0)] = Rational(1);
    for (long long k = 1; k <= maxy; ++k)
        for (const auto& [e, c] : pw[static_cast<std::size_t>(k - 1)])
            for (const auto& t : s.terms()) {
                auto& m = pw[static_cast<std::size_t>(k)][e + t.exp];
                m += c * t.coeff;
                if (m.is_zero()) pw[static_cast<std::size_t>(k)].erase(e + t.exp);
            }
    for (const auto& [mono, c] : f.terms())
        for (const auto& [e, pc] : pw[static_cast<std::size_t>(mono.ye)]) {
            Rational& slot = acc[e + Rational(mono.xe)];
            slot += c * pc;
            if (slot.is_zero()) acc.erase(e + Rational(mono.xe));
        }
    return acc;
}

// independent route: Res_t(t^p - x, t^M y - t^M psi(t)) divided by the x-power,
// sign-normalized monic in y
BiLaurent minimal_poly_resultant(const PuiseuxPoly& fixed) {
    long long p = polydromy_order(fixed);
    std::map<long long, Rational> psi;
    for (const auto& t : fixed.terms()) psi[(t.exp * Rational(p)).to_int64()] = t.coeff;
    long long m = 0;
    for (const auto& [e, c] : psi) m = std::min(m, e);
    m = -m;
    std::vector<BiLaurent> g;
    auto put = [&g](std::size_t idx, const BiLaurent& val) {
        if (g.size() <= idx) g.resize(idx + 1);
        g[idx] += val;
    };
    for (const auto& [e, c] : psi) put(static_cast<std::size_t>(e + m), BiLaurent::constant(-c));
    put(static_cast<std::size_t>(m), BiLaurent::var_y());
    std::vector<BiLaurent> fc(static_cast<std::size_t>(p) + 1);
    fc[0] = -BiLaurent::var_x();
    fc[static_cast<std::size_t>(p)] = BiLaurent::constant(Rational(1));
    BiLaurent res = resultant(UPoly(fc), UPoly(g));
    long long py = res.max_yexp();
    BiLaurent top = res.y_coefficient(py);
    REQUIRE(top.term_count() == 1);
    const auto& [tm, tc] = *top.terms().begin();
    REQUIRE((tc == Rational(1) || tc == Rational(-1)));
    res = res.shifted(-tm.xe, 0);
    if (tc == Rational(-1)) res = -res;
    return res;
}

} // namespace

TEST_CASE("polydromy order is the common exponent denominator") {
    CHECK(polydromy_order(series({{"3/5", "1"}, {"2", "1"}})) == 5);
    CHECK(polydromy_order(series({{"1/2", "1"}, {"3/4", "1"}})) == 4);
    CHECK(polydromy_order(series({{"2/5", "1"}, {"-1", "1"}}, SeriesMode::Degreewise)) == 5);
    CHECK(polydromy_order(PuiseuxPoly::zero(SeriesMode::Local)) == 1);
}

TEST_CASE("characteristic pairs") {
    CHECK(puiseux_pairs(series({{"3/5", "1"}, {"2", "1"}})) == PuiseuxPairs{{3, 5}});
    CHECK(puiseux_pairs(series({{"1/2", "1"}, {"3/4", "1"}})) == PuiseuxPairs{{1, 2}, {3, 2}});
    CHECK(puiseux_pairs(series({{"1", "1"}, {"3", "1"}})) == PuiseuxPairs{});
    // non-characteristic terms do not add pairs
    CHECK(puiseux_pairs(series({{"3/5", "1"}, {"4/5", "2"}, {"2", "1"}})) == PuiseuxPairs{{3, 5}});
}

TEST_CASE("pair sequence round trip") {
    // rebuild a unit-coefficient series from pairs and recover the pairs
    for (long long p1 = 2; p1 <= 7; ++p1)
        for (long long q1 = 1; q1 < 2 * p1; ++q1) {
            if (std::gcd(p1, q1) != 1) continue;
            std::string e1 = std::to_string(q1) + "/" + std::to_string(p1);
            CHECK(puiseux_pairs(series({{e1.c_str(), "1"}})) == PuiseuxPairs{{q1, p1}});
            for (long long p2 = 2; p2 <= 7; ++p2)
                for (long long q2 = q1 * p2 + 1; q2 <= q1 * p2 + 12; ++q2) {
                    if (std::gcd(p2, q2) != 1) continue;
                    std::string e2 = std::to_string(q2) + "/" + std::to_string(p1 * p2);
                    CHECK(puiseux_pairs(series({{e1.c_str(), "1"}, {e2.c_str(), "1"}})) ==
                          PuiseuxPairs{{q1, p1}, {q2, p2}});
                }
        }
}

TEST_CASE("truncation below a cut") {
    PuiseuxPoly phi = series({{"3/5", "1"}, {"2", "1"}});
    CHECK(truncate_below(phi, Rational(2)) == series({{"3/5", "1"}}));
    CHECK(truncate_below(phi, Rational(11, 5)) == phi);
    CHECK(truncate_below(series({{"3/5", "1"}}), Rational(3, 5)).is_zero());
    // degreewise truncation keeps the terms above the cut
    PuiseuxPoly glob = series({{"2/5", "1"}, {"-1", "1"}}, SeriesMode::Degreewise);
    CHECK(truncate_below(glob, Rational(0)) == series({{"2/5", "1"}}, SeriesMode::Degreewise));
}

TEST_CASE("generic series of a germ family") {
    GenericSeries a = generic_series_from_germ(series({{"3/5", "1"}}), 8);
    CHECK(a.fixed() == series({{"3/5", "1"}}));
    CHECK(a.xi_exponent() == Rational(11, 5));
    CHECK(a.scale() == 5);

    GenericSeries b = generic_series_from_germ(series({{"3/5", "1"}, {"2", "1"}}), 8);
    CHECK(b.fixed() == series({{"3/5", "1"}, {"2", "1"}}));
    CHECK(b.xi_exponent() == Rational(11, 5));

    GenericSeries c = generic_series_from_germ(series({{"3/5", "1"}}), 0);
    CHECK(c.fixed().is_zero());
    CHECK(c.xi_exponent() == Rational(3, 5));
    CHECK(c.scale() == 5);

    // the truncation can cut fixed terms: r = 5 keeps only u^(3/5)
    GenericSeries d = generic_series_from_germ(series({{"3/5", "1"}, {"2", "1"}}), 5);
    CHECK(d.fixed() == series({{"3/5", "1"}}));

    CHECK_THROWS_AS(generic_series_from_germ(series({{"1", "1"}, {"3", "1"}}), 1), Error);
}

TEST_CASE("local to global transform") {
    GenericSeries a = to_global(generic_series_from_germ(series({{"3/5", "1"}}), 8));
    CHECK(a.mode() == SeriesMode::Degreewise);
    CHECK(a.fixed() == series({{"2/5", "1"}}, SeriesMode::Degreewise));
    CHECK(a.xi_exponent() == Rational(-6, 5));

    GenericSeries b = to_global(generic_series_from_germ(series({{"3/5", "1"}, {"2", "1"}}), 8));
    CHECK(b.fixed() == series({{"2/5", "1"}, {"-1", "1"}}, SeriesMode::Degreewise));
    CHECK(b.xi_exponent() == Rational(-6, 5));
    CHECK(b.scale() == 5);

    GenericSeries c = to_global(generic_series_from_germ(series({{"3/5", "1"}}), 0));
    CHECK(c.fixed().is_zero());
    CHECK(c.xi_exponent() == Rational(2, 5));

    GenericSeries bad(series({{"3/2", "1"}}), Rational(2));
    CHECK_THROWS_AS(to_global(bad), Error);
}

TEST_CASE("substitution with the generic tail") {
    GenericSeries s1(PuiseuxPoly::zero(SeriesMode::Degreewise), Rational(2, 5));
    SeriesExpansion e1 = substitute(parse_global("y^5 - x^2"), s1);
    REQUIRE(e1.size() == 1);
    CHECK(e1.begin()->first == Rational(2));
    CHECK(e1.begin()->second == XiPoly::pow(XiPoly::xi(), 5) - XiPoly(Rational(1)));

    GenericSeries s2(series({{"2/5", "1"}}, SeriesMode::Degreewise), Rational(-6, 5));
    SeriesExpansion e2 = substitute(parse_global("y"), s2);
    REQUIRE(e2.size() == 2);
    CHECK(e2.rbegin()->first == Rational(2, 5));
    CHECK(e2.rbegin()->second == XiPoly(Rational(1)));
    CHECK(e2.begin()->first == Rational(-6, 5));
    CHECK(e2.begin()->second == XiPoly::xi());

    GenericSeries s3(series({{"2/5", "1"}, {"-1", "1"}}, SeriesMode::Degreewise), Rational(-6, 5));
    SeriesExpansion e3 = substitute(parse_global("y^5 - x^2 - 5y^4x^-1"), s3);
    REQUIRE(!e3.empty());
    CHECK(e3.rbegin()->first == Rational(2, 5));
    CHECK(e3.rbegin()->second == XiPoly(Rational(5)) * XiPoly::xi());

    CHECK_THROWS_AS(substitute(BiLaurent(), s1), Error);
}

TEST_CASE("minimal polynomial is the conjugate product") {
    CHECK(minimal_polynomial(series({{"3/5", "1"}})) == parse_local("v^5 - u^3"));
    CHECK(minimal_polynomial(series({{"3/5", "1"}, {"2", "1"}})) ==
          parse_local("v^5 - 5v^4u^2 + 10v^3u^4 - 10v^2u^6 + 5vu^8 - u^10 - u^3"));
    CHECK(minimal_polynomial(series({{"2/5", "1"}}, SeriesMode::Degreewise)) == parse_global("y^5 - x^2"));
    CHECK(minimal_polynomial(series({{"2/5", "1"}, {"-1", "1"}}, SeriesMode::Degreewise)) ==
          parse_global("y^5 - 5y^4x^-1 + 10y^3x^-2 - 10y^2x^-3 + 5yx^-4 - x^-5 - x^2"));
    CHECK_THROWS_AS(minimal_polynomial(PuiseuxPoly::zero(SeriesMode::Local)), Error);
}

TEST_CASE("minimal polynomial: monic, annihilating, degree = polydromy") {
    auto check_one = [](const PuiseuxPoly& s) {
        BiLaurent mp = minimal_polynomial(s);
        CHECK(mp.monic_in_y());
        CHECK(mp.max_yexp() == polydromy_order(s));
        CHECK(plug_series(mp, s).empty()); // the series is a root
        CHECK(mp == minimal_poly_resultant(s));
    };
    check_one(series({{"3/5", "1"}, {"2", "1"}}));
    check_one(series({{"2/5", "1"}, {"-1", "1"}}, SeriesMode::Degreewise));
    check_one(series({{"1/2", "1"}, {"3/4", "-2/3"}}));
    check_one(series({{"5/3", "2"}, {"7/3", "1/2"}}));
    for (int i = 0; i < 10; ++i) {
        long long p = testutil::rand_int(2, 4);
        long long q = p + 1;
        while (std::gcd(p, q) != 1) ++q;
        std::vector<PuiseuxTerm> terms;
        terms.push_back({Rational(q, p), testutil::rand_rational()});
        terms.push_back({Rational(q + testutil::rand_int(1, 3), p), testutil::rand_rational()});
        check_one(PuiseuxPoly(SeriesMode::Local, terms));
    }
}

TEST_CASE("intersection multiplicity along a parametrized branch") {
    CHECK(intersection_multiplicity(series({{"3/5", "1"}}), parse_local("u")) == 5);
    CHECK(intersection_multiplicity(series({{"3/5", "1"}, {"2", "1"}}), parse_local("v")) == 3);
    // the alpha oracle: a generic member of the r = 8 family meets the germ in 23
    BiLaurent member = minimal_polynomial(series({{"3/5", "1"}, {"11/5", "2"}}));
    CHECK(intersection_multiplicity(series({{"3/5", "1"}}), member) == 23);
    CHECK_THROWS_AS(intersection_multiplicity(series({{"3/5", "1"}}), parse_local("v^5 - u^3")), Error);
}

TEST_CASE("intersection multiplicity is additive under products") {
    PuiseuxPoly phi = series({{"2/3", "1"}, {"5/3", "-2"}});
    for (int i = 0; i < 100; ++i) {
        BiLaurent g = testutil::rand_bilaurent(3, 0, 3, 3);
        BiLaurent h = testutil::rand_bilaurent(3, 0, 3, 3);
        long long a, b;
        try {
            a = intersection_multiplicity(phi, g);
            b = intersection_multiplicity(phi, h);
        } catch (const Error&) {
            continue; // g or h vanished on the branch
        }
        CHECK(intersection_multiplicity(phi, g * h) == a + b);
    }
}

TEST_CASE("branch data is visible in products of minimal polynomials") {
    // two branches with p <= 3: the product carries the factor data
    PuiseuxPoly b1 = series({{"-1/2", "1"}}, SeriesMode::Degreewise);
    PuiseuxPoly b2 = series({{"-2/3", "1"}, {"-5/3", "1"}}, SeriesMode::Degreewise);
    BiLaurent f = minimal_polynomial(b1) * minimal_polynomial(b2);

    CHECK(f.max_yexp() == 5); // polydromies add
    BiLaurent quotient;
    CHECK(BiLaurent::try_divide(f, minimal_polynomial(b1), quotient));
    CHECK(quotient == minimal_polynomial(b2));

    // recover the multiset (leading exponent, conjugate count) from the
    // upper Newton polygon of f
    std::map<long long, long long> top; // y-exponent -> max x-exponent
    for (const auto& [m, c] : f.terms()) {
        auto [it, fresh] = top.emplace(m.ye, m.xe);
        if (!fresh) it->second = std::max(it->second, m.xe);
    }
    std::vector<std::pair<long long, long long>> pts(top.rbegin(), top.rend()); // ye descending
    std::vector<std::pair<long long, long long>> hull;
    for (const auto& pt : pts) {
        while (hull.size() >= 2) {
            auto [x1, y1] = hull[hull.size() - 2];
            auto [x2, y2] = hull[hull.size() - 1];
            if ((y2 - y1) * (pt.first - x1) >= (pt.second - y1) * (x2 - x1))
                hull.pop_back();
            else
                break;
        }
        hull.push_back(pt);
    }
    std::multiset<std::pair<Rational, long long>> got,
        expected{{Rational(-1, 2), 2}, {Rational(-2, 3), 3}};
    for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
        long long dy = hull[i + 1].second - hull[i].second;
        long long dx = hull[i].first - hull[i + 1].first; // conjugate count
        got.emplace(Rational(dy, dx), dx);
    }
    CHECK(got == expected);
}
