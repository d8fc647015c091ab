#ifndef ONEPLACE_TESTUTIL_HPP
#define ONEPLACE_TESTUTIL_HPP

#include <random>

#include "oneplace/bilaurent.hpp"
#include "oneplace/puiseux.hpp"
#include "oneplace/textio.hpp"

namespace testutil {

using oneplace::BiLaurent;
using oneplace::Mono;
using oneplace::Rational;

inline std::mt19937& rng() {
    static std::mt19937 gen(20240517u);
    return gen;
}

inline long long rand_int(long long lo, long long hi) {
    std::uniform_int_distribution<long long> d(lo, hi);
    return d(rng());
}

inline Rational rand_rational(long long mag = 9) {
    long long num = rand_int(-mag, mag);
    if (num == 0) num = 1;
    return Rational(num, rand_int(1, 4));
}

/// Random nonzero BiLaurent with up to max_terms terms and small exponents.
inline BiLaurent rand_bilaurent(int max_terms = 5, long long min_x = -3, long long max_x = 4,
                                long long max_y = 4) {
    BiLaurent f;
    int terms = static_cast<int>(rand_int(1, max_terms));
    for (int i = 0; i < terms; ++i)
        f.add_term(Mono{rand_int(min_x, max_x), rand_int(0, max_y)}, rand_rational());
    if (f.is_zero()) f = BiLaurent::monomial(Rational(1), 1, 1);
    return f;
}

inline BiLaurent parse_local(std::string_view s) {
    return oneplace::parse_bilaurent(s, oneplace::VarNames::local());
}

inline BiLaurent parse_global(std::string_view s) {
    return oneplace::parse_bilaurent(s, oneplace::VarNames::global());
}

/// Local series from (exponent, coefficient) pairs given as strings.
inline oneplace::PuiseuxPoly series(std::initializer_list<std::pair<const char*, const char*>> terms,
                                    oneplace::SeriesMode mode = oneplace::SeriesMode::Local) {
    std::vector<oneplace::PuiseuxTerm> v;
    for (const auto& [e, c] : terms)
        v.push_back({Rational::from_string(e), Rational::from_string(c)});
    return oneplace::PuiseuxPoly(mode, std::move(v));
}

} // namespace testutil

#endif
