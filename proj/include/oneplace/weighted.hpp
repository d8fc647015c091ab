#ifndef ONEPLACE_WEIGHTED_HPP
#define ONEPLACE_WEIGHTED_HPP

#include "oneplace/bilaurent.hpp"
#include "oneplace/errors.hpp"

namespace oneplace {

/// Weighted degree/order data: weight wx for the x-variable, wy for the
/// y-variable. Degree mode takes the max over terms, order mode the min.
struct WeightedDegree {
    enum class Mode { Degree, Order };
    long long wx = 1;
    long long wy = 1;
    Mode mode = Mode::Degree;

    static WeightedDegree degree(long long wx, long long wy) { return {wx, wy, Mode::Degree}; }
    static WeightedDegree order(long long wx, long long wy) { return {wx, wy, Mode::Order}; }
};

/// Weight of a single monomial.
inline long long weighted_monomial_value(const Mono& m, const WeightedDegree& w) {
    return w.wx * m.xe + w.wy * m.ye;
}

/// max (degree mode) or min (order mode) of wx*xe + wy*ye over the terms.
inline long long weighted_value(const BiLaurent& f, const WeightedDegree& w) {
    if (f.is_zero()) throw Error(errc::zero_polynomial, "weighted value of the zero polynomial");
    bool first = true;
    long long best = 0;
    for (const auto& [m, c] : f.terms()) {
        long long v = weighted_monomial_value(m, w);
        if (first)
            best = v;
        else if (w.mode == WeightedDegree::Mode::Degree)
            best = v > best ? v : best;
        else
            best = v < best ? v : best;
        first = false;
    }
    return best;
}

} // namespace oneplace

#endif
