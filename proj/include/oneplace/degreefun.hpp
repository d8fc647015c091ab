#ifndef ONEPLACE_DEGREEFUN_HPP
#define ONEPLACE_DEGREEFUN_HPP

#include "oneplace/puiseux.hpp"

namespace oneplace {

/// Divisorial valuation given by a local generic series: nu(f) is nu(u)
/// times the least exponent of f evaluated along the series, nu(u) being
/// the polydromy order.
struct Valuation {
    GenericSeries series;
    explicit Valuation(GenericSeries s);
    long long unit_value() const { return series.scale(); }
};

/// Semidegree (negative of a divisorial valuation) given by a degreewise
/// generic series: delta(f) is delta(x) times the top exponent of f along
/// the series.
struct Semidegree {
    GenericSeries series;
    explicit Semidegree(GenericSeries s);
    long long unit_value() const { return series.scale(); }
};

/// Value together with the xi-polynomial sitting at the extremal exponent.
/// A non-constant leading coefficient is the signal that the generic tail
/// has entered the evaluation.
struct EvalResult {
    long long value = 0;
    XiPoly leading;
};

EvalResult valuation_eval_full(const Valuation& nu, const BiLaurent& f);
long long valuation_eval(const Valuation& nu, const BiLaurent& f);

EvalResult semidegree_eval_full(const Semidegree& delta, const BiLaurent& f);
long long semidegree_eval(const Semidegree& delta, const BiLaurent& f);

/// True iff delta takes positive values on every non-constant polynomial,
/// i.e. every key-form value is positive. Equivalent tests: with no fixed
/// part the xi exponent must be positive; otherwise the contact value
/// delta(minimal polynomial of the fixed part) must be positive.
bool validate_positive(const Semidegree& delta);

} // namespace oneplace

#endif
