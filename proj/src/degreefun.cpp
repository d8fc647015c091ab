#include "oneplace/degreefun.hpp"

#include <stdexcept>

namespace oneplace {

Valuation::Valuation(GenericSeries s) : series(std::move(s)) {
    if (series.mode() != SeriesMode::Local)
        throw std::invalid_argument("Valuation: local series expected");
}

Semidegree::Semidegree(GenericSeries s) : series(std::move(s)) {
    if (series.mode() != SeriesMode::Degreewise)
        throw std::invalid_argument("Semidegree: degreewise series expected");
}

EvalResult valuation_eval_full(const Valuation& nu, const BiLaurent& f) {
    SeriesExpansion e = substitute(f, nu.series);
    if (e.empty()) throw std::logic_error("valuation_eval: expansion vanished identically");
    const auto& [exp, lead] = *e.begin(); // least exponent
    Rational v = exp * Rational(nu.unit_value());
    return EvalResult{v.to_int64(), lead};
}

long long valuation_eval(const Valuation& nu, const BiLaurent& f) {
    return valuation_eval_full(nu, f).value;
}

EvalResult semidegree_eval_full(const Semidegree& delta, const BiLaurent& f) {
    SeriesExpansion e = substitute(f, delta.series);
    if (e.empty()) throw std::logic_error("semidegree_eval: expansion vanished identically");
    const auto& [exp, lead] = *e.rbegin(); // top exponent
    Rational v = exp * Rational(delta.unit_value());
    return EvalResult{v.to_int64(), lead};
}

long long semidegree_eval(const Semidegree& delta, const BiLaurent& f) {
    return semidegree_eval_full(delta, f).value;
}

bool validate_positive(const Semidegree& delta) {
    if (delta.series.fixed().is_zero()) return delta.series.xi_exponent().sign() > 0;
    BiLaurent contact = minimal_polynomial(delta.series.fixed());
    return semidegree_eval(delta, contact) > 0;
}

} // namespace oneplace
