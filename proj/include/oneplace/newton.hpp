#ifndef ONEPLACE_NEWTON_HPP
#define ONEPLACE_NEWTON_HPP

#include "oneplace/bilaurent.hpp"
#include "oneplace/puiseux.hpp"

namespace oneplace {

/// Newton-polygon iteration for a Weierstrass polynomial f (monic in v,
/// f(0,0) = 0, polynomial coefficients). Returns the Puiseux root with all
/// terms of exponent < bound. Valid for unibranch germs whose Puiseux
/// coefficients stay rational; anything else is rejected with
/// NotUnibranch / UnsupportedCoefficientField.
PuiseuxPoly newton_puiseux_truncated(const BiLaurent& f, const Rational& bound);

/// Root of f deep enough to carry its full characteristic-pair structure and
/// the fixed part of the blow-up series for the given r: the bound grows
/// until the truncated root reaches polydromy deg_v f.
PuiseuxPoly branch_series(const BiLaurent& f, long long r);

} // namespace oneplace

#endif
