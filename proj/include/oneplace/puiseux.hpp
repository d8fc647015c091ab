#ifndef ONEPLACE_PUISEUX_HPP
#define ONEPLACE_PUISEUX_HPP

#include <map>
#include <vector>

#include "oneplace/bilaurent.hpp"
#include "oneplace/xipoly.hpp"

namespace oneplace {

enum class SeriesMode { Local, Degreewise };

struct PuiseuxTerm {
    Rational exp;
    Rational coeff;
    friend bool operator==(const PuiseuxTerm& a, const PuiseuxTerm& b) {
        return a.exp == b.exp && a.coeff == b.coeff;
    }
};

/// Finite fractional-exponent series over Q.
/// Local mode: exponents strictly increasing and positive (germ at the
/// origin). Degreewise mode: exponents strictly decreasing (expansion at
/// infinity). No zero coefficients are stored.
class PuiseuxPoly {
public:
    explicit PuiseuxPoly(SeriesMode mode) : mode_(mode) {}
    PuiseuxPoly(SeriesMode mode, std::vector<PuiseuxTerm> terms); // validates ordering

    static PuiseuxPoly zero(SeriesMode mode) { return PuiseuxPoly(mode); }

    SeriesMode mode() const noexcept { return mode_; }
    const std::vector<PuiseuxTerm>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    const Rational& leading_exponent() const; // first stored exponent; pre: nonzero
    const Rational& leading_coeff() const;

    friend bool operator==(const PuiseuxPoly& a, const PuiseuxPoly& b) {
        return a.mode_ == b.mode_ && a.terms_ == b.terms_;
    }

    std::string to_string(const char* var = "u") const; // e.g. "u^(3/5) + u^2"

private:
    SeriesMode mode_;
    std::vector<PuiseuxTerm> terms_;
};

struct PuiseuxPair {
    long long q = 0;
    long long p = 1;
    friend bool operator==(const PuiseuxPair& a, const PuiseuxPair& b) { return a.q == b.q && a.p == b.p; }
};
using PuiseuxPairs = std::vector<PuiseuxPair>;

/// Validates the local-pair invariants: q_k >= 1 coprime to p_k >= 2,
/// characteristic exponents q_k/(p_1...p_k) strictly increasing.
void validate_pairs(const PuiseuxPairs& pairs);

/// Smallest positive integer p with every exponent in (1/p) * Z.
long long polydromy_order(const PuiseuxPoly& s);

/// Characteristic pairs of an exponent sequence given in series order;
/// each pair marks an exponent whose denominator leaves the lattice spanned
/// so far. Works for both orientations.
PuiseuxPairs exponent_pairs(const std::vector<Rational>& exps);

/// Characteristic pairs of a local series (empty when all exponents are
/// integers).
PuiseuxPairs puiseux_pairs(const PuiseuxPoly& s);

/// Subseries of terms with exponent < omega (local) or > omega (degreewise).
PuiseuxPoly truncate_below(const PuiseuxPoly& s, const Rational& omega);

/// Series with a generic tail: fixed part plus xi * u^xi_exponent, where xi
/// stays an indeterminate. Carrier of divisorial valuations and semidegrees.
class GenericSeries {
public:
    GenericSeries(PuiseuxPoly fixed, Rational xi_exponent); // validates, computes scale

    const PuiseuxPoly& fixed() const noexcept { return fixed_; }
    const Rational& xi_exponent() const noexcept { return xi_exp_; }
    long long scale() const noexcept { return scale_; }
    SeriesMode mode() const noexcept { return fixed_.mode(); }

    /// Pair structure of the full exponent list (fixed exponents, then the
    /// xi slot).
    PuiseuxPairs pairs() const;

    std::string to_string(const char* var = "u") const;

    friend bool operator==(const GenericSeries& a, const GenericSeries& b) {
        return a.fixed_ == b.fixed_ && a.xi_exp_ == b.xi_exp_;
    }

private:
    PuiseuxPoly fixed_;
    Rational xi_exp_;
    long long scale_;
};

/// Generic series of the divisor reached from a germ by resolving and then
/// blowing up r more times: fixed part is the germ truncated below
/// (q_last + r)/p, the xi term sits at that exponent.
GenericSeries generic_series_from_germ(const PuiseuxPoly& phi, long long r);

/// Coordinate change (x, y) = (1/u, v/u): a local series v = sigma(u) turns
/// into the degreewise series y = sigma_glob(x), term c*u^e |-> c*x^(1-e).
GenericSeries to_global(const GenericSeries& sigma);

/// Exact expansion of f with the y-variable replaced by the series; keyed by
/// exponent, coefficients polynomials in xi.
using SeriesExpansion = std::map<Rational, XiPoly>;
SeriesExpansion substitute(const BiLaurent& f, const GenericSeries& sigma);

/// Monic-in-y conjugate product: the unique monic polynomial in y over
/// Q[x,x^-1] vanishing on every conjugate of the series. Computed as the
/// characteristic polynomial of multiplication by the series on
/// Q[x,x^-1][t]/(t^p - x), which equals the resultant Res_t(t^p - x, ...).
BiLaurent minimal_polynomial(const PuiseuxPoly& fixed);

/// Vanishing order of g along the parametrization t -> (t^p, phi(t^p)).
long long intersection_multiplicity(const PuiseuxPoly& phi, const BiLaurent& g);

} // namespace oneplace

#endif
