#ifndef ONEPLACE_BILAURENT_HPP
#define ONEPLACE_BILAURENT_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "oneplace/errors.hpp"
#include "oneplace/rational.hpp"

namespace oneplace {

/// Exponent pair of one Laurent monomial x^xe * y^ye (ye >= 0).
struct Mono {
    long long xe = 0;
    long long ye = 0;
    friend bool operator==(const Mono& a, const Mono& b) { return a.xe == b.xe && a.ye == b.ye; }
};

/// Graded lexicographic order on (xe, ye); canonical term order of BiLaurent.
struct MonoGrlex {
    bool operator()(const Mono& a, const Mono& b) const {
        long long da = a.xe + a.ye, db = b.xe + b.ye;
        if (da != db) return da < db;
        if (a.xe != b.xe) return a.xe < b.xe;
        return a.ye < b.ye;
    }
};

/// Element of Q[x, x^-1, y]: finitely many terms c * x^a * y^b with a in Z,
/// b >= 0. Doubles as Q[u, u^-1, v] in local coordinates; variable names are
/// chosen at print time.
class BiLaurent {
public:
    using TermMap = std::map<Mono, Rational, MonoGrlex>;

    BiLaurent() = default;
    static BiLaurent zero() { return BiLaurent(); }
    static BiLaurent constant(const Rational& c);
    static BiLaurent monomial(const Rational& c, long long xe, long long ye);
    static BiLaurent var_x() { return monomial(Rational(1), 1, 0); }
    static BiLaurent var_y() { return monomial(Rational(1), 0, 1); }

    bool is_zero() const noexcept { return terms_.empty(); }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }

    /// true iff no term has a negative x-exponent (zero counts as polynomial).
    bool is_polynomial() const;

    Rational coeff(long long xe, long long ye) const;
    void add_term(const Mono& m, const Rational& c); // accumulate, drop zeros

    long long min_xexp() const; // pre: nonzero
    long long max_xexp() const;
    long long max_yexp() const; // 0 for nonzero constants
    /// Usual total degree max(xe+ye); meaningful for polynomials.
    long long total_degree() const;

    /// Coefficient of y^k as a Laurent polynomial in x alone.
    BiLaurent y_coefficient(long long k) const;
    bool monic_in_y() const; // top y-coefficient is the constant 1

    BiLaurent operator-() const;
    friend BiLaurent operator+(const BiLaurent& a, const BiLaurent& b);
    friend BiLaurent operator-(const BiLaurent& a, const BiLaurent& b);
    friend BiLaurent operator*(const BiLaurent& a, const BiLaurent& b);
    BiLaurent& operator+=(const BiLaurent& b) { return *this = *this + b; }
    BiLaurent& operator-=(const BiLaurent& b) { return *this = *this - b; }
    BiLaurent& operator*=(const BiLaurent& b) { return *this = *this * b; }
    friend BiLaurent operator*(const Rational& c, const BiLaurent& a);
    friend bool operator==(const BiLaurent& a, const BiLaurent& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const BiLaurent& a, const BiLaurent& b) { return !(a == b); }

    static BiLaurent pow(const BiLaurent& base, unsigned long long e);

    /// Shift by a monomial: multiply every term by x^dx * y^dy.
    /// The result must still satisfy ye >= 0.
    BiLaurent shifted(long long dx, long long dy) const;

    /// Exact division in Q[x,x^-1,y]; returns false when b does not divide a.
    static bool try_divide(const BiLaurent& a, const BiLaurent& b, BiLaurent& quotient);
    static BiLaurent divide_exact(const BiLaurent& a, const BiLaurent& b);

    /// Substitute y |-> g(x, y), x |-> x. g needs ye >= 0 preserved.
    BiLaurent substitute_y(const BiLaurent& g) const;

private:
    TermMap terms_;
};

} // namespace oneplace

#endif
