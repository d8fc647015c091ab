#ifndef ONEPLACE_KEYFORMS_HPP
#define ONEPLACE_KEYFORMS_HPP

#include <map>
#include <optional>
#include <vector>

#include "oneplace/degreefun.hpp"
#include "oneplace/puiseux.hpp"

namespace oneplace {

/// Orientation of a key sequence: local chains mirror the global definition
/// with the inequality reversed.
enum class KeyMode {
    LocalOrder,  // values from a valuation; omega_{j+1} > n_j * omega_j
    GlobalDegree // values from a semidegree; omega_{j+1} < n_j * omega_j
};

/// One recursion step: forms[j+1] = forms[j]^n - theta * prod_i forms[i]^exps[i].
/// Only the exponent on forms[0] may be negative.
struct KeyStep {
    long long n = 1;
    std::map<std::size_t, long long> exps;
    Rational theta;
};

/// Sequence f_0, f_1, ..., f_k with values and recursion data.
struct KeyFormSeq {
    KeyMode mode = KeyMode::GlobalDegree;
    std::vector<BiLaurent> forms;
    std::vector<long long> values;
    std::vector<KeyStep> steps; // steps[t] produces forms[t + 2]

    const BiLaurent& last() const { return forms.back(); }
};

/// Checks the defining properties of a key sequence as exact identities:
/// the minimality of each n_j against the value lattice, the value identity
/// n_j w_j = sum m_{j,i} w_i with the mode's strict inequality, the exponent
/// bounds 0 <= m_{j,i} < n_i for i >= 1, and the recursion identity on the
/// forms themselves. Throws std::logic_error on any violation.
void verify_key_properties(const KeyFormSeq& seq);

/// Normalization data of a one-pair global series: the integer-exponent
/// prefix h pulled out of y, the fractional level (p, q, s), the conjugate
/// product of the fractional part and its subtracted monomials.
struct OnePairNormalForm {
    BiLaurent h;  // polynomial in x subtracted from y (y' = y - h)
    std::vector<Rational> a; // a[i] multiplies x^((q-i)/p), i = 0..s-1, a[0] != 0
    long long p = 1;
    long long q = 0;
    long long s = 1;
    long long d_delta = 0; // p*q - s
    BiLaurent phi;         // conjugate product, monic in y' of degree p
    std::vector<BiLaurent> g; // monomials of phi - y'^p + a0^p x^q of weight > d_delta, decreasing
};

/// Key polynomials of the valuation attached to (germ, r), for germs with at
/// most one characteristic pair: u, v for r = 0; otherwise u, v, then the
/// weight-truncation chain ending in the effective part of the Weierstrass
/// polynomial.
KeyFormSeq local_key_polynomials(const PuiseuxPoly& phi, long long r);

struct GlobalKeyForms {
    KeyFormSeq seq;
    std::optional<OnePairNormalForm> normal_form; // present in the fractional case
};

/// Key forms of a positive one-pair semidegree: the prefix chain through the
/// integer part of the series, then the conjugate-product chain.
GlobalKeyForms key_forms(const Semidegree& delta);

/// x^p * U(y/x, 1/x), expanded exactly: the local-to-global key transform.
BiLaurent local_to_global_keyform(const BiLaurent& U, long long p);

/// Sum of the monomials of f with (p,q)-weight strictly below p*q + r.
/// f must be monic in v of degree p with gcd(p, q) = 1.
BiLaurent ftilde(const BiLaurent& f, long long q, long long p, long long r);

struct AlgebraicityVerdict {
    bool contractible = false;
    std::optional<bool> algebraic;   // present iff contractible
    BiLaurent ftilde_part;           // local effective part (zero when r = 0)
    BiLaurent last_global_form;      // global image of the last key polynomial
    std::optional<Mono> witness;     // negative-exponent monomial when non-algebraic
    Rational witness_coeff;
};

/// Full verdict for a one-pair germ: contractibility, and when contractible
/// whether the contraction is algebraic. Decided twice (degree bound on the
/// effective part, polynomiality of the last global key form); the two
/// routes are required to agree.
AlgebraicityVerdict decide_algebraic(const PuiseuxPoly& phi, long long r);
AlgebraicityVerdict decide_algebraic(const BiLaurent& weierstrass, long long r);

/// Weight vector (1, w_0, ..., w_k) of the weighted-projective model; all
/// forms must be polynomials.
std::vector<long long> wp_weights(const KeyFormSeq& seq);

/// One-place-at-infinity certificate for the single-pair case: monic in y of
/// degree p, top x-coefficient constant of degree q, (p,q)-weighted degree
/// equal to p*q, with p, q coprime.
bool verify_one_place(const BiLaurent& f, long long p, long long q);

} // namespace oneplace

#endif
