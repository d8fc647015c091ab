#ifndef ONEPLACE_SEMIGROUPS_HPP
#define ONEPLACE_SEMIGROUPS_HPP

#include <optional>
#include <vector>

#include "oneplace/bilaurent.hpp"
#include "oneplace/puiseux.hpp"

namespace oneplace {

/// Virtual poles of a singularity type: the pole candidates m~_0..m~_ltilde,
/// the generic pole, and the normalization factor ptilde.
struct VirtualPoles {
    std::vector<long long> m;      // intersection generators m_0..m_l
    std::vector<long long> mtilde; // m~_0..m~_ltilde
    long long generic = 0;         // m~_{ltilde+1}
    long long ltilde = 0;
    long long ptilde = 1;
};

/// Generators m_0..m_l of the semigroup of intersection numbers with the
/// germ, by the closed product formulas.
std::vector<long long> intersection_generators(const PuiseuxPairs& pairs);

VirtualPoles virtual_poles(const PuiseuxPairs& pairs, long long r);

/// Non-negative integer combination of gens summing to n, if any
/// (lexicographically first witness; deterministic).
std::optional<std::vector<long long>> semigroup_member(long long n,
                                                       const std::vector<long long>& gens);

struct ConditionReport {
    long long k = 1;
    bool s1 = false;
    std::optional<std::vector<long long>> s1_witness; // coefficients over m~_0..m~_{k-1}
    bool s2 = false;
    std::optional<long long> s2_counterexample; // group member missing from the semigroup
};
using SemigroupReport = std::vector<ConditionReport>;

/// Evaluates both semigroup conditions for every k in [1, ltilde].
/// Requires a positive generic pole.
SemigroupReport check_conditions(const VirtualPoles& vp, const PuiseuxPairs& pairs);

enum class Classification { AlwaysAlgebraic, NeverAlgebraic, Mixed };
const char* to_string(Classification c);

struct ClassifyResult {
    Classification verdict = Classification::AlwaysAlgebraic;
    VirtualPoles poles;
    SemigroupReport report;
};

/// Three-way classification of the dual graphs attached to (pairs, r):
/// every contraction algebraic, none algebraic, or both kinds occurring.
ClassifyResult classify(const PuiseuxPairs& pairs, long long r);

/// Plane curve built from the S1 witnesses by the key-form recursion
/// f_{k+1} = f_k^{p_k} - prod f_j^{beta_{k,j}}; fails with S1Fails when some
/// witness does not exist.
BiLaurent construct_delta_curve(const PuiseuxPairs& pairs, long long r);

/// Largest integer outside the numerical semigroup generated by two coprime
/// positive integers: a*b - a - b.
long long frobenius_two_gen(long long a, long long b);

/// The q2 making [(q1,p1),(q2,p2)] with r = 1 a never-algebraic family.
long long never_algebraic_family(long long q1, long long p1, long long p2);

} // namespace oneplace

#endif
