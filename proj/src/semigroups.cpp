#include "oneplace/semigroups.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "oneplace/errors.hpp"

namespace oneplace {

std::vector<long long> intersection_generators(const PuiseuxPairs& pairs) {
    validate_pairs(pairs);
    if (pairs.empty()) throw Error(errc::invalid_pairs, "at least one pair is required");
    const std::size_t l = pairs.size();
    std::vector<BigInt> suffix(l + 2, BigInt(1)); // B_k = p_k ... p_l
    for (std::size_t k = l; k >= 1; --k) suffix[k] = suffix[k + 1] * BigInt(pairs[k - 1].p);

    std::vector<long long> out;
    out.push_back(suffix[1].to_int64()); // m_0 = p_1 ... p_l
    for (std::size_t k = 1; k <= l; ++k) {
        // C_j = p_j ... p_{k-1} with C_k = 1
        std::vector<BigInt> inner(k + 1, BigInt(1));
        for (std::size_t j = k - 1; j >= 1; --j) inner[j] = inner[j + 1] * BigInt(pairs[j - 1].p);
        BigInt acc(0);
        for (std::size_t j = 1; j < k; ++j)
            acc += suffix[j + 1] * (inner[j] - inner[j + 1]) * BigInt(pairs[j - 1].q);
        acc += suffix[k + 1] * BigInt(pairs[k - 1].q);
        out.push_back(acc.to_int64());
    }
    return out;
}

VirtualPoles virtual_poles(const PuiseuxPairs& pairs, long long r) {
    if (r < 0) throw Error(errc::invalid_pairs, "r must be >= 0");
    VirtualPoles vp;
    vp.m = intersection_generators(pairs);
    const std::size_t l = pairs.size();
    vp.ltilde = r == 0 ? static_cast<long long>(l) - 1 : static_cast<long long>(l);
    vp.ptilde = vp.ltilde == static_cast<long long>(l) - 1 ? pairs[l - 1].p : 1;

    std::vector<BigInt> prefix(l + 1, BigInt(1)); // A_k = p_1 ... p_k
    for (std::size_t k = 1; k <= l; ++k) prefix[k] = prefix[k - 1] * BigInt(pairs[k - 1].p);

    vp.mtilde.push_back(vp.m[0]);
    for (long long k = 1; k <= vp.ltilde; ++k) {
        // p_1^2 ... p_{k-1}^2 * p_k ... p_l - m_k  ==  A_{k-1} * A_l - m_k
        BigInt head = prefix[static_cast<std::size_t>(k) - 1] * prefix[l];
        vp.mtilde.push_back((head - BigInt(vp.m[static_cast<std::size_t>(k)])).to_int64());
    }
    const BigInt p = prefix[l];
    const BigInt pl(pairs[l - 1].p);
    if (r == 0)
        vp.generic = (prefix[l - 1] * p - BigInt(vp.m[l])).to_int64();
    else
        vp.generic = (p * p - pl * BigInt(vp.m[l]) - BigInt(r)).to_int64();
    return vp;
}

namespace {

// reachability table: entry v holds the index of the first generator that
// steps down from v inside the semigroup, -1 when v is not a member
std::vector<int> reach_table(long long limit, const std::vector<long long>& gens) {
    if (gens.empty()) throw std::invalid_argument("semigroup_member: no generators");
    for (long long g : gens)
        if (g <= 0) throw std::invalid_argument("semigroup_member: generators must be positive");
    std::vector<int> step(static_cast<std::size_t>(std::max<long long>(limit, 0)) + 1, -1);
    step[0] = 0;
    for (long long v = 1; v <= limit; ++v)
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (v >= gens[i] && step[static_cast<std::size_t>(v - gens[i])] >= 0) {
                step[static_cast<std::size_t>(v)] = static_cast<int>(i);
                break;
            }
    return step;
}

std::optional<std::vector<long long>> read_witness(const std::vector<int>& step, long long n,
                                                   const std::vector<long long>& gens) {
    if (n < 0 || step[static_cast<std::size_t>(n)] < 0) return std::nullopt;
    std::vector<long long> coeffs(gens.size(), 0);
    for (long long v = n; v > 0;) {
        int i = step[static_cast<std::size_t>(v)];
        coeffs[static_cast<std::size_t>(i)]++;
        v -= gens[static_cast<std::size_t>(i)];
    }
    return coeffs;
}

} // namespace

std::optional<std::vector<long long>> semigroup_member(long long n, const std::vector<long long>& gens) {
    if (n < 0) {
        reach_table(0, gens); // still validates the generators
        return std::nullopt;
    }
    return read_witness(reach_table(n, gens), n, gens);
}

SemigroupReport check_conditions(const VirtualPoles& vp, const PuiseuxPairs& pairs) {
    if (vp.generic <= 0)
        throw Error(errc::not_contractible_family, "generic virtual pole must be positive");
    SemigroupReport report;
    for (long long k = 1; k <= vp.ltilde; ++k) {
        ConditionReport cr;
        cr.k = k;
        const long long pk = pairs[static_cast<std::size_t>(k) - 1].p;
        const long long mk = vp.mtilde[static_cast<std::size_t>(k)];
        std::vector<long long> lower(vp.mtilde.begin(), vp.mtilde.begin() + k);
        cr.s1_witness = semigroup_member(pk * mk, lower);
        cr.s1 = cr.s1_witness.has_value();

        // group membership in Z<m~_0..m~_k> is divisibility by the gcd
        std::vector<long long> upto(vp.mtilde.begin(), vp.mtilde.begin() + k + 1);
        long long g = 0;
        for (long long v : upto) g = std::gcd(g, v);
        const long long lo = k < vp.ltilde ? vp.mtilde[static_cast<std::size_t>(k) + 1] : vp.generic;
        const long long hi = pk * mk;
        cr.s2 = true;
        std::vector<int> table = reach_table(std::max<long long>(hi - 1, 0), upto);
        for (long long n = lo + 1; n < hi; ++n) {
            if (n % g != 0) continue;
            if (table[static_cast<std::size_t>(n)] < 0) {
                cr.s2 = false;
                cr.s2_counterexample = n;
                break;
            }
        }
        report.push_back(std::move(cr));
    }
    return report;
}

const char* to_string(Classification c) {
    switch (c) {
    case Classification::AlwaysAlgebraic: return "always-algebraic";
    case Classification::NeverAlgebraic: return "never-algebraic";
    case Classification::Mixed: return "mixed";
    }
    return "?";
}

ClassifyResult classify(const PuiseuxPairs& pairs, long long r) {
    ClassifyResult out;
    out.poles = virtual_poles(pairs, r);
    if (out.poles.generic <= 0)
        throw Error(errc::not_contractible_family, "generic virtual pole must be positive");
    out.report = check_conditions(out.poles, pairs);
    bool all_s1 = true, all_s2 = true;
    for (const auto& cr : out.report) {
        all_s1 = all_s1 && cr.s1;
        all_s2 = all_s2 && cr.s2;
    }
    if (!all_s1)
        out.verdict = Classification::NeverAlgebraic;
    else if (!all_s2)
        out.verdict = Classification::Mixed;
    else
        out.verdict = Classification::AlwaysAlgebraic;
    return out;
}

BiLaurent construct_delta_curve(const PuiseuxPairs& pairs, long long r) {
    VirtualPoles vp = virtual_poles(pairs, r);
    std::vector<BiLaurent> forms{BiLaurent::var_x(), BiLaurent::var_y()};
    for (long long k = 1; k <= vp.ltilde; ++k) {
        const long long pk = pairs[static_cast<std::size_t>(k) - 1].p;
        const long long mk = vp.mtilde[static_cast<std::size_t>(k)];
        std::vector<long long> lower(vp.mtilde.begin(), vp.mtilde.begin() + k);
        auto witness = semigroup_member(pk * mk, lower);
        if (!witness)
            throw Error(errc::s1_fails, "semigroup condition fails at k=" + std::to_string(k));
        BiLaurent prod = BiLaurent::constant(Rational(1));
        for (std::size_t j = 0; j < witness->size(); ++j)
            prod *= BiLaurent::pow(forms[j], static_cast<unsigned long long>((*witness)[j]));
        forms.push_back(BiLaurent::pow(forms.back(), static_cast<unsigned long long>(pk)) - prod);
    }
    return forms.back();
}

long long frobenius_two_gen(long long a, long long b) {
    if (a < 1 || b < 1 || std::gcd(a, b) != 1)
        throw Error(errc::not_coprime, "generators must be coprime positive integers");
    return a * b - a - b;
}

long long never_algebraic_family(long long q1, long long p1, long long p2) {
    if (p1 < 2 || p2 < 2 || q1 < 1 || q1 >= p1 || std::gcd(q1, p1) != 1)
        throw Error(errc::invalid_pairs, "need coprime q1 < p1 with p1, p2 >= 2");
    const long long q2 = (p1 - q1) * (p2 - 1) * (p1 - 1) + p1 * (p2 + 1);
    PuiseuxPairs pairs{{q1, p1}, {q2, p2}};
    validate_pairs(pairs); // in particular gcd(q2, p2) = 1
    // the never-algebraic conclusion needs a contractible family to talk
    // about; that holds iff (p1 - q1)(p1 - 1) > p1, and then the second
    // semigroup generator check must fail
    VirtualPoles vp = virtual_poles(pairs, 1);
    if (vp.generic > 0 && classify(pairs, 1).verdict != Classification::NeverAlgebraic)
        throw std::logic_error("never_algebraic_family: classification check failed");
    return q2;
}

} // namespace oneplace
