#include "oneplace/resolution.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace oneplace {

long long alpha(const PuiseuxPairs& pairs, long long r) {
    validate_pairs(pairs);
    if (pairs.empty()) throw Error(errc::invalid_pairs, "at least one pair is required");
    if (r < 0) throw Error(errc::invalid_pairs, "r must be >= 0");
    const std::size_t l = pairs.size();
    // suffix products B_k = p_k ... p_l, B_{l+1} = 1
    std::vector<BigInt> suffix(l + 2, BigInt(1));
    for (std::size_t k = l; k >= 1; --k) suffix[k] = suffix[k + 1] * BigInt(pairs[k - 1].p);
    BigInt acc(0);
    for (std::size_t k = 1; k <= l; ++k)
        acc += suffix[k + 1] * (suffix[k] - suffix[k + 1]) * BigInt(pairs[k - 1].q);
    acc += BigInt(pairs[l - 1].q) + BigInt(r);
    return acc.to_int64();
}

bool is_contractible(const PuiseuxPairs& pairs, long long r) {
    validate_pairs(pairs);
    if (pairs.empty()) throw Error(errc::invalid_pairs, "at least one pair is required");
    if (pairs[0].q >= pairs[0].p) return false; // germ not tangent to the line
    BigInt p(1);
    for (const auto& pr : pairs) p = p * BigInt(pr.p);
    return BigInt(alpha(pairs, r)) < p * p;
}

namespace {

// ---- exact parametrization components: value = t^e * n(t) / d(t) ---------

using QPoly = std::vector<Rational>; // dense, constant term first, no trailing zeros

QPoly qp_trim(QPoly p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

QPoly qp_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return qp_trim(std::move(out));
}

struct Component {
    bool zero = true;
    long long e = 0; // order at t = 0
    QPoly n, d;      // n(0) != 0, d(0) != 0

    static Component from_laurent(const std::map<long long, Rational>& terms) {
        Component c;
        if (terms.empty()) return c;
        c.zero = false;
        c.e = terms.begin()->first;
        long long top = terms.rbegin()->first;
        c.n.assign(static_cast<std::size_t>(top - c.e) + 1, Rational(0));
        for (const auto& [k, v] : terms) c.n[static_cast<std::size_t>(k - c.e)] = v;
        c.d = {Rational(1)};
        return c;
    }

    Rational unit_at_zero() const { return n.front() / d.front(); }
};

Component divide(const Component& a, const Component& b) {
    Component out;
    if (a.zero) return out;
    out.zero = false;
    out.e = a.e - b.e;
    out.n = qp_mul(a.n, b.d);
    out.d = qp_mul(a.d, b.n);
    return out;
}

Component subtract_constant(const Component& a, const Rational& c) {
    // pre: a.e == 0
    Component out;
    QPoly num = a.n;
    for (std::size_t i = 0; i < a.d.size(); ++i) {
        if (i >= num.size()) num.resize(i + 1, Rational(0));
        num[i] -= c * a.d[i];
    }
    num = qp_trim(std::move(num));
    if (num.empty()) return out; // exactly the constant: component vanishes
    std::size_t k = 0;
    while (num[k].is_zero()) ++k;
    out.zero = false;
    out.e = static_cast<long long>(k);
    out.n.assign(num.begin() + static_cast<std::ptrdiff_t>(k), num.end());
    out.d = a.d;
    return out;
}

enum class Axis { X, Y };

} // namespace

Cluster resolve(const PuiseuxPoly& phi, long long r) {
    if (phi.mode() != SeriesMode::Local) throw std::invalid_argument("resolve: local series expected");
    if (phi.is_zero()) throw Error(errc::zero_series, "resolve: zero germ");
    if (!(phi.leading_exponent() < Rational(1)))
        throw Error(errc::not_tangent, "germ is not tangent to the line");
    if (r < 0) throw std::invalid_argument("resolve: r must be >= 0");

    const long long p = polydromy_order(phi);
    std::map<long long, Rational> upar{{p, Rational(1)}}, vpar;
    for (const auto& t : phi.terms()) vpar[(t.exp * Rational(p)).to_int64()] = t.coeff;
    Component U = Component::from_laurent(upar);
    Component V = Component::from_laurent(vpar);

    // boundary curves through the tracked point, with their chart axis
    std::map<CurveId, Axis> boundary{{0, Axis::X}}; // the line is u = 0
    Cluster out;
    bool resolving = true;
    long long extra = 0;

    for (long long guard = 0;; ++guard) {
        if (resolving && guard > 100000)
            throw std::logic_error("resolve: blow-up sequence did not terminate");
        const long long ou = U.zero ? -1 : U.e; // U never vanishes identically
        const long long ov = V.zero ? -1 : V.e;

        if (resolving) {
            // done once the branch is smooth, meets a single boundary curve,
            // and crosses it transversally
            if (boundary.size() == 1) {
                Axis ax = boundary.begin()->second;
                long long along = ax == Axis::X ? ou : ov;
                if (along == 1) {
                    resolving = false;
                    out.resolution_steps = static_cast<int>(out.centers.size());
                }
            }
        }
        if (!resolving && extra == r) break;
        if (!resolving) ++extra;

        BlowupCenter center;
        long long mult;
        if (U.zero)
            mult = ov;
        else if (V.zero)
            mult = ou;
        else
            mult = std::min(ou, ov);
        center.multiplicity = mult;
        for (const auto& [id, ax] : boundary) {
            center.boundary.push_back(id);
            if (id != 0) center.proximate_to.push_back(id);
        }
        out.centers.push_back(center);

        const CurveId born = static_cast<CurveId>(out.centers.size());
        std::map<CurveId, Axis> next;
        auto keep = [&](Axis which, Axis as) {
            for (const auto& [id, ax] : boundary)
                if (ax == which) next.emplace(id, as);
        };
        if (!V.zero && (U.zero || ov < ou)) {
            // branch follows the y-direction: chart v = v'', u = u''v''
            U = divide(U, V);
            next.clear();
            keep(Axis::X, Axis::X); // old u = 0 curve survives as u'' = 0
            next.emplace(born, Axis::Y);
        } else if (V.zero || ou < ov) {
            // chart u = u', v = u'v'
            V = V.zero ? V : divide(V, U);
            next.clear();
            keep(Axis::Y, Axis::Y);
            next.emplace(born, Axis::X);
        } else {
            // equal orders: the branch meets the new curve away from both axes
            Component ratio = divide(V, U);
            V = subtract_constant(ratio, ratio.unit_at_zero());
            next.clear();
            next.emplace(born, Axis::X);
        }
        boundary = std::move(next);
    }
    return out;
}

DualGraph dual_graph(const Cluster& c) {
    const int n = static_cast<int>(c.centers.size());
    DualGraph g;
    g.vertices.push_back({"L", 0});
    for (int i = 1; i < n; ++i) g.vertices.push_back({"E" + std::to_string(i), 0});
    g.excluded = "E" + std::to_string(n);

    std::vector<long long> on_count(static_cast<std::size_t>(n) + 1, 0);
    std::set<std::pair<int, int>> edges; // by curve id, line = 0
    for (int j = 0; j < n; ++j) {
        const auto& b = c.centers[static_cast<std::size_t>(j)].boundary;
        for (CurveId id : b) on_count[static_cast<std::size_t>(id)]++;
        if (b.size() == 2) edges.erase({std::min(b[0], b[1]), std::max(b[0], b[1])});
        for (CurveId id : b) edges.insert({std::min<int>(id, j + 1), std::max<int>(id, j + 1)});
    }

    g.vertices[0].weight = 1 - on_count[0];
    for (int i = 1; i < n; ++i)
        g.vertices[static_cast<std::size_t>(i)].weight = -1 - on_count[static_cast<std::size_t>(i)];
    for (const auto& [a, b] : edges)
        if (a < n && b < n) g.edges.emplace_back(a, b); // drop the excluded last curve
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

std::vector<std::vector<long long>> intersection_matrix(const DualGraph& g) {
    const std::size_t n = g.vertices.size();
    std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = g.vertices[i].weight;
    for (const auto& [a, b] : g.edges) {
        m[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
        m[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = 1;
    }
    return m;
}

bool is_negative_definite(const std::vector<std::vector<long long>>& m) {
    const std::size_t n = m.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw Error(errc::not_symmetric, "matrix is not square");
        for (std::size_t j = 0; j < i; ++j)
            if (m[i][j] != m[j][i]) throw Error(errc::not_symmetric, "matrix is not symmetric");
    }
    // fraction-free elimination without pivoting: after step k the (k,k)
    // entry is the leading principal minor of size k+1
    std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = BigInt(m[i][j]);
    BigInt prev(1);
    int expected_sign = -1;
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k][k].sign() != expected_sign) return false; // includes zero minors
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
        expected_sign = -expected_sign;
    }
    return true;
}

std::string emit_dot(const DualGraph& g) {
    std::string out = "graph dual {\n";
    for (const auto& v : g.vertices)
        out += "  \"" + v.name + "\" [label=\"" + v.name + " (" + std::to_string(v.weight) + ")\"];\n";
    for (const auto& [a, b] : g.edges)
        out += "  \"" + g.vertices[static_cast<std::size_t>(a)].name + "\" -- \"" +
               g.vertices[static_cast<std::size_t>(b)].name + "\";\n";
    out += "}\n";
    return out;
}

std::string graph_to_json(const DualGraph& g) {
    std::string out = "{\"vertices\":[";
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        if (i) out += ",";
        out += "{\"name\":\"" + g.vertices[i].name + "\",\"weight\":" + std::to_string(g.vertices[i].weight) + "}";
    }
    out += "],\"edges\":[";
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        if (i) out += ",";
        out += "[\"" + g.vertices[static_cast<std::size_t>(g.edges[i].first)].name + "\",\"" +
               g.vertices[static_cast<std::size_t>(g.edges[i].second)].name + "\"]";
    }
    out += "]}";
    return out;
}

} // namespace oneplace
