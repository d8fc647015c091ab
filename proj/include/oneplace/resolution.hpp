#ifndef ONEPLACE_RESOLUTION_HPP
#define ONEPLACE_RESOLUTION_HPP

#include <string>
#include <vector>

#include "oneplace/bigint.hpp"
#include "oneplace/puiseux.hpp"

namespace oneplace {

/// Intersection multiplicity at the origin of the germ with a generic member
/// of its blow-up family, by the closed product formula over the pairs.
long long alpha(const PuiseuxPairs& pairs, long long r);

/// Contractibility of the configuration attached to (pairs, r): the germ is
/// tangent to the line (first characteristic exponent below 1) and alpha
/// stays below the square of the polydromy order.
bool is_contractible(const PuiseuxPairs& pairs, long long r);

/// Boundary curve labels: 0 is the line, i >= 1 the i-th exceptional curve.
using CurveId = int;

struct BlowupCenter {
    long long multiplicity = 0;        // of the strict transform of the germ
    std::vector<CurveId> boundary;     // boundary curves through the center
    std::vector<int> proximate_to;     // indices of earlier exceptional curves it sits on
};

/// Full record of the blow-up sequence: the minimal resolution of germ-plus-
/// line followed by r extra centers on the running branch point.
struct Cluster {
    std::vector<BlowupCenter> centers;
    int resolution_steps = 0; // centers in the resolution phase
};

/// Simulates the blow-ups on the exact parametrization t -> (t^p, phi(t^p)).
Cluster resolve(const PuiseuxPoly& phi, long long r);

struct DualGraph {
    struct Vertex {
        std::string name;
        long long weight = 0; // self-intersection
    };
    std::vector<Vertex> vertices;                    // line first, then E1, E2, ...
    std::vector<std::pair<int, int>> edges;          // indices into vertices, sorted
    std::string excluded;                            // name of the omitted last curve
};

/// Weighted dual graph of the configuration: the strict transform of the
/// line and every exceptional curve except the last.
DualGraph dual_graph(const Cluster& c);

/// Symmetric intersection matrix over the graph's vertex order.
std::vector<std::vector<long long>> intersection_matrix(const DualGraph& g);

/// Exact negative-definiteness via signs of leading principal minors.
bool is_negative_definite(const std::vector<std::vector<long long>>& m);

/// Deterministic DOT rendering.
std::string emit_dot(const DualGraph& g);

/// Stable JSON rendering: {"vertices":[{"name":..,"weight":..},..],
/// "edges":[["L","E2"],..]}.
std::string graph_to_json(const DualGraph& g);

} // namespace oneplace

#endif
