#ifndef ONEPLACE_ANALYSIS_HPP
#define ONEPLACE_ANALYSIS_HPP

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "oneplace/bilaurent.hpp"
#include "oneplace/puiseux.hpp"

namespace oneplace {

/// Curve input: exactly one of a Puiseux series (local, term quadruples
/// coeff_num, coeff_den, exp_num, exp_den) or a Weierstrass polynomial
/// (term quadruples coeff_num, coeff_den, u_exp, v_exp), plus r >= 0.
struct CurveSpec {
    std::optional<PuiseuxPoly> series;
    std::optional<BiLaurent> weierstrass;
    long long r = 0;
};

/// Reads a curve spec from TOML (subset: `key = value` lines with integer
/// and nested-array values) or JSON; the format is sniffed from the text.
CurveSpec parse_curve_spec(std::string_view text);
CurveSpec load_curve_spec(const std::string& path);

/// The analysis pipeline: pairs, alpha, contractibility, virtual poles and
/// classification, and (for one-pair germs) key sequences and the
/// algebraicity verdict. Deterministic JSON.
nlohmann::ordered_json analyze(const CurveSpec& spec);

/// Resolves the spec to a local series (running the root finder on
/// Weierstrass input).
PuiseuxPoly spec_series(const CurveSpec& spec);

} // namespace oneplace

#endif
