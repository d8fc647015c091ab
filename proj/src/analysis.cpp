#include "oneplace/analysis.hpp"

#include <array>
#include <cctype>
#include <fstream>
#include <sstream>

#include "oneplace/degreefun.hpp"
#include "oneplace/keyforms.hpp"
#include "oneplace/newton.hpp"
#include "oneplace/resolution.hpp"
#include "oneplace/semigroups.hpp"
#include "oneplace/textio.hpp"

namespace oneplace {

namespace {

using json = nlohmann::ordered_json;

// ---- TOML subset ----------------------------------------------------------
// key = value lines; values are integers or (nested) arrays of integers;
// '#' starts a comment. Exactly what a curve spec needs.

struct TomlCursor {
    std::string_view s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    }
    // whitespace, newlines and comments; used where values may span lines
    void skip_filler() {
        for (;;) {
            skip_ws();
            if (i < s.size() && s[i] == '#') {
                while (i < s.size() && s[i] != '\n') ++i;
                continue;
            }
            if (i < s.size() && (s[i] == '\n' || s[i] == '\r')) {
                ++i;
                continue;
            }
            return;
        }
    }
    [[noreturn]] void fail(const std::string& what) {
        throw Error(errc::input_parse, "TOML: " + what);
    }
    json value() {
        skip_ws();
        if (i < s.size() && s[i] == '[') {
            ++i;
            json arr = json::array();
            for (;;) {
                skip_filler();
                if (i < s.size() && s[i] == ']') {
                    ++i;
                    return arr;
                }
                arr.push_back(value());
                skip_filler();
                if (i < s.size() && s[i] == ',') {
                    ++i;
                    continue;
                }
                if (i < s.size() && s[i] == ']') {
                    ++i;
                    return arr;
                }
                fail("expected ',' or ']' in array");
            }
        }
        std::size_t start = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) fail("expected an integer or array");
        long long v = 0;
        try {
            v = std::stoll(std::string(s.substr(start, i - start)));
        } catch (const std::exception&) {
            fail("integer out of range");
        }
        return json(v);
    }
};

json parse_toml_subset(std::string_view text) {
    json out = json::object();
    TomlCursor c{text};
    while (c.i < text.size()) {
        c.skip_ws();
        if (c.i >= text.size()) break;
        char ch = text[c.i];
        if (ch == '\n' || ch == '\r') {
            ++c.i;
            continue;
        }
        if (ch == '#') {
            while (c.i < text.size() && text[c.i] != '\n') ++c.i;
            continue;
        }
        std::size_t start = c.i;
        while (c.i < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[c.i])) || text[c.i] == '_'))
            ++c.i;
        if (c.i == start) c.fail("expected a key");
        std::string key(text.substr(start, c.i - start));
        c.skip_ws();
        if (c.i >= text.size() || text[c.i] != '=') c.fail("expected '=' after key '" + key + "'");
        ++c.i;
        out[key] = c.value();
        c.skip_ws();
        if (c.i < text.size() && text[c.i] == '#')
            while (c.i < text.size() && text[c.i] != '\n') ++c.i;
        if (c.i < text.size() && text[c.i] != '\n' && text[c.i] != '\r') c.fail("trailing input after value");
    }
    return out;
}

CurveSpec spec_from_json(const json& j) {
    CurveSpec spec;
    if (!j.is_object()) throw Error(errc::input_parse, "curve spec must be a table/object");
    if (!j.contains("r") || !j["r"].is_number_integer())
        throw Error(errc::input_parse, "curve spec needs an integer field 'r'");
    spec.r = j["r"].get<long long>();
    if (spec.r < 0) throw Error(errc::input_parse, "'r' must be >= 0");
    const bool has_series = j.contains("series");
    const bool has_weier = j.contains("weierstrass");
    if (has_series == has_weier)
        throw Error(errc::input_parse, "curve spec needs exactly one of 'series' or 'weierstrass'");

    auto quadruples = [](const json& arr, const char* what) {
        if (!arr.is_array() || arr.empty())
            throw Error(errc::input_parse, std::string(what) + " must be a nonempty array");
        std::vector<std::array<long long, 4>> out;
        for (const auto& row : arr) {
            if (!row.is_array() || row.size() != 4)
                throw Error(errc::input_parse,
                            std::string(what) + " entries must be 4-integer rows");
            std::array<long long, 4> q{};
            for (std::size_t k = 0; k < 4; ++k) {
                if (!row[k].is_number_integer())
                    throw Error(errc::input_parse, std::string(what) + " entries must be integers");
                q[k] = row[k].get<long long>();
            }
            out.push_back(q);
        }
        return out;
    };

    try {
        if (has_series) {
            std::vector<PuiseuxTerm> terms;
            for (const auto& [cn, cd, en, ed] : quadruples(j["series"], "series")) {
                Rational exponent(en, ed); // may throw before the aggregate forms
                Rational coeff(cn, cd);
                terms.push_back(PuiseuxTerm{std::move(exponent), std::move(coeff)});
            }
            spec.series = PuiseuxPoly(SeriesMode::Local, std::move(terms));
        } else {
            BiLaurent f;
            for (const auto& [cn, cd, ue, ve] : quadruples(j["weierstrass"], "weierstrass"))
                f.add_term(Mono{ue, ve}, Rational(cn, cd));
            spec.weierstrass = f;
        }
    } catch (const std::invalid_argument& e) {
        throw Error(errc::input_parse, e.what());
    } catch (const std::domain_error& e) {
        throw Error(errc::input_parse, e.what());
    }
    return spec;
}

json pairs_to_json(const PuiseuxPairs& pairs) {
    json out = json::array();
    for (const auto& pr : pairs) out.push_back(json::array({pr.q, pr.p}));
    return out;
}

} // namespace

CurveSpec parse_curve_spec(std::string_view text) {
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i < text.size() && text[i] == '{') {
        json j = json::parse(text, nullptr, false);
        if (j.is_discarded()) throw Error(errc::input_parse, "malformed JSON curve spec");
        return spec_from_json(j);
    }
    return spec_from_json(parse_toml_subset(text));
}

CurveSpec load_curve_spec(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(errc::input_parse, "cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_curve_spec(ss.str());
}

PuiseuxPoly spec_series(const CurveSpec& spec) {
    if (spec.series) return *spec.series;
    return branch_series(*spec.weierstrass, spec.r);
}

nlohmann::ordered_json analyze(const CurveSpec& spec) {
    const PuiseuxPoly phi = spec_series(spec);
    const long long r = spec.r;
    const PuiseuxPairs pairs = puiseux_pairs(phi);
    if (pairs.empty())
        throw Error(errc::no_characteristic_exponent,
                    "series has integer exponents only; no exceptional configuration arises");
    const long long p = polydromy_order(phi);
    const std::size_t l = pairs.size();

    json report = json::object();
    report["input"] = json::object();
    report["input"]["series"] = phi.to_string("u");
    report["input"]["r"] = r;
    report["puiseux_pairs"] = pairs_to_json(pairs);
    report["polydromy"] = p;
    report["alpha"] = alpha(pairs, r);
    const bool contractible = is_contractible(pairs, r);
    report["contractible"] = contractible;

    VirtualPoles vp = virtual_poles(pairs, r);
    report["virtual_poles"] = {{"m", vp.m},
                               {"mtilde", vp.mtilde},
                               {"generic", vp.generic},
                               {"ltilde", vp.ltilde},
                               {"ptilde", vp.ptilde}};

    std::vector<std::string> notes;
    notes.push_back("contractibility requires tangency: series order < 1");

    if (vp.generic > 0) {
        ClassifyResult cls = classify(pairs, r);
        json rep = json::array();
        for (const auto& cr : cls.report) {
            json c = json::object();
            c["k"] = cr.k;
            c["s1"] = cr.s1;
            if (cr.s1_witness) c["s1_witness"] = *cr.s1_witness;
            c["s2"] = cr.s2;
            if (cr.s2_counterexample) c["s2_counterexample"] = *cr.s2_counterexample;
            rep.push_back(c);
        }
        report["semigroup_report"] = rep;
        report["classification"] = to_string(cls.verdict);
    } else {
        notes.push_back("generic virtual pole <= 0: no contractible configuration, classification omitted");
    }

    const bool tangent = phi.leading_exponent() < Rational(1);
    if (!tangent) notes.push_back("germ is not tangent to the line: key chains omitted");

    if (l == 1 && tangent) {
        KeyFormSeq local = local_key_polynomials(phi, r);
        GenericSeries series = generic_series_from_germ(phi, r);
        GenericSeries global_series = to_global(series);
        Semidegree delta{global_series};

        json kf = json::object();
        kf["local_series"] = series.to_string("u");
        kf["global_series"] = global_series.to_string("x");
        json lforms = json::array(), lvalues = json::array();
        for (std::size_t j = 0; j < local.forms.size(); ++j) {
            lforms.push_back(to_string(local.forms[j], VarNames::local()));
            lvalues.push_back(local.values[j]);
        }
        kf["local"] = lforms;
        kf["local_values"] = lvalues;

        std::vector<BiLaurent> gforms{BiLaurent::var_x(), BiLaurent::var_y()};
        for (std::size_t j = 2; j < local.forms.size(); ++j)
            gforms.push_back(local_to_global_keyform(local.forms[j], p));
        json gf = json::array(), gv = json::array();
        std::vector<long long> gvals;
        for (const auto& f : gforms) {
            gf.push_back(to_string(f, VarNames::global()));
            gvals.push_back(semidegree_eval(delta, f));
            gv.push_back(gvals.back());
        }
        kf["global"] = gf;
        kf["global_values"] = gv;
        report["key_forms"] = kf;

        bool global_has_negative = false;
        for (const auto& t : global_series.fixed().terms())
            if (t.exp.sign() < 0) global_has_negative = true;
        if (global_has_negative)
            notes.push_back("global series term with negative exponent: local c*u^e maps to c*x^(1-e)");

        if (contractible) {
            AlgebraicityVerdict verdict = spec.weierstrass ? decide_algebraic(*spec.weierstrass, r)
                                                           : decide_algebraic(phi, r);
            json v = json::object();
            v["contractible"] = verdict.contractible;
            v["algebraic"] = *verdict.algebraic;
            v["ftilde"] = to_string(verdict.ftilde_part, VarNames::local());
            v["last_global_form"] = to_string(verdict.last_global_form, VarNames::global());
            if (verdict.witness) {
                BiLaurent w = BiLaurent::monomial(verdict.witness_coeff, verdict.witness->xe,
                                                  verdict.witness->ye);
                v["witness"] = to_string(w, VarNames::global());
            }
            report["verdict"] = v;
            if (*verdict.algebraic) {
                KeyFormSeq gseq;
                gseq.mode = KeyMode::GlobalDegree;
                gseq.forms = gforms;
                gseq.values = gvals;
                report["wp_weights"] = wp_weights(gseq);
            }
        }
    }
    report["notes"] = notes;
    return report;
}

} // namespace oneplace
