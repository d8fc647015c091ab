// Command-line surface: analyze curve specs, draw dual graphs, classify
// singularity types, construct delta-sequence curves, evaluate valuations.

#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "oneplace/analysis.hpp"
#include "oneplace/degreefun.hpp"
#include "oneplace/errors.hpp"
#include "oneplace/newton.hpp"
#include "oneplace/puiseux.hpp"
#include "oneplace/resolution.hpp"
#include "oneplace/semigroups.hpp"
#include "oneplace/textio.hpp"

namespace {

using oneplace::Error;
using json = nlohmann::ordered_json;

oneplace::PuiseuxPairs parse_pairs_flag(const std::string& text) {
    oneplace::PuiseuxPairs pairs;
    std::size_t i = 0;
    while (i < text.size()) {
        std::size_t comma = text.find(',', i);
        std::string item = text.substr(i, comma == std::string::npos ? comma : comma - i);
        std::size_t slash = item.find('/');
        if (slash == std::string::npos)
            throw Error(oneplace::errc::input_parse, "pair must look like q/p: " + item);
        try {
            pairs.push_back({std::stoll(item.substr(0, slash)), std::stoll(item.substr(slash + 1))});
        } catch (const std::exception&) {
            throw Error(oneplace::errc::input_parse, "bad pair: " + item);
        }
        if (comma == std::string::npos) break;
        i = comma + 1;
    }
    oneplace::validate_pairs(pairs);
    return pairs;
}

int run(int argc, char** argv) {
    CLI::App app{"analytic vs algebraic contractibility of exceptional curve configurations"};
    app.require_subcommand(1);

    std::string input_path, format = "dot", mode = "local", poly_text, pairs_text;
    long long r = 0;
    bool verbose = false;

    CLI::App* analyze = app.add_subcommand("analyze", "full analysis report as JSON");
    analyze->add_option("input", input_path, "curve spec file (TOML or JSON)")->required();

    CLI::App* dualgraph = app.add_subcommand("dualgraph", "dual graph of the configuration");
    dualgraph->add_option("input", input_path, "curve spec file (TOML or JSON)")->required();
    dualgraph->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));

    CLI::App* classify = app.add_subcommand("classify", "semigroup classification of a singularity type");
    classify->add_option("--pairs", pairs_text, "q1/p1[,q2/p2...]")->required();
    classify->add_option("--r", r, "number of extra blow-ups")->required();
    classify->add_flag("--verbose", verbose, "also print the JSON detail");

    CLI::App* construct = app.add_subcommand("construct", "curve built from the semigroup witnesses");
    construct->add_option("--pairs", pairs_text, "q1/p1[,q2/p2...]")->required();
    construct->add_option("--r", r, "number of extra blow-ups")->required();

    CLI::App* eval = app.add_subcommand("eval", "evaluate the valuation/semidegree on a polynomial");
    eval->add_option("input", input_path, "curve spec file (TOML or JSON)")->required();
    eval->add_option("--mode", mode, "local or global")->check(CLI::IsMember({"local", "global"}));
    eval->add_option("--poly", poly_text, "polynomial, e.g. \"v^5-u^3\" or \"y^5-x^2\"")->required();

    CLI11_PARSE(app, argc, argv);

    if (analyze->parsed()) {
        json report = oneplace::analyze(oneplace::load_curve_spec(input_path));
        std::cout << report.dump(2) << "\n";
        return 0;
    }
    if (dualgraph->parsed()) {
        oneplace::CurveSpec spec = oneplace::load_curve_spec(input_path);
        oneplace::Cluster cluster = oneplace::resolve(oneplace::spec_series(spec), spec.r);
        oneplace::DualGraph g = oneplace::dual_graph(cluster);
        std::cout << (format == "dot" ? oneplace::emit_dot(g) : oneplace::graph_to_json(g) + "\n");
        return 0;
    }
    if (classify->parsed()) {
        oneplace::ClassifyResult res = oneplace::classify(parse_pairs_flag(pairs_text), r);
        std::cout << oneplace::to_string(res.verdict) << "\n";
        if (verbose) {
            json detail = json::object();
            detail["mtilde"] = res.poles.mtilde;
            detail["generic"] = res.poles.generic;
            json rep = json::array();
            for (const auto& cr : res.report) {
                json c = {{"k", cr.k}, {"s1", cr.s1}, {"s2", cr.s2}};
                if (cr.s1_witness) c["s1_witness"] = *cr.s1_witness;
                if (cr.s2_counterexample) c["s2_counterexample"] = *cr.s2_counterexample;
                rep.push_back(c);
            }
            detail["conditions"] = rep;
            std::cout << detail.dump(2) << "\n";
        }
        return 0;
    }
    if (construct->parsed()) {
        oneplace::BiLaurent f = oneplace::construct_delta_curve(parse_pairs_flag(pairs_text), r);
        std::cout << oneplace::to_string(f, oneplace::VarNames::global()) << "\n";
        return 0;
    }
    if (eval->parsed()) {
        oneplace::CurveSpec spec = oneplace::load_curve_spec(input_path);
        oneplace::PuiseuxPoly phi = oneplace::spec_series(spec);
        oneplace::GenericSeries series = oneplace::generic_series_from_germ(phi, spec.r);
        if (mode == "local") {
            oneplace::BiLaurent f =
                oneplace::parse_bilaurent(poly_text, oneplace::VarNames::local());
            std::cout << oneplace::valuation_eval(oneplace::Valuation{series}, f) << "\n";
        } else {
            oneplace::BiLaurent f =
                oneplace::parse_bilaurent(poly_text, oneplace::VarNames::global());
            std::cout << oneplace::semidegree_eval(oneplace::Semidegree{oneplace::to_global(series)}, f)
                      << "\n";
        }
        return 0;
    }
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const Error& e) {
        json err = {{"error", {{"code", e.code()}, {"message", e.what()}}}};
        std::cerr << err.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        json err = {{"error", {{"code", "Internal"}, {"message", e.what()}}}};
        std::cerr << err.dump() << "\n";
        return 1;
    }
}
