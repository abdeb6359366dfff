#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ddbar/io.hpp"
#include "ddbar/random_complex.hpp"
#include "ddbar/report.hpp"
#include "ddbar/search.hpp"

namespace {

using namespace ddbar;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitParse = 2;

struct AnalyzeArgs {
    std::string input;
    std::string builtin_name;
    std::string checks = "all";
    std::string out;
    bool json = false;
};

int run_analyze(const AnalyzeArgs& args) {
    CheckSet checks = CheckSet::parse(args.checks);

    Bicomplex x;
    MetricData metric;
    std::optional<ExteriorModel> model;
    std::string name;

    if (!args.builtin_name.empty()) {
        StructureEquations eq;
        try {
            eq = builtin(args.builtin_name);
        } catch (const ModelError& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitParse;
        }
        name = args.builtin_name;
        model = compile(eq);
        x = model->complex;
    } else {
        io::json doc = io::load_json_file(args.input);
        name = args.input;
        if (io::is_model_document(doc)) {
            io::ModelFile mf = io::model_from_json(doc);
            auto violations = validate_model(mf.equations);
            if (!violations.empty()) {
                for (const auto& v : violations) std::cerr << "model violation: " << v << "\n";
                return kExitValidation;
            }
            model = compile(mf.equations);
            x = model->complex;
            metric = mf.metric;
        } else {
            x = io::bicomplex_from_json(doc);
        }
    }

    auto violations = validate(x);
    if (!violations.empty()) {
        for (const auto& v : violations)
            std::cerr << "violation at (" << v.p << "," << v.q << "): " << v.what << "\n";
        return kExitValidation;
    }
    auto metric_violations = metric.validate(x);
    if (!metric_violations.empty()) {
        for (const auto& v : metric_violations)
            std::cerr << "metric violation at (" << v.p << "," << v.q << "): " << v.what << "\n";
        return kExitValidation;
    }

    ReportOptions opts;
    opts.lemma = checks.lemma;
    opts.spectral = checks.spectral;
    CohomologyReport rep = compute_report(x, opts);

    std::optional<HodgeReport> hodge;
    if (checks.hodge) hodge = compute_hodge_report(x, metric, model ? &*model : nullptr);

    io::json out = io::report_to_json(rep);
    out["input"] = name;
    if (hodge) {
        io::json h = io::json::object();
        h["kernel_dims_match"] = hodge->matches_h;
        h["harmonic_characterization_ok"] = hodge->harmonic_ok;
        h["star_kernel_swap"] =
            hodge->star_kernel_swap ? io::json(*hodge->star_kernel_swap) : io::json(nullptr);
        h["star_dualities"] =
            hodge->star_dualities ? io::json(*hodge->star_dualities) : io::json(nullptr);
        out["hodge"] = std::move(h);
    }
    if (!args.out.empty()) io::save_json_file(args.out, out);

    if (args.json)
        std::cout << out.dump(1) << "\n";
    else
        std::cout << "validation: ok\n"
                  << render_table(rep, checks, name, hodge ? &*hodge : nullptr);
    return kExitOk;
}

int run_random(std::uint64_t seed, int cases, int max_extent, int max_pieces, bool conjugation) {
    if (max_extent < 0 || max_pieces < 0) throw Error("size bounds must be nonnegative");
    Rng master(seed);
    for (int i = 0; i < cases; ++i) {
        std::uint64_t case_seed = master.next();
        Rng rng(case_seed);
        RandomComplexOptions opts;
        opts.max_extent = max_extent;
        opts.max_pieces = max_pieces;
        opts.mirror = conjugation;
        Bicomplex x = random_bicomplex(rng, opts);
        if (auto failure = run_invariant_suite(x)) {
            std::cout << "counterexample at case " << i << " (case seed " << case_seed
                      << ", master seed " << seed << "): invariant '" << failure->invariant
                      << "' failed: " << failure->detail << "\n";
            return kExitValidation;
        }
    }
    std::cout << "random: " << cases << " cases passed the invariant suite (seed " << seed
              << ", extent <= " << max_extent << ", pieces <= " << max_pieces
              << ", conjugation " << (conjugation ? "on" : "off") << ")\n";
    return kExitOk;
}

int run_search(const SearchConstraints& constraints, int budget, std::uint64_t seed,
               const std::string& out_path) {
    SearchResult result = search_assemblies(constraints, budget, seed);
    if (!result.found) {
        std::cout << "none within budget (" << result.tried << " assemblies tried)\n";
        return kExitOk;
    }
    std::cout << "found after " << result.tried << " candidate(s):";
    for (const auto& pl : result.pieces)
        std::cout << " " << shape_word(pl.kind) << "(" << pl.p << "," << pl.q << ")";
    std::cout << "\n";
    if (!out_path.empty()) {
        io::save_json_file(out_path, io::bicomplex_to_json(result.complex));
        // Round-trip re-check on the emitted artifact.
        Bicomplex reread = io::bicomplex_from_json(io::load_json_file(out_path));
        bool ok = satisfies_constraints(reread, constraints);
        std::cout << "emitted " << out_path << "; re-analysis "
                  << (ok ? "confirms" : "DOES NOT confirm") << " the constraints\n";
        if (!ok) return kExitValidation;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Bott-Chern / Aeppli / Dolbeault / de Rham cohomology of bounded double "
                 "complexes over Q(i)"};
    app.require_subcommand(1);

    AnalyzeArgs analyze_args;
    CLI::App* analyze = app.add_subcommand(
        "analyze", "compute the full cohomology report of a model or bicomplex file");
    analyze->add_option("input", analyze_args.input, "model (.model) or bicomplex JSON file");
    analyze->add_option("--builtin", analyze_args.builtin_name,
                        "builtin model name (see 'builtin --list')");
    analyze->add_option("--checks", analyze_args.checks,
                        "all | comma list of lemma,inequalities,hodge,spectral,sequences");
    analyze->add_flag("--json", analyze_args.json, "structured output");
    analyze->add_option("--out", analyze_args.out, "write the JSON report to a file");

    std::uint64_t seed = 1;
    int cases = 100, max_extent = 2, max_pieces = 4, budget = 1000;
    bool conjugation = true;
    CLI::App* random_cmd =
        app.add_subcommand("random", "run the invariant suite on seeded random bicomplexes; "
                                     "exits 1 on a counterexample");
    random_cmd->add_option("--seed", seed, "master seed");
    random_cmd->add_option("--cases", cases, "number of random bicomplexes");
    random_cmd->add_option("--max-extent", max_extent, "max anchor coordinate");
    random_cmd->add_option("--max-pieces", max_pieces, "max pieces per assembly");
    random_cmd->add_flag("--conjugation,!--no-conjugation", conjugation,
                         "mirror-close assemblies and attach conjugation");

    SearchConstraints constraints;
    std::string out_path;
    CLI::App* search_cmd = app.add_subcommand(
        "search", "look for a zigzag assembly with the requested properties");
    search_cmd->add_flag("--degenerate-e1", constraints.degenerate_e1, "require E_1 = E_inf");
    search_cmd->add_flag("--hodge-symmetric", constraints.hodge_symmetric,
                         "require h^{p,q}_dbar = h^{p,q}_del everywhere");
    search_cmd->add_flag("--lemma-fails", constraints.lemma_fails,
                         "require the del-delbar-Lemma to fail");
    search_cmd->add_option("--budget", budget, "max assemblies to try");
    search_cmd->add_option("--seed", seed, "seed for the randomized tail");
    search_cmd->add_option("--out", out_path, "write the found bicomplex file");

    bool list_builtins = false;
    CLI::App* builtin_cmd = app.add_subcommand("builtin", "builtin models");
    builtin_cmd->add_flag("--list", list_builtins, "list builtin model names");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) {
            if (analyze_args.input.empty() == analyze_args.builtin_name.empty()) {
                std::cerr << "analyze: give exactly one of an input file or --builtin\n";
                return kExitParse;
            }
            return run_analyze(analyze_args);
        }
        if (random_cmd->parsed()) return run_random(seed, cases, max_extent, max_pieces, conjugation);
        if (search_cmd->parsed()) return run_search(constraints, budget, seed, out_path);
        if (builtin_cmd->parsed()) {
            if (!list_builtins) {
                std::cerr << "builtin: use --list\n";
                return kExitParse;
            }
            for (const auto& name : builtin_names()) std::cout << name << "\n";
            return kExitOk;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ModelError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const ContainmentError& e) {
        std::cerr << "broken complex: " << e.what() << "\n";
        return kExitValidation;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitParse;
}
