// Command line front end.  Verbs map one-to-one onto the library's verb
// functions; everything here is flag plumbing and exit-code mapping.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "decomp/diagnostics.hpp"
#include "decomp/json_io.hpp"
#include "decomp/suites.hpp"

namespace {

void emit(const std::string& text, const std::string& output) {
    if (output.empty()) {
        std::cout << text;
    } else {
        decomp::write_text_file(output, text);
    }
}

// DECOMP_MAX_N caps exhaustive verification scans; an explicit --max-n can
// only lower it further.
int effective_max_n(int flag_value) {
    int cap = 0;
    if (const char* env = std::getenv("DECOMP_MAX_N")) {
        try {
            cap = std::stoi(env);
        } catch (const std::exception&) {
            throw decomp::input_error("DECOMP_MAX_N must be an integer");
        }
    }
    if (cap <= 0) return flag_value;
    if (flag_value <= 0) return cap;
    return std::min(cap, flag_value);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"decomposition complexes of finite posets"};
    app.require_subcommand(1);

    std::string poset_source;
    std::vector<std::string> poset_sources;
    std::vector<std::string> gset_selectors;
    std::string gset_selector = "min";
    std::string building_selector = "atoms";
    std::string phi_selector = "canonical";
    std::string matroid_source;
    std::string format = "json";
    std::string output;
    std::string suite_selection = "all";
    std::size_t max_chains = 1000000;
    int max_n = 0;
    int grid_denominator = 4;
    std::uint64_t seed = 2026;

    CLI::App* complex_cmd = app.add_subcommand("complex", "face poset of D(P, G)");
    complex_cmd->add_option("--poset", poset_source, "poset file or inline JSON")->required();
    complex_cmd->add_option("--gset", gset_selector,
                            "min | max | file:PATH | inline JSON | product:P1;G1;P2;G2");
    complex_cmd->add_option("--output", output, "output path (default stdout)");
    complex_cmd->add_option("--max-chains", max_chains, "chain enumeration cap");

    CLI::App* realize_cmd = app.add_subcommand("realize", "geometry of D(P, G) under phi");
    realize_cmd->add_option("--poset", poset_source, "poset file or inline JSON")->required();
    realize_cmd->add_option("--gset", gset_selector,
                            "min | max | file:PATH | inline JSON | product:P1;G1;P2;G2");
    realize_cmd->add_option("--phi", phi_selector,
                            "canonical | atoms | identity | file:PATH | inline JSON");
    realize_cmd->add_option("--format", format, "json | off");
    realize_cmd->add_option("--output", output, "output path (default stdout)");
    realize_cmd->add_option("--max-chains", max_chains, "chain enumeration cap");

    CLI::App* product_cmd =
        app.add_subcommand("product", "product complex with its factor isomorphism");
    product_cmd->add_option("--poset", poset_sources, "two poset sources")
        ->expected(2)
        ->required();
    product_cmd->add_option("--gset", gset_selectors,
                            "one selector for both factors, or two selectors")
        ->expected(1, 2);
    product_cmd->add_option("--output", output, "output path (default stdout)");
    product_cmd->add_option("--max-chains", max_chains, "chain enumeration cap");

    CLI::App* coproduct_cmd = app.add_subcommand("coproduct", "complex of a disjoint union");
    coproduct_cmd->add_option("--poset", poset_sources, "two poset sources")
        ->expected(2)
        ->required();
    coproduct_cmd->add_option("--gset", gset_selectors,
                              "one selector for both summands, or two selectors")
        ->expected(1, 2);
    coproduct_cmd->add_option("--output", output, "output path (default stdout)");
    coproduct_cmd->add_option("--max-chains", max_chains, "chain enumeration cap");

    CLI::App* nested_cmd = app.add_subcommand("nested", "nested set complex of a building set");
    nested_cmd->add_option("--poset", poset_source, "poset file or inline JSON")->required();
    nested_cmd->add_option("--building", building_selector,
                           "all | atoms | file:PATH | inline JSON");
    nested_cmd->add_option("--output", output, "output path (default stdout)");

    CLI::App* bergman_cmd = app.add_subcommand("bergman", "Bergman fan of a matroid");
    bergman_cmd->add_option("--matroid", matroid_source, "matroid file or inline JSON")
        ->required();
    bergman_cmd->add_option("--output", output, "output path (default stdout)");
    bergman_cmd->add_option("--max-chains", max_chains, "chain enumeration cap");

    CLI::App* verify_cmd = app.add_subcommand("verify", "run verification suites");
    verify_cmd->add_option("--suite", suite_selection,
                           "all or a comma-separated list of suite names");
    verify_cmd->add_option("--max-n", max_n, "shrink exhaustive scans to this size");
    verify_cmd->add_option("--seed", seed, "seed for randomized scans");
    verify_cmd->add_option("--grid-denominator", grid_denominator,
                           "denominator for rational grid checks");
    verify_cmd->add_option("--max-chains", max_chains, "chain enumeration cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // Flag mistakes are input errors; keep --help and --version at 0.
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (complex_cmd->parsed()) {
            emit(decomp::run_complex(poset_source, gset_selector, max_chains), output);
        } else if (realize_cmd->parsed()) {
            emit(decomp::run_realize(poset_source, gset_selector, phi_selector, format,
                                     max_chains),
                 output);
        } else if (product_cmd->parsed() || coproduct_cmd->parsed()) {
            std::string g1 = gset_selectors.empty() ? std::string("min") : gset_selectors[0];
            std::string g2 = gset_selectors.size() > 1 ? gset_selectors[1] : g1;
            std::string text =
                product_cmd->parsed()
                    ? decomp::run_product(poset_sources[0], g1, poset_sources[1], g2, max_chains)
                    : decomp::run_coproduct(poset_sources[0], g1, poset_sources[1], g2,
                                            max_chains);
            emit(text, output);
        } else if (nested_cmd->parsed()) {
            emit(decomp::run_nested(poset_source, building_selector), output);
        } else if (bergman_cmd->parsed()) {
            emit(decomp::run_bergman(matroid_source, max_chains), output);
        } else if (verify_cmd->parsed()) {
            decomp::SuiteOptions opt;
            opt.max_n = effective_max_n(max_n);
            opt.seed = seed;
            opt.grid_denominator = grid_denominator;
            opt.max_chains = max_chains;
            bool all_pass = true;
            for (const decomp::SuiteResult& r : decomp::run_suites(suite_selection, opt)) {
                std::cout << decomp::format_suite_result(r) << '\n';
                all_pass = all_pass && r.pass;
            }
            if (!all_pass) return 2;
        }
    } catch (const decomp::input_error& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 1;
    } catch (const decomp::resource_error& e) {
        std::cerr << "resource cap: " << e.what() << '\n';
        return 3;
    } catch (const decomp::verify_error& e) {
        std::cerr << "verification failure: " << e.what() << '\n';
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "verification failure: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
