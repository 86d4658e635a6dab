// Command-line front end: `fs19 verify <selector>` runs the selected check
// suite against the data directory and renders the report.
//
// Exit codes: 0 all checks pass (assumed counts as pass), 1 any check
// failed, 2 no failures but some check was inconclusive, 3 data files
// missing or corrupt, 64 usage error.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "fs19/check.hpp"
#include "fs19/suite.hpp"

int main(int argc, char** argv) {
    CLI::App app{"fs19: recomputes the arithmetic facts behind the classification of "
                 "semistable abelian varieties with bad reduction only at 19"};
    app.require_subcommand(1);

    std::string selector;
    std::string format = "text";
    std::string out_path;
    fs19::SuiteOptions opt;

    CLI::App* verify = app.add_subcommand("verify", "run a check suite and report");
    verify->add_option("selector", selector,
                       "which checks to run: all, bounds, cft, hopf, curve, groups, ext")
        ->required();
    verify->add_option("--report", format, "report format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
    verify->add_option("--out", out_path, "write the report to this file instead of stdout");
    verify->add_option("--data", opt.data_dir, "data directory (default: data)");
    verify->add_option("--hopf-n-max", opt.hopf_n_max,
                       "largest parameter n checked per Hopf family")
        ->check(CLI::PositiveNumber);
    verify->add_option("--search-radius", opt.search_radius,
                       "principality search radius for class-number verification")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 64;
    }

    if (!fs19::is_known_selector(selector)) {
        std::cerr << "usage error: unknown selector '" << selector
                  << "' (expected one of: all, bounds, cft, hopf, curve, groups, ext)\n";
        return 64;
    }

    fs19::VerificationReport report;
    try {
        report = fs19::run_suite(selector, opt);
    } catch (const std::exception& e) {
        std::cerr << "startup error: " << e.what() << "\n";
        return 3;
    }

    std::string doc = (format == "json") ? fs19::render_json(report)
                                         : fs19::render_text(report);
    if (out_path.empty()) {
        std::cout << doc;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write report to " << out_path << "\n";
            return 3;
        }
        out << doc;
    }
    return report.exit_code();
}
