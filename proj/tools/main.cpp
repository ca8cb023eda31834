#include "report.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <stdexcept>

using namespace sweil::cli;

int main(int argc, char** argv) {
    CLI::App app{"Exact checks for semi-infinite Weil complexes and their superconformal symmetries", "sweil"};
    app.set_config("--config", "", "key = value file with any of the long options");

    std::string mode;
    std::string format = "json";
    int emax = -1;
    RunConfig cfg;
    app.add_option("mode", mode,
                   "verify-n2 | verify-s2a | verify-chain | verify-relative | sca-tables | cohomology | kahler")
        ->required();
    app.add_option("--backend", cfg.backend, "loop:sl2 | loop:abelian:D | witt | fmu:LAMBDA:MU")
        ->capture_default_str();
    app.add_option("--alpha", cfg.alpha, "S'(2,alpha) parameter as P/Q")->capture_default_str();
    app.add_option("--emax", emax, "energy bound (default 3, or 2 for cohomology and kahler)");
    app.add_option("--b0max", cfg.b0max, "bound on mode-0 bosons")->capture_default_str();
    app.add_option("--window", cfg.window, "mode window |n| <= N")->capture_default_str();
    app.add_flag("--rel", cfg.relative, "relative model");
    app.add_option("--format", format, "json | csv | text")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    app.add_option("--jobs", cfg.jobs, "worker threads")->capture_default_str();
    app.add_flag("--timing", cfg.timing, "add wall-clock milliseconds to the report");
    app.add_option("--golden", cfg.golden, "sca-tables: expected bracket table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const auto m = parse_mode(mode);
    if (!m) {
        std::cerr << "sweil: unknown mode '" << mode << "'\n";
        return 2;
    }
    cfg.mode = *m;
    if (emax >= 0) cfg.emax = emax;
    else if (app.count("--emax")) {
        std::cerr << "sweil: emax must be nonnegative\n";
        return 2;
    }

    try {
        const Outcome out = run(cfg);
        std::cout << render(out, format);
        return out.pass ? 0 : 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "sweil: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "sweil: internal error: " << e.what() << "\n";
        return 1;
    }
}
