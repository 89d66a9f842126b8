#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cli.hpp"

// thinex: evaluate, simulate and cross-verify thinned order statistics,
// free (random-matrix) extreme laws and Peak-Over-Threshold excess laws.
//
// Exit codes: 0 ok, 2 validation error, 3 resource guard, 4 numerical failure.

namespace {

void add_common(CLI::App* cmd, thinex::cli::RunConfig& cfg, std::string& grid_text,
                std::string& out_path) {
    cmd->add_option("--law", cfg.law,
                    "parent law: semicircle|mp|arcsine|free-cauchy|levy-smirnov|gaussian|"
                    "exponential");
    cmd->add_option("--r", cfg.rectangularity, "Marchenko-Pastur rectangularity (mp only)");
    cmd->add_option("--seed", cfg.seed, "base RNG seed");
    cmd->add_option("--grid", grid_text, "evaluation grid lo:hi:points");
    cmd->add_option("--out", out_path, "output CSV path (default stdout)");
    cmd->add_flag("--deterministic", cfg.deterministic,
                  "suppress the timestamp comment for byte-identical reruns");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"thinning approach to classical, free and POT extreme laws"};
    app.require_subcommand(1);

    thinex::cli::RunConfig cfg;
    std::string grid_text;
    std::string out_path;
    std::string hist_path;

    CLI::App* eval = app.add_subcommand("eval", "PDF/CDF tables or a single quantile");
    eval->add_option("--quantile", cfg.quantile, "emit quantile at this probability");
    add_common(eval, cfg, grid_text, out_path);

    CLI::App* thin = app.add_subcommand("thin", "finite vs asymptotic thinned CDF curves");
    thin->add_option("--k", cfg.k, "thinning fraction m/n");
    thin->add_option("--m", cfg.m, "finite sample size");
    add_common(thin, cfg, grid_text, out_path);

    CLI::App* maxsim = app.add_subcommand("maxsim", "random-matrix max-spectrum simulation");
    maxsim->add_option("--k", cfg.k, "number of matrices per max (integer)");
    maxsim->add_option("--N", cfg.N, "matrix size");
    maxsim->add_option("--draws", cfg.draws, "independent max draws");
    maxsim->add_option("--threads", cfg.threads, "worker threads (0 = auto/THINEX_THREADS)");
    maxsim->add_option("--budget", cfg.budget, "resource guard on N*k*draws");
    maxsim->add_option("--bins", cfg.bins, "histogram bins");
    maxsim->add_option("--hist-out", hist_path, "write histogram CSV to this path");
    add_common(maxsim, cfg, grid_text, out_path);

    CLI::App* converge = app.add_subcommand("converge", "rescaled thinned CDF vs free limit");
    converge->add_option("--k-list", cfg.k_list, "thinning fractions to scan")
        ->delimiter(',');
    add_common(converge, cfg, grid_text, out_path);

    CLI::App* potcheck = app.add_subcommand("potcheck", "POT excess vs thinning identity gaps");
    potcheck->add_option("--u", cfg.u, "POT threshold");
    add_common(potcheck, cfg, grid_text, out_path);

    CLI::App* bridge = app.add_subcommand("bridge", "exponentiation bridge residuals");
    bridge->add_option("--family", cfg.family, "gumbel|frechet|weibull");
    bridge->add_option("--gamma", cfg.gamma, "tail index (frechet/weibull)");
    add_common(bridge, cfg, grid_text, out_path);

    CLI11_PARSE(app, argc, argv);

    try {
        cfg.command = app.get_subcommands().front()->get_name();
        if (!grid_text.empty()) {
            cfg.grid = thinex::cli::parse_grid(grid_text);
            cfg.grid_set = true;
        }

        std::ofstream file;
        std::ostream* out = &std::cout;
        if (!out_path.empty()) {
            file.open(out_path);
            if (!file) throw thinex::cli::validation_error("cannot open " + out_path);
            out = &file;
        }
        std::ofstream hist_file;
        std::ostream* hist = nullptr;
        if (!hist_path.empty()) {
            hist_file.open(hist_path);
            if (!hist_file) throw thinex::cli::validation_error("cannot open " + hist_path);
            hist = &hist_file;
        }

        thinex::cli::run_command(cfg, *out, hist);
        return 0;
    } catch (const thinex::resource_limit_error& e) {
        std::cerr << "error: resource_guard " << e.what() << "\n";
        return 3;
    } catch (const thinex::cli::validation_error& e) {
        std::cerr << "error: validation " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: validation " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: validation " << e.what() << "\n";
        return 2;
    } catch (const std::length_error& e) {
        std::cerr << "error: validation " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: numerical " << e.what() << "\n";
        return 4;
    }
}
