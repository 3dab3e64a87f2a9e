#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gibbslab/cli/config.hpp"
#include "gibbslab/errors.hpp"

namespace gibbslab::cli {

namespace {

void add_shared_flags(CLI::App* sub, ExperimentConfig& config) {
    sub->add_option("--gamma", config.gammas, "inverse temperature(s), comma separated")
        ->delimiter(',')
        ->required();
    sub->add_option("--n", config.n_list, "sample counts, comma separated, increasing")
        ->delimiter(',');
    sub->add_option("--out", config.out_path, "output file path");
    sub->add_option("--format", config.format, "output format")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, OutputFormat>{{"csv", OutputFormat::csv},
                                                {"json", OutputFormat::json}},
            CLI::ignore_case));
    sub->add_option("--seed", config.seed, "master seed for Monte-Carlo runs");
    sub->add_option("--samples", config.samples, "Monte-Carlo dataset pairs (0 = skip)");
    sub->add_flag("--strict", config.strict, "nonzero exit when a verification claim fails");
    sub->add_option("--tol", config.tol, "relative tolerance of the asymptotic claims");
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"information-measure laboratory for the Gibbs posterior"};
    app.require_subcommand(1);

    ExperimentConfig coin, gaussian, custom, bounds, fit;

    auto* coin_cmd = app.add_subcommand("coin-toss", "exact sweep of the two-symbol matching problem");
    coin.mode = Mode::coin_toss;
    add_shared_flags(coin_cmd, coin);
    coin_cmd->add_option("--p", coin.coin_bias, "coin bias P(z = 1)");
    coin_cmd->add_option("--delta", coin.delta, "slack of the (b-a)^2 gamma/((4-delta)n) bound");
    coin_cmd->add_option("--sigma", coin.sigma, "sub-Gaussian parameter (default (b-a)/2)");
    coin_cmd->add_option("--ce", coin.lautum_ratio, "lautum/mutual ratio lower bound C_E");

    auto* gaussian_cmd = app.add_subcommand("gaussian", "closed forms of the mean-estimation example");
    gaussian.mode = Mode::gaussian;
    add_shared_flags(gaussian_cmd, gaussian);
    gaussian_cmd->add_option("--beta", gaussian.beta, "data precision parameter");

    auto* custom_cmd = app.add_subcommand("custom", "exact sweep of a problem file");
    custom.mode = Mode::custom;
    add_shared_flags(custom_cmd, custom);
    custom_cmd->add_option("--problem", custom.problem_path, "problem file (JSON)")->required();
    custom_cmd->add_option("--delta", custom.delta, "slack of the (b-a)^2 gamma/((4-delta)n) bound");
    custom_cmd->add_option("--sigma", custom.sigma, "sub-Gaussian parameter (default (b-a)/2)");
    custom_cmd->add_option("--ce", custom.lautum_ratio, "lautum/mutual ratio lower bound C_E");

    auto* bounds_cmd = app.add_subcommand("bounds", "generalization-error bounds against exact gen");
    bounds.mode = Mode::bounds;
    add_shared_flags(bounds_cmd, bounds);
    bounds_cmd->add_option("--p", bounds.coin_bias, "coin bias when no problem file is given");
    bounds_cmd->add_option("--problem", bounds.problem_path, "problem file (JSON)");
    bounds_cmd->add_option("--delta", bounds.delta, "slack of the (b-a)^2 gamma/((4-delta)n) bound");
    bounds_cmd->add_option("--sigma", bounds.sigma, "sub-Gaussian parameter (default (b-a)/2)");
    bounds_cmd->add_option("--ce", bounds.lautum_ratio, "lautum/mutual ratio lower bound C_E");

    auto* fit_cmd = app.add_subcommand("fit", "limit extrapolation of an (n, value) sequence");
    fit.mode = Mode::fit;
    fit_cmd->add_option("--problem", fit.problem_path, "CSV file with n,value rows")->required();
    fit_cmd->add_option("--p", fit.fit_exponent, "exponent p of the n^p scaling");
    fit_cmd->add_option("--out", fit.out_path, "output file path");
    fit_cmd->add_option("--format", fit.format, "output format")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, OutputFormat>{{"csv", OutputFormat::csv},
                                                {"json", OutputFormat::json}},
            CLI::ignore_case));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    const ExperimentConfig* selected = nullptr;
    if (coin_cmd->parsed()) selected = &coin;
    if (gaussian_cmd->parsed()) selected = &gaussian;
    if (custom_cmd->parsed()) selected = &custom;
    if (bounds_cmd->parsed()) selected = &bounds;
    if (fit_cmd->parsed()) selected = &fit;

    try {
        return run(*selected);
    } catch (const NumericalError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace gibbslab::cli
