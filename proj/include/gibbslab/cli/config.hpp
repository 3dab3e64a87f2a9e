#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gibbslab::cli {

enum class Mode { coin_toss, gaussian, custom, bounds, fit };
enum class OutputFormat { csv, json };

/// One reproducible experiment: a mode, its problem parameters, the sweep and
/// Monte-Carlo settings, and the output destination. All state flows through
/// this struct; the runner touches no environment.
struct ExperimentConfig {
    Mode mode = Mode::coin_toss;

    // Problem parameters.
    double coin_bias = 0.5;           // --p in coin-toss/bounds modes
    double beta = 0.5;                // --beta (gaussian mode)
    std::string problem_path;         // --problem (custom/bounds: problem file; fit: sequence file)

    std::vector<double> gammas{1.0};  // --gamma, one table per value
    std::vector<int> n_list;          // --n

    // Monte-Carlo settings (gaussian mode; samples == 0 skips estimation).
    int samples = 0;                  // --samples: dataset pairs
    std::uint64_t seed = 1;           // --seed
    int grid_points = 2048;

    // Bound parameters.
    double delta = 0.5;               // --delta
    std::optional<double> sigma;      // --sigma (default: half the loss range)
    double lautum_ratio = 0.0;        // --ce

    double fit_exponent = 1.0;        // --p in fit mode

    std::string out_path;             // --out (mode-derived default when empty)
    std::optional<OutputFormat> format;  // --format; default csv, except gaussian: json
    bool strict = false;              // --strict: claim failures give nonzero exit
    double tol = 0.05;                // --tol: relative tolerance of the asymptotic claims
};

/// Executes the configured pipeline, writes the output files, and prints a
/// short report. Returns 0 on success, 1 when a verification claim fails
/// under --strict or a bound is violated, 2 on configuration errors.
int run(const ExperimentConfig& config);

/// argv-level entry point (parses flags into an ExperimentConfig, then run()).
int cli_main(int argc, const char* const* argv);

}  // namespace gibbslab::cli
