#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "gibbslab/problem.hpp"
#include "gibbslab/rng.hpp"

namespace gibbslab::mc {

/// Quadrature grid settings for expectations over the hypothesis variable.
struct GridSpec {
    int points = 2048;
    double coverage_eps = 1e-10;  // prior mass left outside the grid
    double width_scale = 1.0;     // interval expansion factor (coverage retries)
};

/// A one-dimensional learning problem with continuous (or atomic) hypothesis
/// support. Expectations over W are taken by quadrature, never by sampling.
struct ContinuousProblem1D {
    std::function<double(double, double)> loss;       // (w, z) -> loss, lower-bounded
    std::function<double(double)> log_prior;          // log density, or log mass on atoms
    std::function<double(Rng&)> sample_instance;      // z ~ mu
    std::function<double(double)> population_risk;    // analytic L_mu(w); may be empty
    std::function<std::pair<double, double>(double)>
        prior_interval;          // eps -> interval holding prior mass >= 1 - eps
    std::vector<double> atoms;   // nonempty: finite hypothesis support

    [[nodiscard]] bool is_atomic() const { return !atoms.empty(); }
};

/// Normalized posterior on quadrature nodes; sum_k weights[k] * density[k] == 1.
struct PosteriorTable {
    std::vector<double> nodes;
    std::vector<double> weights;
    std::vector<double> density;
};

/// A seeded Monte-Carlo estimate with its standard error. Bit-reproducible
/// for a fixed (seed, num_datasets, grid).
struct McEstimate {
    double value = 0.0;
    double std_error = 0.0;
    int num_datasets = 0;
    std::uint64_t seed = 0;
};

/// The mean-estimation example as a continuous problem: z ~ Normal(0, 1/(2 beta)),
/// squared-error loss, prior Normal(0, 1/2).
ContinuousProblem1D make_gaussian_mean_problem(double beta);

/// A finite problem embedded on integer atoms, for cross-checking the exact
/// discrete engine against the Monte-Carlo estimator.
ContinuousProblem1D wrap_discrete_problem(const DiscreteProblem& problem);

/// Gridded Gibbs posterior exp(log_prior - gamma * empirical risk), normalized
/// by log-sum-exp with trapezoid weights. Raises CoverageError when the
/// boundary cells carry more than 1e-8 posterior mass.
PosteriorTable quadrature_posterior(const ContinuousProblem1D& p, double gamma,
                                    std::span<const double> dataset,
                                    const GridSpec& grid = {});

/// Monte Carlo over dataset pairs (S, S'), quadrature over W:
///   gen ~= mean_j  E_{W|S_j}[ L_e(W, S'_j) - L_e(W, S_j) ].
/// gamma * value estimates I_SKL(W;S). Coverage errors trigger a bounded
/// symmetric grid expansion before propagating.
McEstimate estimate_gen_mc(const ContinuousProblem1D& p, double gamma, int n,
                           int num_datasets, std::uint64_t seed, const GridSpec& grid = {});

/// Inverse standard normal CDF (Acklam), used to place prior-coverage grids.
double normal_quantile(double prob);

}  // namespace gibbslab::mc
