#include "gibbslab/mc/estimator.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "gibbslab/errors.hpp"
#include "gibbslab/logspace.hpp"

namespace gibbslab::mc {

namespace {

constexpr double kBoundaryMassTol = 1e-8;
constexpr int kMaxExpansions = 4;

double empirical_risk_at(const ContinuousProblem1D& p, double w,
                         std::span<const double> dataset) {
    double sum = 0.0;
    for (double z : dataset) sum += p.loss(w, z);
    return sum / static_cast<double>(dataset.size());
}

}  // namespace

double normal_quantile(double prob) {
    // Acklam's rational approximation, |relative error| < 1.2e-9.
    if (!(prob > 0.0 && prob < 1.0)) {
        throw ArgumentError("normal_quantile: probability must lie in (0, 1)");
    }
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double p_low = 0.02425;
    double q, r;
    if (prob < p_low) {
        q = std::sqrt(-2.0 * std::log(prob));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    if (prob > 1.0 - p_low) {
        q = std::sqrt(-2.0 * std::log(1.0 - prob));
        return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    q = prob - 0.5;
    r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

ContinuousProblem1D make_gaussian_mean_problem(double beta) {
    if (!(beta > 0.0)) {
        throw ArgumentError("gaussian mean problem: beta must be positive");
    }
    ContinuousProblem1D p;
    const double data_sd = 1.0 / std::sqrt(2.0 * beta);
    const double prior_sd = 1.0 / std::sqrt(2.0);
    p.loss = [](double w, double z) { return (w - z) * (w - z); };
    p.log_prior = [](double w) { return -w * w - 0.5 * std::log(std::numbers::pi); };
    p.sample_instance = [data_sd](Rng& rng) { return rng.next_normal(0.0, data_sd); };
    p.population_risk = [beta](double w) { return w * w + 1.0 / (2.0 * beta); };
    p.prior_interval = [prior_sd](double eps) {
        const double half = prior_sd * normal_quantile(1.0 - eps / 2.0);
        return std::pair<double, double>(-half, half);
    };
    return p;
}

ContinuousProblem1D wrap_discrete_problem(const DiscreteProblem& problem) {
    ContinuousProblem1D p;
    const auto loss = problem.loss_matrix();
    const auto log_prior = problem.log_prior();
    const auto mu = problem.mu();
    p.loss = [loss](double w, double z) {
        return loss[static_cast<std::size_t>(std::lround(w))]
                   [static_cast<std::size_t>(std::lround(z))];
    };
    p.log_prior = [log_prior](double w) {
        return log_prior[static_cast<std::size_t>(std::lround(w))];
    };
    p.sample_instance = [mu](Rng& rng) {
        return static_cast<double>(rng.next_index(mu));
    };
    p.population_risk = [problem](double w) {
        return population_risk(problem, static_cast<std::size_t>(std::lround(w)));
    };
    p.atoms.resize(problem.num_hypotheses());
    for (std::size_t w = 0; w < p.atoms.size(); ++w) p.atoms[w] = static_cast<double>(w);
    return p;
}

PosteriorTable quadrature_posterior(const ContinuousProblem1D& p, double gamma,
                                    std::span<const double> dataset, const GridSpec& grid) {
    if (dataset.empty()) {
        throw ArgumentError("quadrature_posterior: dataset must be nonempty");
    }
    if (!(gamma >= 0.0)) {
        throw ArgumentError("quadrature_posterior: gamma must be nonnegative");
    }
    PosteriorTable table;
    if (p.is_atomic()) {
        table.nodes = p.atoms;
        table.weights.assign(p.atoms.size(), 1.0);
    } else {
        if (grid.points < 4) {
            throw ArgumentError("quadrature_posterior: need at least 4 grid points");
        }
        auto [lo, hi] = p.prior_interval(grid.coverage_eps);
        const double center = 0.5 * (lo + hi);
        const double half = 0.5 * (hi - lo) * grid.width_scale;
        lo = center - half;
        hi = center + half;
        const double step = (hi - lo) / (grid.points - 1);
        table.nodes.resize(grid.points);
        table.weights.assign(grid.points, step);
        for (int k = 0; k < grid.points; ++k) table.nodes[k] = lo + k * step;
        table.weights.front() = table.weights.back() = 0.5 * step;
    }

    const std::size_t count = table.nodes.size();
    std::vector<double> logits(count);
    for (std::size_t k = 0; k < count; ++k) {
        logits[k] = p.log_prior(table.nodes[k]) -
                    gamma * empirical_risk_at(p, table.nodes[k], dataset) +
                    std::log(table.weights[k]);
    }
    const double log_z = log_sum_exp(logits);
    table.density.resize(count);
    for (std::size_t k = 0; k < count; ++k) {
        table.density[k] = std::exp(logits[k] - log_z) / table.weights[k];
    }

    if (!p.is_atomic()) {
        const double boundary_mass = table.density.front() * table.weights.front() +
                                     table.density.back() * table.weights.back();
        if (boundary_mass > kBoundaryMassTol) {
            throw CoverageError(
                "quadrature_posterior: posterior boundary mass " + std::to_string(boundary_mass) +
                " exceeds 1e-8; widen the grid (increase width_scale or coverage)");
        }
    }
    return table;
}

McEstimate estimate_gen_mc(const ContinuousProblem1D& p, double gamma, int n,
                           int num_datasets, std::uint64_t seed, const GridSpec& grid) {
    if (num_datasets < 2) {
        throw ArgumentError("estimate_gen_mc: need at least 2 dataset pairs");
    }
    if (n < 1) {
        throw ArgumentError("estimate_gen_mc: n must be positive");
    }

    double mean = 0.0, m2 = 0.0;
    std::vector<double> train(n), fresh(n);
    for (int j = 0; j < num_datasets; ++j) {
        Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(j));
        for (double& z : train) z = p.sample_instance(rng);
        for (double& z : fresh) z = p.sample_instance(rng);

        GridSpec attempt = grid;
        PosteriorTable posterior;
        for (int expansion = 0;; ++expansion) {
            try {
                posterior = quadrature_posterior(p, gamma, train, attempt);
                break;
            } catch (const CoverageError&) {
                if (expansion >= kMaxExpansions) throw;
                attempt.width_scale *= 2.0;
            }
        }

        Accumulator pair_acc;
        for (std::size_t k = 0; k < posterior.nodes.size(); ++k) {
            const double w = posterior.nodes[k];
            pair_acc.add(posterior.weights[k] * posterior.density[k] *
                         (empirical_risk_at(p, w, fresh) - empirical_risk_at(p, w, train)));
        }
        const double g = pair_acc.value();
        const double delta = g - mean;
        mean += delta / (j + 1);
        m2 += delta * (g - mean);
    }

    McEstimate est;
    est.value = mean;
    est.std_error =
        std::sqrt(m2 / (static_cast<double>(num_datasets) - 1.0) / static_cast<double>(num_datasets));
    est.num_datasets = num_datasets;
    est.seed = seed;
    return est;
}

}  // namespace gibbslab::mc
