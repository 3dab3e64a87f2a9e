#pragma once

#include <optional>
#include <vector>

#include "gibbslab/discrete/engine.hpp"
#include "gibbslab/problem.hpp"

namespace gibbslab::rates {

/// Inputs of the generalization-error bounds.
struct BoundParams {
    double loss_lower = 0.0;   // a
    double loss_upper = 1.0;   // b
    double sub_gaussian = 0.5; // sigma
    double lautum_ratio = 0.0; // C_E, lower bound on L(W;S)/I(W;S)
    double delta = 0.5;        // slack in (0, 4)
    double gamma = 1.0;
    int n = 1;

    void validate() const;
};

/// gamma / (2n); valid for losses in [0, 1].
double bound_gamma_over_2n(double gamma, int n);

/// (b - a)^2 * gamma / ((4 - delta) * n). Holds for all n beyond some
/// unspecified threshold N; callers surface that caveat, not this function.
double bound_theorem6(const BoundParams& params);

/// 2 sigma^2 gamma / ((1 + C_E) n) for sigma-sub-Gaussian losses.
double bound_subgaussian(const BoundParams& params);

struct BoundsRow {
    int n = 0;
    double gen = 0.0;
    double eq21 = 0.0;        // gamma/(2n), NaN when the loss range leaves [0,1]
    double theorem6 = 0.0;
    double subgaussian = 0.0;
    double ratio_eq21 = 0.0;  // bound / gen; NaN when gen is 0 (indeterminate)
    double ratio_theorem6 = 0.0;
    double ratio_subgaussian = 0.0;
    bool theorem6_holds = false;
};

struct BoundsTable {
    double gamma = 0.0;
    double delta = 0.0;
    double sigma = 0.0;
    double lautum_ratio = 0.0;
    bool eq21_applicable = false;  // loss range within [0, 1]
    std::optional<int> theorem6_first_holding_n;  // empirical threshold for the "n > N" caveat
    std::vector<BoundsRow> rows;
};

/// Exact gen per n against the three bounds, with tightness ratios.
/// Violations of gen >= 0 or (for [0,1] losses) of the gamma/(2n) bound are
/// hard failures raised with the offending n; Theorem 6 violations are only
/// recorded, since that bound may legitimately fail at small n.
BoundsTable compare_bounds(const DiscreteProblem& problem, double gamma,
                           const std::vector<int>& n_list, double delta = 0.5,
                           std::optional<double> sigma = std::nullopt,
                           double lautum_ratio = 0.0,
                           std::size_t ceiling = discrete::kDefaultTypeCeiling);

}  // namespace gibbslab::rates
