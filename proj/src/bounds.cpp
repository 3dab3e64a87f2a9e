#include "gibbslab/rates/bounds.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "gibbslab/errors.hpp"

namespace gibbslab::rates {

namespace {
constexpr double kGenTol = 1e-12;
const double kNan = std::numeric_limits<double>::quiet_NaN();
}  // namespace

void BoundParams::validate() const {
    if (loss_upper < loss_lower) {
        throw ArgumentError("BoundParams: loss_upper must be >= loss_lower");
    }
    if (!(delta > 0.0 && delta < 4.0)) {
        throw ArgumentError("BoundParams: delta must lie in (0, 4)");
    }
    if (!(sub_gaussian > 0.0)) {
        throw ArgumentError("BoundParams: sub-Gaussian sigma must be positive");
    }
    if (lautum_ratio < 0.0) {
        throw ArgumentError("BoundParams: C_E must be nonnegative");
    }
    if (n < 1) {
        throw ArgumentError("BoundParams: n must be positive");
    }
    if (!(gamma >= 0.0)) {
        throw ArgumentError("BoundParams: gamma must be nonnegative");
    }
}

double bound_gamma_over_2n(double gamma, int n) {
    if (n < 1) {
        throw ArgumentError("bound_gamma_over_2n: n must be positive");
    }
    if (!(gamma >= 0.0)) {
        throw ArgumentError("bound_gamma_over_2n: gamma must be nonnegative");
    }
    return gamma / (2.0 * n);
}

double bound_theorem6(const BoundParams& params) {
    params.validate();
    const double range = params.loss_upper - params.loss_lower;
    return range * range * params.gamma / ((4.0 - params.delta) * params.n);
}

double bound_subgaussian(const BoundParams& params) {
    params.validate();
    return 2.0 * params.sub_gaussian * params.sub_gaussian * params.gamma /
           ((1.0 + params.lautum_ratio) * params.n);
}

BoundsTable compare_bounds(const DiscreteProblem& problem, double gamma,
                           const std::vector<int>& n_list, double delta,
                           std::optional<double> sigma, double lautum_ratio,
                           std::size_t ceiling) {
    const double a = problem.loss_min();
    const double b = problem.loss_max();
    // A bounded loss is (b-a)/2 sub-Gaussian; used when sigma is not supplied.
    const double sigma_eff = sigma.value_or(std::max((b - a) / 2.0, 1e-300));

    BoundsTable table;
    table.gamma = gamma;
    table.delta = delta;
    table.sigma = sigma_eff;
    table.lautum_ratio = lautum_ratio;
    table.eq21_applicable = a >= 0.0 && b <= 1.0;

    for (int n : n_list) {
        BoundParams params;
        params.loss_lower = a;
        params.loss_upper = b;
        params.sub_gaussian = sigma_eff;
        params.lautum_ratio = lautum_ratio;
        params.delta = delta;
        params.gamma = gamma;
        params.n = n;

        BoundsRow row;
        row.n = n;
        row.gen = discrete::joint_measures(problem, GibbsParams{gamma, n}, ceiling).gen;
        if (row.gen < -kGenTol) {
            throw NumericalError("compare_bounds: gen = " + std::to_string(row.gen) +
                                 " is negative at n = " + std::to_string(n));
        }
        row.eq21 = table.eq21_applicable ? bound_gamma_over_2n(gamma, n) : kNan;
        row.theorem6 = bound_theorem6(params);
        row.subgaussian = bound_subgaussian(params);
        if (table.eq21_applicable && row.gen > row.eq21 + kGenTol) {
            throw NumericalError("compare_bounds: gen = " + std::to_string(row.gen) +
                                 " violates the gamma/(2n) bound at n = " + std::to_string(n));
        }
        row.theorem6_holds = row.gen <= row.theorem6 + kGenTol;
        if (row.theorem6_holds && !table.theorem6_first_holding_n) {
            table.theorem6_first_holding_n = n;
        }
        const bool indeterminate = row.gen <= kGenTol;
        row.ratio_eq21 = indeterminate ? kNan : row.eq21 / row.gen;
        row.ratio_theorem6 = indeterminate ? kNan : row.theorem6 / row.gen;
        row.ratio_subgaussian = indeterminate ? kNan : row.subgaussian / row.gen;
        table.rows.push_back(row);
    }
    return table;
}

}  // namespace gibbslab::rates
