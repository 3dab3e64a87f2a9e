#pragma once

#include <utility>
#include <vector>

namespace gibbslab::rates {

/// Extrapolated limit of a sequence n^p * a_n, with residual diagnostics.
/// limit_estimate is the intercept of a least-squares fit of n^p * a_n on
/// (1, 1/n) over the tail; slope_estimate is the ordinary log-log slope of
/// |a_n| over the same window.
struct RateFit {
    double exponent = 0.0;
    double limit_estimate = 0.0;
    double slope_estimate = 0.0;
    double residual_rms = 0.0;
    int tail_window = 0;
    bool zeros_excluded_from_slope = false;
};

/// Fits the tail of (n, a_n). `tail` = 0 uses every point; otherwise the last
/// `tail` points. Requires >= 4 points overall and a window of >= 3.
RateFit fit_limit(const std::vector<std::pair<int, double>>& sequence, double exponent,
                  int tail = 0);

}  // namespace gibbslab::rates
