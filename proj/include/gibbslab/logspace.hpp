#pragma once

#include <cmath>
#include <limits>
#include <span>
#include <vector>

namespace gibbslab {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

/// log(sum_i exp(x[i])) with the usual max shift; -inf entries drop out.
/// Returns -inf for an empty span or when every entry is -inf.
inline double log_sum_exp(std::span<const double> xs) {
    double m = kNegInf;
    for (double x : xs) m = std::max(m, x);
    if (m == kNegInf) return kNegInf;
    double acc = 0.0;
    for (double x : xs) {
        if (x != kNegInf) acc += std::exp(x - m);
    }
    return m + std::log(acc);
}

inline double log_sum_exp(const std::vector<double>& xs) {
    return log_sum_exp(std::span<const double>(xs));
}

/// Streaming accumulator for long sums of doubles. Uses an extended-precision
/// accumulator so that reductions over ~1e6 terms keep ~1e-15 relative error.
class Accumulator {
public:
    void add(double x) { acc_ += static_cast<long double>(x); }
    [[nodiscard]] double value() const { return static_cast<double>(acc_); }

private:
    long double acc_ = 0.0L;
};

/// x*log(x/y) with the 0*log(0) := 0 convention. Assumes y > 0 when x > 0.
inline double x_log_x_over_y(double x, double y) {
    if (x == 0.0) return 0.0;
    return x * std::log(x / y);
}

}  // namespace gibbslab
