#include "gibbslab/rates/rate_fit.hpp"

#include <cmath>
#include <limits>

#include "gibbslab/errors.hpp"

namespace gibbslab::rates {

RateFit fit_limit(const std::vector<std::pair<int, double>>& sequence, double exponent,
                  int tail) {
    if (sequence.size() < 4) {
        throw ArgumentError("fit_limit: need at least 4 points");
    }
    for (std::size_t i = 1; i < sequence.size(); ++i) {
        if (sequence[i].first <= sequence[i - 1].first) {
            throw ArgumentError("fit_limit: n values must be strictly increasing");
        }
    }
    std::size_t window = tail == 0 ? sequence.size()
                                   : std::min<std::size_t>(sequence.size(),
                                                           static_cast<std::size_t>(tail));
    if (window < 3) {
        throw ArgumentError("fit_limit: tail window must span at least 3 points");
    }
    const std::size_t start = sequence.size() - window;

    RateFit fit;
    fit.exponent = exponent;
    fit.tail_window = static_cast<int>(window);

    // Least squares of y = c0 + c1 * x with x = 1/n, y = n^p * a_n.
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = start; i < sequence.size(); ++i) {
        const double n = sequence[i].first;
        const double x = 1.0 / n;
        const double y = std::pow(n, exponent) * sequence[i].second;
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double m = static_cast<double>(window);
    const double det = m * sxx - sx * sx;
    const double c1 = (m * sxy - sx * sy) / det;
    const double c0 = (sy - c1 * sx) / m;
    fit.limit_estimate = c0;

    double rss = 0.0;
    for (std::size_t i = start; i < sequence.size(); ++i) {
        const double n = sequence[i].first;
        const double y = std::pow(n, exponent) * sequence[i].second;
        const double r = y - (c0 + c1 / n);
        rss += r * r;
    }
    fit.residual_rms = std::sqrt(rss / m);

    // Log-log slope of |a_n|; zero (or nonpositive |a_n|) entries are dropped.
    double lx = 0, ly = 0, lxx = 0, lxy = 0;
    std::size_t used = 0;
    for (std::size_t i = start; i < sequence.size(); ++i) {
        const double mag = std::abs(sequence[i].second);
        if (mag <= 0.0) {
            fit.zeros_excluded_from_slope = true;
            continue;
        }
        const double x = std::log(static_cast<double>(sequence[i].first));
        const double y = std::log(mag);
        lx += x;
        ly += y;
        lxx += x * x;
        lxy += x * y;
        ++used;
    }
    if (used >= 2) {
        const double u = static_cast<double>(used);
        fit.slope_estimate = (u * lxy - lx * ly) / (u * lxx - lx * lx);
    } else {
        fit.slope_estimate = std::numeric_limits<double>::quiet_NaN();
        fit.zeros_excluded_from_slope = true;
    }
    return fit;
}

}  // namespace gibbslab::rates
