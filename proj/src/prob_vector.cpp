#include "gibbslab/prob_vector.hpp"

#include <cmath>
#include <limits>

#include "gibbslab/errors.hpp"
#include "gibbslab/logspace.hpp"

namespace gibbslab {

namespace {
constexpr double kSumTol = 1e-12;
}

ProbVector ProbVector::from_values(std::vector<std::string> labels, std::vector<double> values) {
    if (labels.size() != values.size()) {
        throw ArgumentError("ProbVector: labels and values differ in length");
    }
    if (values.empty()) {
        throw ArgumentError("ProbVector: empty support");
    }
    double sum = 0.0;
    for (double v : values) {
        if (!std::isfinite(v) || v < 0.0) {
            throw ArgumentError("ProbVector: entries must be finite and nonnegative");
        }
        sum += v;
    }
    if (std::abs(sum - 1.0) > kSumTol) {
        throw ArgumentError("ProbVector: values sum to " + std::to_string(sum) +
                            ", expected 1 within 1e-12");
    }
    std::vector<double> logs(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        logs[i] = values[i] > 0.0 ? std::log(values[i]) : kNegInf;
    }
    return ProbVector(std::move(labels), std::move(values), std::move(logs));
}

ProbVector ProbVector::from_log_unnormalized(std::vector<std::string> labels,
                                             const std::vector<double>& log_weights) {
    if (labels.size() != log_weights.size()) {
        throw ArgumentError("ProbVector: labels and log weights differ in length");
    }
    const double log_z = log_sum_exp(log_weights);
    if (!std::isfinite(log_z)) {
        throw ArgumentError("ProbVector: log weights have no finite mass");
    }
    std::vector<double> logs(log_weights.size());
    std::vector<double> values(log_weights.size());
    for (std::size_t i = 0; i < log_weights.size(); ++i) {
        logs[i] = log_weights[i] - log_z;
        values[i] = std::exp(logs[i]);
    }
    return ProbVector(std::move(labels), std::move(values), std::move(logs));
}

}  // namespace gibbslab
