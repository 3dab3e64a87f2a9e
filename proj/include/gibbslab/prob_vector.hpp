#pragma once

#include <string>
#include <vector>

namespace gibbslab {

/// A normalized probability vector over a labeled finite set, carried in both
/// linear and log domain. Immutable after construction.
class ProbVector {
public:
    /// Build from linear-domain values; validates normalization and signs.
    static ProbVector from_values(std::vector<std::string> labels, std::vector<double> values);

    /// Build from unnormalized log weights (log-sum-exp normalization).
    /// Entries may be -inf; at least one must be finite.
    static ProbVector from_log_unnormalized(std::vector<std::string> labels,
                                            const std::vector<double>& log_weights);

    [[nodiscard]] std::size_t size() const { return values_.size(); }
    [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
    [[nodiscard]] const std::vector<double>& values() const { return values_; }
    [[nodiscard]] const std::vector<double>& log_values() const { return log_values_; }
    [[nodiscard]] double operator[](std::size_t i) const { return values_[i]; }

    [[nodiscard]] bool same_labels(const ProbVector& other) const {
        return labels_ == other.labels_;
    }

private:
    ProbVector(std::vector<std::string> labels, std::vector<double> values,
               std::vector<double> log_values)
        : labels_(std::move(labels)),
          values_(std::move(values)),
          log_values_(std::move(log_values)) {}

    std::vector<std::string> labels_;
    std::vector<double> values_;
    std::vector<double> log_values_;
};

}  // namespace gibbslab
