#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gibbslab/prob_vector.hpp"

namespace gibbslab {

/// Inverse temperature and sample count of one Gibbs-learner configuration.
struct GibbsParams {
    double gamma = 1.0;
    int n = 1;

    void validate() const;
};

/// A finite learning problem: hypothesis labels, instance labels, a loss
/// matrix, a strictly positive prior over hypotheses, and the data
/// distribution over instances. Immutable after construction; constructors
/// validate every invariant and record the loss range [loss_min, loss_max].
class DiscreteProblem {
public:
    DiscreteProblem(std::vector<std::string> hypothesis_labels,
                    std::vector<std::string> instance_labels,
                    std::vector<std::vector<double>> loss,
                    std::vector<double> prior,
                    std::vector<double> mu);

    [[nodiscard]] std::size_t num_hypotheses() const { return hypothesis_labels_.size(); }
    [[nodiscard]] std::size_t num_instances() const { return instance_labels_.size(); }

    [[nodiscard]] const std::vector<std::string>& hypothesis_labels() const {
        return hypothesis_labels_;
    }
    [[nodiscard]] const std::vector<std::string>& instance_labels() const {
        return instance_labels_;
    }

    [[nodiscard]] double loss(std::size_t w, std::size_t z) const { return loss_[w][z]; }
    [[nodiscard]] const std::vector<std::vector<double>>& loss_matrix() const { return loss_; }

    [[nodiscard]] const std::vector<double>& prior() const { return prior_; }
    [[nodiscard]] const std::vector<double>& log_prior() const { return log_prior_; }
    [[nodiscard]] const std::vector<double>& mu() const { return mu_; }
    [[nodiscard]] const std::vector<double>& log_mu() const { return log_mu_; }

    [[nodiscard]] double loss_min() const { return loss_min_; }
    [[nodiscard]] double loss_max() const { return loss_max_; }

    [[nodiscard]] ProbVector prior_vector() const;
    [[nodiscard]] ProbVector mu_vector() const;

    /// Stable content fingerprint (FNV-1a over the defining data).
    [[nodiscard]] std::uint64_t fingerprint() const;

private:
    std::vector<std::string> hypothesis_labels_;
    std::vector<std::string> instance_labels_;
    std::vector<std::vector<double>> loss_;
    std::vector<double> prior_;
    std::vector<double> log_prior_;
    std::vector<double> mu_;
    std::vector<double> log_mu_;
    double loss_min_ = 0.0;
    double loss_max_ = 0.0;
};

/// The two-symbol matching problem: w,z in {0,1}, loss(w,z) = 1 when w == z,
/// uniform prior, mu = (1-bias, bias) with bias = P(z = 1).
DiscreteProblem make_coin_toss(double bias = 0.5);

/// Seeded random problem: losses i.i.d. uniform on [0,1], prior and mu drawn
/// from the flat Dirichlet on the simplex.
DiscreteProblem make_random_problem(std::uint64_t seed, std::size_t num_hypotheses,
                                    std::size_t num_instances);

}  // namespace gibbslab
