#include "gibbslab/problem.hpp"

#include <cmath>
#include <cstring>
#include <limits>

#include "gibbslab/errors.hpp"
#include "gibbslab/logspace.hpp"
#include "gibbslab/rng.hpp"

namespace gibbslab {

namespace {

constexpr double kSumTol = 1e-12;

void check_distribution(const std::vector<double>& p, const std::string& name,
                        bool require_positive) {
    double sum = 0.0;
    for (double v : p) {
        if (!std::isfinite(v) || v < 0.0) {
            throw ArgumentError(name + ": entries must be finite and nonnegative");
        }
        if (require_positive && v <= 0.0) {
            throw ArgumentError(name + ": zero entry rejected, every entry must be strictly positive");
        }
        sum += v;
    }
    if (std::abs(sum - 1.0) > kSumTol) {
        throw ArgumentError(name + ": sums to " + std::to_string(sum) +
                            ", expected 1 within 1e-12");
    }
}

std::vector<double> to_logs(const std::vector<double>& p) {
    std::vector<double> logs(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        logs[i] = p[i] > 0.0 ? std::log(p[i]) : kNegInf;
    }
    return logs;
}

void fnv_mix(std::uint64_t& h, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
        h ^= (v >> (8 * i)) & 0xffU;
        h *= 0x100000001b3ULL;
    }
}

}  // namespace

void GibbsParams::validate() const {
    if (!(gamma >= 0.0) || !std::isfinite(gamma)) {
        throw ArgumentError("GibbsParams: gamma must be a finite nonnegative real");
    }
    if (n < 1) {
        throw ArgumentError("GibbsParams: n must be a positive integer");
    }
}

DiscreteProblem::DiscreteProblem(std::vector<std::string> hypothesis_labels,
                                 std::vector<std::string> instance_labels,
                                 std::vector<std::vector<double>> loss,
                                 std::vector<double> prior, std::vector<double> mu)
    : hypothesis_labels_(std::move(hypothesis_labels)),
      instance_labels_(std::move(instance_labels)),
      loss_(std::move(loss)),
      prior_(std::move(prior)),
      mu_(std::move(mu)) {
    if (hypothesis_labels_.empty() || instance_labels_.empty()) {
        throw ArgumentError("DiscreteProblem: hypothesis and instance sets must be nonempty");
    }
    if (loss_.size() != hypothesis_labels_.size()) {
        throw ArgumentError("DiscreteProblem: loss must have one row per hypothesis");
    }
    loss_min_ = std::numeric_limits<double>::infinity();
    loss_max_ = -std::numeric_limits<double>::infinity();
    for (const auto& row : loss_) {
        if (row.size() != instance_labels_.size()) {
            throw ArgumentError("DiscreteProblem: ragged loss matrix, every row needs one entry per instance");
        }
        for (double v : row) {
            if (!std::isfinite(v)) {
                throw ArgumentError("DiscreteProblem: loss entries must be finite");
            }
            loss_min_ = std::min(loss_min_, v);
            loss_max_ = std::max(loss_max_, v);
        }
    }
    if (prior_.size() != hypothesis_labels_.size()) {
        throw ArgumentError("DiscreteProblem: prior length must match hypothesis count");
    }
    if (mu_.size() != instance_labels_.size()) {
        throw ArgumentError("DiscreteProblem: mu length must match instance count");
    }
    check_distribution(prior_, "DiscreteProblem prior", /*require_positive=*/true);
    check_distribution(mu_, "DiscreteProblem mu", /*require_positive=*/false);
    log_prior_ = to_logs(prior_);
    log_mu_ = to_logs(mu_);
}

ProbVector DiscreteProblem::prior_vector() const {
    return ProbVector::from_values(hypothesis_labels_, prior_);
}

ProbVector DiscreteProblem::mu_vector() const {
    return ProbVector::from_values(instance_labels_, mu_);
}

std::uint64_t DiscreteProblem::fingerprint() const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    fnv_mix(h, num_hypotheses());
    fnv_mix(h, num_instances());
    auto mix_double = [&h](double v) {
        std::uint64_t bits;
        static_assert(sizeof(bits) == sizeof(v));
        std::memcpy(&bits, &v, sizeof(bits));
        fnv_mix(h, bits);
    };
    for (const auto& row : loss_) {
        for (double v : row) mix_double(v);
    }
    for (double v : prior_) mix_double(v);
    for (double v : mu_) mix_double(v);
    return h;
}

DiscreteProblem make_coin_toss(double bias) {
    if (!(bias >= 0.0 && bias <= 1.0)) {
        throw ArgumentError("coin toss: bias must lie in [0, 1]");
    }
    return DiscreteProblem({"0", "1"}, {"0", "1"},
                           {{1.0, 0.0}, {0.0, 1.0}},
                           {0.5, 0.5}, {1.0 - bias, bias});
}

DiscreteProblem make_random_problem(std::uint64_t seed, std::size_t num_hypotheses,
                                    std::size_t num_instances) {
    if (num_hypotheses < 1 || num_instances < 1) {
        throw ArgumentError("random problem: need at least one hypothesis and one instance");
    }
    Rng rng(seed);
    auto simplex = [&rng](std::size_t k) {
        // Flat Dirichlet via normalized exponentials.
        std::vector<double> v(k);
        double sum = 0.0;
        for (double& x : v) {
            x = -std::log(rng.next_double_open_low());
            sum += x;
        }
        double acc = 0.0;
        for (std::size_t i = 0; i + 1 < k; ++i) {
            v[i] /= sum;
            acc += v[i];
        }
        v[k - 1] = 1.0 - acc;  // exact normalization
        return v;
    };
    std::vector<std::vector<double>> loss(num_hypotheses, std::vector<double>(num_instances));
    for (auto& row : loss) {
        for (double& v : row) v = rng.next_double();
    }
    std::vector<std::string> wl(num_hypotheses), zl(num_instances);
    for (std::size_t i = 0; i < num_hypotheses; ++i) wl[i] = "w" + std::to_string(i);
    for (std::size_t i = 0; i < num_instances; ++i) zl[i] = "z" + std::to_string(i);
    return DiscreteProblem(std::move(wl), std::move(zl), std::move(loss),
                           simplex(num_hypotheses), simplex(num_instances));
}

}  // namespace gibbslab
