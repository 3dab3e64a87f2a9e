#include "gibbslab/divergences.hpp"

#include <cmath>

#include "gibbslab/errors.hpp"
#include "gibbslab/logspace.hpp"

namespace gibbslab {

namespace {

void require_same_labels(const ProbVector& p, const ProbVector& q) {
    if (!p.same_labels(q)) {
        throw ArgumentError("divergence: p and q are defined over different label sets");
    }
}

}  // namespace

double kl_divergence(const ProbVector& p, const ProbVector& q) {
    require_same_labels(p, q);
    Accumulator acc;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0.0) continue;  // 0*log(0) := 0
        if (q[i] == 0.0) {
            throw SupportError("divergence: positive mass against zero reference at label '" +
                               p.labels()[i] + "'");
        }
        acc.add(p[i] * (p.log_values()[i] - q.log_values()[i]));
    }
    return acc.value();
}

double skl_divergence(const ProbVector& p, const ProbVector& q) {
    require_same_labels(p, q);
    // Check mutual absolute continuity up front so the error names the
    // direction as well as the label.
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] > 0.0 && q[i] == 0.0) {
            throw SupportError("skl_divergence: q has zero mass where p > 0 (P->Q direction) at label '" +
                               p.labels()[i] + "'");
        }
        if (q[i] > 0.0 && p[i] == 0.0) {
            throw SupportError("skl_divergence: p has zero mass where q > 0 (Q->P direction) at label '" +
                               p.labels()[i] + "'");
        }
    }
    return kl_divergence(p, q) + kl_divergence(q, p);
}

double empirical_risk(const DiscreteProblem& problem, std::size_t w,
                      std::span<const int> counts) {
    if (w >= problem.num_hypotheses()) {
        throw ArgumentError("empirical_risk: hypothesis index out of range");
    }
    if (counts.size() != problem.num_instances()) {
        throw ArgumentError("empirical_risk: counts length must match instance count");
    }
    long long n = 0;
    double weighted = 0.0;
    for (std::size_t z = 0; z < counts.size(); ++z) {
        if (counts[z] < 0) {
            throw ArgumentError("empirical_risk: negative count");
        }
        n += counts[z];
        weighted += static_cast<double>(counts[z]) * problem.loss(w, z);
    }
    if (n == 0) {
        throw ArgumentError("empirical_risk: counts sum to zero, need a nonempty dataset");
    }
    return weighted / static_cast<double>(n);
}

double population_risk(const DiscreteProblem& problem, std::size_t w) {
    if (w >= problem.num_hypotheses()) {
        throw ArgumentError("population_risk: hypothesis index out of range");
    }
    Accumulator acc;
    for (std::size_t z = 0; z < problem.num_instances(); ++z) {
        acc.add(problem.mu()[z] * problem.loss(w, z));
    }
    return acc.value();
}

}  // namespace gibbslab
