#pragma once

#include <span>

#include "gibbslab/prob_vector.hpp"
#include "gibbslab/problem.hpp"

namespace gibbslab {

/// D(p||q) in nats with 0*log(0) := 0. Positive p mass against zero q mass is
/// a SupportError naming the offending label.
double kl_divergence(const ProbVector& p, const ProbVector& q);

/// Symmetrized KL divergence D(p||q) + D(q||p). Requires mutual absolute
/// continuity; violations raise SupportError with the failing direction.
double skl_divergence(const ProbVector& p, const ProbVector& q);

/// Average loss of hypothesis w over a dataset summarized by instance counts.
double empirical_risk(const DiscreteProblem& problem, std::size_t w,
                      std::span<const int> counts);

/// Expected loss of hypothesis w under the data distribution mu.
double population_risk(const DiscreteProblem& problem, std::size_t w);

}  // namespace gibbslab
