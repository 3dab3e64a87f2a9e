#pragma once

#include <vector>

#include "gibbslab/discrete/type_class.hpp"
#include "gibbslab/info_report.hpp"
#include "gibbslab/prob_vector.hpp"
#include "gibbslab/problem.hpp"

namespace gibbslab::discrete {

/// Gibbs distribution defined with the population risk; the n -> infinity
/// hypothesis law.
struct LimitingPosterior {
    ProbVector dist;
};

/// Jensen-gap values J^[n](w, z): log-of-average minus average-of-log of the
/// posterior over the n-1 complement samples. Every entry is >= 0 up to
/// roundoff.
struct JensenGapTable {
    int n = 0;
    std::vector<std::vector<double>> gap;  // [w][z]
};

/// Posterior over hypotheses given a dataset summarized by its type.
/// Computed in the log domain; depends on the dataset only through counts.
ProbVector gibbs_posterior(const DiscreteProblem& problem, const GibbsParams& params,
                           const TypeClass& type);

/// Normalized prior(w) * exp(-gamma * population_risk(w)).
LimitingPosterior limiting_posterior(const DiscreteProblem& problem, double gamma);

/// Exact information measures for the pair (W; S) via type-class enumeration.
/// gen is computed from the decoupled-minus-coupled expected empirical risk
/// and cross-checked against skl/gamma inside the function.
InfoReport joint_measures(const DiscreteProblem& problem, const GibbsParams& params,
                          std::size_t ceiling = kDefaultTypeCeiling);

/// Exact information measures for the pair (W; Z_i). Identical for every i by
/// exchangeability, so a single report is returned. The report's gen is the
/// generalization error reconstructed from per-sample contributions (equal to
/// the joint gen).
InfoReport individual_measures(const DiscreteProblem& problem, const GibbsParams& params,
                               std::size_t ceiling = kDefaultTypeCeiling);

/// J^[n](w, z) for every hypothesis/instance pair.
JensenGapTable jensen_gap_table(const DiscreteProblem& problem, const GibbsParams& params,
                                std::size_t ceiling = kDefaultTypeCeiling);

/// Residual of the exact decomposition
///   sum_i I_SKL(W;Z_i) - I_SKL(W;S)
///     = sum_i ( E_{P_{W,Z_i}}[J] - E_{P_W x P_{Z_i}}[J] ),
/// with all four pieces computed from their definitions. The identity holds
/// at every finite n, so the residual is pure numerical noise (<= 1e-9).
double verify_theorem1(const DiscreteProblem& problem, const GibbsParams& params,
                       std::size_t ceiling = kDefaultTypeCeiling);

/// gamma^2 * E_mu[ Var_{W ~ limiting posterior}(loss(W,Z) - population_risk(W)) ],
/// the limit of n^2 * I_SKL(W;Z_i) and of n * I_SKL(W;S).
double asymptotic_constant(const DiscreteProblem& problem, double gamma);

}  // namespace gibbslab::discrete
