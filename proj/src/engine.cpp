#include "gibbslab/discrete/engine.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "gibbslab/divergences.hpp"
#include "gibbslab/errors.hpp"
#include "gibbslab/logspace.hpp"

namespace gibbslab::discrete {

namespace {

int sum_counts(const std::vector<int>& counts) {
    int n = 0;
    for (int c : counts) n += c;
    return n;
}

/// log P(w | type) for every w; depends on the dataset only through counts.
std::vector<double> log_posterior(const DiscreteProblem& problem, double gamma, int n,
                                  const std::vector<int>& counts) {
    const std::size_t nw = problem.num_hypotheses();
    std::vector<double> lp(nw);
    for (std::size_t w = 0; w < nw; ++w) {
        double risk_sum = 0.0;
        for (std::size_t z = 0; z < counts.size(); ++z) {
            if (counts[z] != 0) risk_sum += counts[z] * problem.loss(w, z);
        }
        lp[w] = problem.log_prior()[w] - gamma * risk_sum / n;
    }
    const double log_z = log_sum_exp(lp);
    for (double& v : lp) v -= log_z;
    return lp;
}

InfoReport zero_report(const GibbsParams& params, PairKind kind) {
    InfoReport r;
    r.n = params.n;
    r.gamma = params.gamma;
    r.kind = kind;
    return r;
}

/// Shared machinery for the individual-sample pair (W; Z_i): the mixture
/// posterior P_{W|Z_i=z} and the mu^{n-1}-averaged log posterior, both built
/// from the size-(n-1) type table with a single-count shift.
struct IndividualTable {
    // [z][w]
    std::vector<std::vector<double>> conditional;      // P_{W | Z_i = z}(w)
    std::vector<std::vector<double>> mean_log_posterior;  // E_{z^{-i}}[log P_{W|S}(w)]
    std::vector<double> marginal;                      // P_W(w) = sum_z mu(z) conditional
};

IndividualTable build_individual_table(const DiscreteProblem& problem,
                                       const GibbsParams& params, std::size_t ceiling) {
    const std::size_t nw = problem.num_hypotheses();
    const std::size_t nz = problem.num_instances();
    const auto complements = enumerate_types(params.n - 1, problem.mu(), ceiling);

    IndividualTable table;
    table.conditional.assign(nz, std::vector<double>(nw, 0.0));
    table.mean_log_posterior.assign(nz, std::vector<double>(nw, 0.0));
    table.marginal.assign(nw, 0.0);

    std::vector<Accumulator> cond(nz * nw), mean_log(nz * nw);
    std::vector<int> shifted;
    for (const auto& type : complements) {
        if (type.log_weight == kNegInf) continue;
        const double weight = std::exp(type.log_weight);
        for (std::size_t z = 0; z < nz; ++z) {
            shifted = type.counts;
            ++shifted[z];
            const auto lp = log_posterior(problem, params.gamma, params.n, shifted);
            for (std::size_t w = 0; w < nw; ++w) {
                cond[z * nw + w].add(weight * std::exp(lp[w]));
                mean_log[z * nw + w].add(weight * lp[w]);
            }
        }
    }
    for (std::size_t z = 0; z < nz; ++z) {
        for (std::size_t w = 0; w < nw; ++w) {
            table.conditional[z][w] = cond[z * nw + w].value();
            table.mean_log_posterior[z][w] = mean_log[z * nw + w].value();
        }
    }
    for (std::size_t w = 0; w < nw; ++w) {
        Accumulator acc;
        for (std::size_t z = 0; z < nz; ++z) {
            acc.add(problem.mu()[z] * table.conditional[z][w]);
        }
        table.marginal[w] = acc.value();
    }
    return table;
}

}  // namespace

ProbVector gibbs_posterior(const DiscreteProblem& problem, const GibbsParams& params,
                           const TypeClass& type) {
    params.validate();
    if (type.counts.size() != problem.num_instances()) {
        throw ArgumentError("gibbs_posterior: type counts length must match instance count");
    }
    if (sum_counts(type.counts) != params.n) {
        throw ArgumentError("gibbs_posterior: type counts must sum to n");
    }
    const auto lp = log_posterior(problem, params.gamma, params.n, type.counts);
    return ProbVector::from_log_unnormalized(problem.hypothesis_labels(), lp);
}

LimitingPosterior limiting_posterior(const DiscreteProblem& problem, double gamma) {
    if (!(gamma >= 0.0)) {
        throw ArgumentError("limiting_posterior: gamma must be nonnegative");
    }
    std::vector<double> lw(problem.num_hypotheses());
    for (std::size_t w = 0; w < lw.size(); ++w) {
        lw[w] = problem.log_prior()[w] - gamma * population_risk(problem, w);
    }
    return LimitingPosterior{ProbVector::from_log_unnormalized(problem.hypothesis_labels(), lw)};
}

InfoReport joint_measures(const DiscreteProblem& problem, const GibbsParams& params,
                          std::size_t ceiling) {
    params.validate();
    if (params.gamma == 0.0) {
        return zero_report(params, PairKind::joint);  // posterior is data-independent
    }
    const std::size_t nw = problem.num_hypotheses();
    const auto types = enumerate_types(params.n, problem.mu(), ceiling);

    // Pass 1: the hypothesis marginal P_W = sum_t weight(t) P_{W|t}.
    std::vector<Accumulator> marginal_acc(nw);
    for (const auto& type : types) {
        if (type.log_weight == kNegInf) continue;
        const double weight = std::exp(type.log_weight);
        if (weight == 0.0) continue;
        const auto lp = log_posterior(problem, params.gamma, params.n, type.counts);
        for (std::size_t w = 0; w < nw; ++w) {
            marginal_acc[w].add(weight * std::exp(lp[w]));
        }
    }
    std::vector<double> marginal(nw), log_marginal(nw);
    for (std::size_t w = 0; w < nw; ++w) {
        marginal[w] = marginal_acc[w].value();
        log_marginal[w] = std::log(marginal[w]);
    }

    // Pass 2: divergences and both generalization-error routes.
    Accumulator mutual, lautum, chi2, risk_coupled, risk_decoupled;
    for (const auto& type : types) {
        if (type.log_weight == kNegInf) continue;
        const double weight = std::exp(type.log_weight);
        if (weight == 0.0) continue;
        const auto lp = log_posterior(problem, params.gamma, params.n, type.counts);
        for (std::size_t w = 0; w < nw; ++w) {
            const double post = std::exp(lp[w]);
            const double diff_log = lp[w] - log_marginal[w];
            mutual.add(weight * post * diff_log);
            lautum.add(-weight * marginal[w] * diff_log);
            const double dev = post - marginal[w];
            chi2.add(weight * dev * dev / marginal[w]);
            const double risk = empirical_risk(problem, w, type.counts);
            risk_coupled.add(weight * post * risk);
            risk_decoupled.add(weight * marginal[w] * risk);
        }
    }

    InfoReport r = zero_report(params, PairKind::joint);
    r.mutual = mutual.value();
    r.lautum = lautum.value();
    r.skl = r.mutual + r.lautum;
    r.chi2 = chi2.value();
    r.gen = risk_decoupled.value() - risk_coupled.value();
    const double gen_from_skl = r.skl / params.gamma;
    if (std::abs(r.gen - gen_from_skl) > 1e-10) {
        throw NumericalError("joint_measures: generalization-error routes disagree by " +
                             std::to_string(std::abs(r.gen - gen_from_skl)));
    }
    return r;
}

InfoReport individual_measures(const DiscreteProblem& problem, const GibbsParams& params,
                               std::size_t ceiling) {
    params.validate();
    if (params.gamma == 0.0) {
        return zero_report(params, PairKind::individual);
    }
    const std::size_t nw = problem.num_hypotheses();
    const std::size_t nz = problem.num_instances();
    const auto table = build_individual_table(problem, params, ceiling);

    Accumulator mutual, lautum, chi2, loss_coupled, loss_decoupled;
    for (std::size_t z = 0; z < nz; ++z) {
        const double mu_z = problem.mu()[z];
        if (mu_z == 0.0) continue;
        for (std::size_t w = 0; w < nw; ++w) {
            const double cond = table.conditional[z][w];
            const double marg = table.marginal[w];
            const double diff_log = std::log(cond) - std::log(marg);
            mutual.add(mu_z * cond * diff_log);
            lautum.add(-mu_z * marg * diff_log);
            const double dev = cond - marg;
            chi2.add(mu_z * dev * dev / marg);
            loss_coupled.add(mu_z * cond * problem.loss(w, z));
            loss_decoupled.add(mu_z * marg * problem.loss(w, z));
        }
    }

    InfoReport r = zero_report(params, PairKind::individual);
    r.mutual = mutual.value();
    r.lautum = lautum.value();
    r.skl = r.mutual + r.lautum;
    r.chi2 = chi2.value();
    // Per-sample decoupled-minus-coupled contributions sum to the joint gen;
    // by exchangeability that sum is n * (1/n) * (this difference).
    r.gen = loss_decoupled.value() - loss_coupled.value();
    return r;
}

JensenGapTable jensen_gap_table(const DiscreteProblem& problem, const GibbsParams& params,
                                std::size_t ceiling) {
    params.validate();
    const std::size_t nw = problem.num_hypotheses();
    const std::size_t nz = problem.num_instances();
    JensenGapTable table;
    table.n = params.n;
    table.gap.assign(nw, std::vector<double>(nz, 0.0));
    if (params.gamma == 0.0 || params.n == 1) {
        // Constant posterior, or an empty complement: both terms coincide.
        return table;
    }
    const auto individual = build_individual_table(problem, params, ceiling);
    for (std::size_t w = 0; w < nw; ++w) {
        for (std::size_t z = 0; z < nz; ++z) {
            table.gap[w][z] =
                std::log(individual.conditional[z][w]) - individual.mean_log_posterior[z][w];
        }
    }
    return table;
}

double verify_theorem1(const DiscreteProblem& problem, const GibbsParams& params,
                       std::size_t ceiling) {
    params.validate();
    const auto joint = joint_measures(problem, params, ceiling);
    const auto individual = individual_measures(problem, params, ceiling);
    const auto gaps = jensen_gap_table(problem, params, ceiling);
    const auto table = build_individual_table(problem, params, ceiling);

    Accumulator coupled, decoupled;
    for (std::size_t z = 0; z < problem.num_instances(); ++z) {
        const double mu_z = problem.mu()[z];
        if (mu_z == 0.0) continue;
        for (std::size_t w = 0; w < problem.num_hypotheses(); ++w) {
            coupled.add(mu_z * table.conditional[z][w] * gaps.gap[w][z]);
            decoupled.add(mu_z * table.marginal[w] * gaps.gap[w][z]);
        }
    }
    const double n = params.n;
    const double lhs = n * individual.skl - joint.skl;
    const double rhs = n * (coupled.value() - decoupled.value());
    return std::abs(lhs - rhs);
}

double asymptotic_constant(const DiscreteProblem& problem, double gamma) {
    if (!(gamma >= 0.0)) {
        throw ArgumentError("asymptotic_constant: gamma must be nonnegative");
    }
    const auto limit = limiting_posterior(problem, gamma);
    const std::size_t nw = problem.num_hypotheses();
    std::vector<double> pop_risk(nw);
    for (std::size_t w = 0; w < nw; ++w) pop_risk[w] = population_risk(problem, w);

    Accumulator acc;
    for (std::size_t z = 0; z < problem.num_instances(); ++z) {
        const double mu_z = problem.mu()[z];
        if (mu_z == 0.0) continue;
        double mean = 0.0, mean_sq = 0.0;
        for (std::size_t w = 0; w < nw; ++w) {
            const double centered = problem.loss(w, z) - pop_risk[w];
            mean += limit.dist[w] * centered;
            mean_sq += limit.dist[w] * centered * centered;
        }
        acc.add(mu_z * (mean_sq - mean * mean));
    }
    return gamma * gamma * acc.value();
}

}  // namespace gibbslab::discrete
