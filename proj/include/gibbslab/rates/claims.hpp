#pragma once

#include <string>
#include <vector>

#include "gibbslab/rates/rate_fit.hpp"
#include "gibbslab/rates/sweep.hpp"

namespace gibbslab::rates {

enum class ClaimStatus { pass, fail, indeterminate };

struct Claim {
    std::string name;
    ClaimStatus status = ClaimStatus::indeterminate;
    double measured = 0.0;
    double expected = 0.0;
    std::string detail;
};

/// Asymptotic claims checked against a sweep:
///   individual_rate:   limit of n^2 * skl_individual matches the closed-form
///                      variance constant,
///   gap_decay:         log-log slope of |n*skl_individual - skl_joint| <= -1.5,
///   joint_rate:        limit of n * skl_joint matches the same constant,
///   mutual_lautum_ratio: I(W;S)/L(W;S) -> 1 at the largest n,
///   chi2_skl_ratio:    chi2(W;Z_i)/skl(W;Z_i) -> 1 at the largest n.
/// Ratio claims over identically-zero sequences report indeterminate.
struct ClaimReport {
    double gamma = 0.0;
    double constant = 0.0;  // the shared variance constant
    std::vector<Claim> claims;

    [[nodiscard]] bool all_passed() const;
    [[nodiscard]] const Claim* first_failure() const;
};

/// Runs all five claims; `rel_tol` is the relative tolerance for the rate and
/// ratio comparisons (default 5%). Requires >= 4 sweep points with max n >= 256.
ClaimReport verify_claims(const DiscreteProblem& problem, double gamma,
                          const std::vector<int>& n_list, double rel_tol = 0.05,
                          std::size_t ceiling = discrete::kDefaultTypeCeiling);

/// Same checks evaluated on an existing sweep (must satisfy the same preconditions).
ClaimReport verify_claims(const DiscreteProblem& problem, const SweepTable& table,
                          double rel_tol = 0.05);

std::string to_string(ClaimStatus status);

}  // namespace gibbslab::rates
