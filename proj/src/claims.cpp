#include "gibbslab/rates/claims.hpp"

#include <cmath>
#include <limits>

#include "gibbslab/errors.hpp"

namespace gibbslab::rates {

namespace {

constexpr double kZeroTol = 1e-12;
constexpr double kGapSlopeThreshold = -1.5;

Claim rate_claim(const std::string& name, const RateFit& fit, double constant, double rel_tol) {
    Claim c;
    c.name = name;
    c.measured = fit.limit_estimate;
    c.expected = constant;
    if (std::abs(constant) <= kZeroTol) {
        // Degenerate problem: every measure is exactly zero.
        c.status = std::abs(fit.limit_estimate) <= 1e-9 ? ClaimStatus::pass : ClaimStatus::fail;
        c.detail = "constant is 0; limit compared at absolute 1e-9";
        return c;
    }
    const double rel = std::abs(fit.limit_estimate - constant) / std::abs(constant);
    c.status = rel <= rel_tol ? ClaimStatus::pass : ClaimStatus::fail;
    c.detail = "relative deviation " + std::to_string(rel);
    return c;
}

Claim ratio_claim(const std::string& name, double numerator, double denominator,
                  double rel_tol) {
    Claim c;
    c.name = name;
    c.expected = 1.0;
    if (std::abs(numerator) <= kZeroTol && std::abs(denominator) <= kZeroTol) {
        c.status = ClaimStatus::indeterminate;
        c.detail = "indeterminate (0/0)";
        c.measured = std::numeric_limits<double>::quiet_NaN();
        return c;
    }
    c.measured = numerator / denominator;
    c.status = std::abs(c.measured - 1.0) <= rel_tol ? ClaimStatus::pass : ClaimStatus::fail;
    return c;
}

}  // namespace

bool ClaimReport::all_passed() const {
    for (const auto& c : claims) {
        if (c.status == ClaimStatus::fail) return false;
    }
    return true;
}

const Claim* ClaimReport::first_failure() const {
    for (const auto& c : claims) {
        if (c.status == ClaimStatus::fail) return &c;
    }
    return nullptr;
}

ClaimReport verify_claims(const DiscreteProblem& problem, double gamma,
                          const std::vector<int>& n_list, double rel_tol,
                          std::size_t ceiling) {
    return verify_claims(problem, sweep(problem, gamma, n_list, ceiling), rel_tol);
}

ClaimReport verify_claims(const DiscreteProblem& problem, const SweepTable& table,
                          double rel_tol) {
    if (table.rows.size() < 4) {
        throw ArgumentError("verify_claims: need at least 4 sweep points");
    }
    if (table.rows.back().n < 256) {
        throw ArgumentError("verify_claims: largest n must be >= 256");
    }

    ClaimReport report;
    report.gamma = table.gamma;
    report.constant = discrete::asymptotic_constant(problem, table.gamma);

    std::vector<std::pair<int, double>> skl_individual, skl_joint, gap;
    for (const auto& row : table.rows) {
        skl_individual.emplace_back(row.n, row.individual.skl);
        skl_joint.emplace_back(row.n, row.joint.skl);
        gap.emplace_back(row.n, row.gap);
    }

    report.claims.push_back(rate_claim("individual_rate", fit_limit(skl_individual, 2.0),
                                       report.constant, rel_tol));

    {
        Claim c;
        c.name = "gap_decay";
        c.expected = kGapSlopeThreshold;
        const RateFit fit = fit_limit(gap, 1.0);
        c.measured = fit.slope_estimate;
        if (std::isnan(fit.slope_estimate)) {
            // A gap that is identically zero decays faster than any power.
            bool all_zero = true;
            for (const auto& [n, g] : gap) all_zero = all_zero && g == 0.0;
            c.status = all_zero ? ClaimStatus::pass : ClaimStatus::indeterminate;
            c.detail = all_zero ? "gap identically zero" : "slope undefined";
        } else {
            c.status = fit.slope_estimate <= kGapSlopeThreshold ? ClaimStatus::pass
                                                                : ClaimStatus::fail;
            c.detail = "log-log slope of |gap|";
        }
        report.claims.push_back(c);
    }

    report.claims.push_back(
        rate_claim("joint_rate", fit_limit(skl_joint, 1.0), report.constant, rel_tol));

    const auto& last = table.rows.back();
    report.claims.push_back(
        ratio_claim("mutual_lautum_ratio", last.joint.mutual, last.joint.lautum, rel_tol));
    report.claims.push_back(
        ratio_claim("chi2_skl_ratio", last.individual.chi2, last.individual.skl, rel_tol));
    return report;
}

std::string to_string(ClaimStatus status) {
    switch (status) {
        case ClaimStatus::pass: return "pass";
        case ClaimStatus::fail: return "fail";
        case ClaimStatus::indeterminate: return "indeterminate";
    }
    return "unknown";
}

}  // namespace gibbslab::rates
