#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace gibbslab::gaussian {

/// Default ceiling on the dense joint-covariance dimension (n + 1).
inline constexpr int kDefaultDenseCeiling = 4096;

/// The one-dimensional mean-estimation test bed: data z ~ Normal(0, 1/(2 beta)),
/// squared-error loss (w - z)^2, prior w ~ Normal(0, 1/2).
struct GaussianProblem {
    double beta = 0.5;
    double gamma = 1.0;
    int n = 1;

    void validate() const;
};

/// Dense symmetric matrix, row-major.
struct SymmetricMatrix {
    std::size_t dim = 0;
    std::vector<double> data;

    explicit SymmetricMatrix(std::size_t d = 0) : dim(d), data(d * d, 0.0) {}
    double& at(std::size_t i, std::size_t j) { return data[i * dim + j]; }
    [[nodiscard]] double at(std::size_t i, std::size_t j) const { return data[i * dim + j]; }
};

/// Joint covariance of (W, Z_1..Z_n) under the Gibbs posterior for the
/// mean-estimation problem, plus the decoupled (cross terms zeroed) variant.
struct GaussianCovariance {
    std::size_t dim = 0;
    SymmetricMatrix sigma;
    SymmetricMatrix sigma_indep;
};

/// Closed-form information measures of the mean-estimation example.
struct GaussianReport {
    double skl_joint = 0.0;
    double skl_individual = 0.0;
    double mutual_joint = 0.0;
    double mutual_individual = 0.0;
    double gap = 0.0;  // n * skl_individual - skl_joint
    std::function<double(double, double)> jensen_gap;  // (w, z) -> J^[n](w, z)
};

/// The additive pieces of the closed-form Jensen gap, exposed for rate checks.
/// J(w, z) = log_norm_mixture + log_norm_posterior + variance_constant
///           + w2 * w^2 + wz * w * z + z2 * z^2.
struct JensenGapTerms {
    double log_norm_mixture = 0.0;    // log sqrt(n^2 (1+g)^2 b / (pi D))
    double log_norm_posterior = 0.0;  // -log sqrt((1+g) / pi)
    double variance_constant = 0.0;   // (n-1)/n^2 * g^2/(1+g) * 1/(2b)
    double w2 = 0.0;
    double wz = 0.0;
    double z2 = 0.0;
};

/// Builds the (n+1)-dimensional joint covariance. Raises ResourceError when n
/// exceeds the dense ceiling.
GaussianCovariance gaussian_joint_covariance(const GaussianProblem& p,
                                             int ceiling = kDefaultDenseCeiling);

/// The 2x2 covariance of the pair (W, Z_i).
GaussianCovariance gaussian_individual_covariance(const GaussianProblem& p);

/// (1/2) trace(Sigma^{-1} Sigma_indep - I) via a Cholesky solve; never forms
/// the inverse. Raises NumericalError naming the failing leading minor.
double gaussian_skl_trace(const GaussianCovariance& cov);

/// All closed forms of the example in one report.
GaussianReport gaussian_closed_forms(const GaussianProblem& p);

/// Closed-form Jensen gap J^[n](w, z); requires n >= 2.
double gaussian_jensen_gap(const GaussianProblem& p, double w, double z);

/// The individual terms of the Jensen gap; requires n >= 2.
JensenGapTerms gaussian_jensen_gap_terms(const GaussianProblem& p);

}  // namespace gibbslab::gaussian
