#include "gibbslab/gaussian/gaussian.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "gibbslab/errors.hpp"

namespace gibbslab::gaussian {

namespace {

/// In-place lower Cholesky factor. Raises NumericalError naming the leading
/// minor that fails, LAPACK style.
SymmetricMatrix cholesky(const SymmetricMatrix& a) {
    const std::size_t n = a.dim;
    SymmetricMatrix l(n);
    for (std::size_t j = 0; j < n; ++j) {
        double diag = a.at(j, j);
        for (std::size_t k = 0; k < j; ++k) diag -= l.at(j, k) * l.at(j, k);
        if (!(diag > 0.0)) {
            throw NumericalError("cholesky: the leading minor of order " + std::to_string(j + 1) +
                                 " is not positive definite");
        }
        l.at(j, j) = std::sqrt(diag);
        for (std::size_t i = j + 1; i < n; ++i) {
            double v = a.at(i, j);
            for (std::size_t k = 0; k < j; ++k) v -= l.at(i, k) * l.at(j, k);
            l.at(i, j) = v / l.at(j, j);
        }
    }
    return l;
}

/// Solves A x = b given the lower Cholesky factor of A.
std::vector<double> cholesky_solve(const SymmetricMatrix& l, std::vector<double> b) {
    const std::size_t n = l.dim;
    for (std::size_t i = 0; i < n; ++i) {
        double v = b[i];
        for (std::size_t k = 0; k < i; ++k) v -= l.at(i, k) * b[k];
        b[i] = v / l.at(i, i);
    }
    for (std::size_t ii = n; ii-- > 0;) {
        double v = b[ii];
        for (std::size_t k = ii + 1; k < n; ++k) v -= l.at(k, ii) * b[k];
        b[ii] = v / l.at(ii, ii);
    }
    return b;
}

}  // namespace

void GaussianProblem::validate() const {
    if (!(beta > 0.0) || !std::isfinite(beta)) {
        throw ArgumentError("GaussianProblem: beta must be a finite positive real");
    }
    if (!(gamma > 0.0) || !std::isfinite(gamma)) {
        throw ArgumentError("GaussianProblem: gamma must be a finite positive real");
    }
    if (n < 1) {
        throw ArgumentError("GaussianProblem: n must be a positive integer");
    }
}

GaussianCovariance gaussian_joint_covariance(const GaussianProblem& p, int ceiling) {
    p.validate();
    if (p.n > ceiling) {
        throw ResourceError("gaussian_joint_covariance: n = " + std::to_string(p.n) +
                            " exceeds the dense-matrix ceiling of " + std::to_string(ceiling));
    }
    const double b = p.beta, g = p.gamma;
    const double n = static_cast<double>(p.n);
    const double w_var = (n * g * b + n * b + g * g) / (2.0 * n * (1.0 + g) * (1.0 + g) * b);
    const double wz_cov = g / (2.0 * n * b * (1.0 + g));
    const double z_var = 1.0 / (2.0 * b);

    GaussianCovariance cov;
    cov.dim = static_cast<std::size_t>(p.n) + 1;
    cov.sigma = SymmetricMatrix(cov.dim);
    cov.sigma.at(0, 0) = w_var;
    for (std::size_t j = 1; j < cov.dim; ++j) {
        cov.sigma.at(0, j) = wz_cov;
        cov.sigma.at(j, 0) = wz_cov;
        cov.sigma.at(j, j) = z_var;
    }
    cov.sigma_indep = cov.sigma;
    for (std::size_t j = 1; j < cov.dim; ++j) {
        cov.sigma_indep.at(0, j) = 0.0;
        cov.sigma_indep.at(j, 0) = 0.0;
    }
    return cov;
}

GaussianCovariance gaussian_individual_covariance(const GaussianProblem& p) {
    p.validate();
    const double b = p.beta, g = p.gamma;
    const double n = static_cast<double>(p.n);
    GaussianCovariance cov;
    cov.dim = 2;
    cov.sigma = SymmetricMatrix(2);
    cov.sigma.at(0, 0) = (n * g * b + n * b + g * g) / (2.0 * n * (1.0 + g) * (1.0 + g) * b);
    cov.sigma.at(0, 1) = cov.sigma.at(1, 0) = g / (2.0 * n * b * (1.0 + g));
    cov.sigma.at(1, 1) = 1.0 / (2.0 * b);
    cov.sigma_indep = cov.sigma;
    cov.sigma_indep.at(0, 1) = cov.sigma_indep.at(1, 0) = 0.0;
    return cov;
}

double gaussian_skl_trace(const GaussianCovariance& cov) {
    if (cov.dim < 2 || cov.sigma.dim != cov.dim || cov.sigma_indep.dim != cov.dim) {
        throw ArgumentError("gaussian_skl_trace: covariance pair must share dimension >= 2");
    }
    // The decoupled matrix must differ from sigma only in the first row and
    // column; that structure is what makes the trace reduce to one solve.
    for (std::size_t i = 1; i < cov.dim; ++i) {
        for (std::size_t j = 1; j < cov.dim; ++j) {
            if (cov.sigma.at(i, j) != cov.sigma_indep.at(i, j)) {
                throw ArgumentError("gaussian_skl_trace: sigma_indep may differ from sigma only in the W row/column");
            }
        }
    }
    // (1/2) tr(Sigma^{-1} Sigma_indep - I) = (1/2) tr(Sigma^{-1} (Sigma_indep - Sigma))
    // with the difference supported on the W row/column, so only the first
    // column of Sigma^{-1} is needed.
    const auto l = cholesky(cov.sigma);
    std::vector<double> e0(cov.dim, 0.0);
    e0[0] = 1.0;
    const auto x = cholesky_solve(l, std::move(e0));
    double acc = 0.0;
    for (std::size_t j = 1; j < cov.dim; ++j) {
        acc += (cov.sigma.at(0, j) - cov.sigma_indep.at(0, j)) * x[j];
    }
    return -acc;
}

GaussianReport gaussian_closed_forms(const GaussianProblem& p) {
    p.validate();
    const double b = p.beta, g = p.gamma;
    const double n = static_cast<double>(p.n);
    const double d = n * n * b * (1.0 + g) + g * g * (n - 1.0);

    GaussianReport r;
    r.skl_joint = g * g / (n * b * (1.0 + g));
    r.skl_individual = g * g / d;
    r.mutual_joint = 0.5 * std::log1p(g * g / (n * b * (1.0 + g)));
    r.mutual_individual = 0.5 * std::log1p(g * g / d);
    r.gap = n * r.skl_individual - r.skl_joint;
    r.jensen_gap = [p](double w, double z) { return gaussian_jensen_gap(p, w, z); };
    return r;
}

JensenGapTerms gaussian_jensen_gap_terms(const GaussianProblem& p) {
    p.validate();
    if (p.n < 2) {
        throw ArgumentError("gaussian_jensen_gap: needs n >= 2, the complement dataset is empty at n = 1");
    }
    const double b = p.beta, g = p.gamma;
    const double n = static_cast<double>(p.n);
    const double d = n * n * b * (1.0 + g) + g * g * (n - 1.0);
    // Shared bracket of the three quadratic terms,
    // 1 - n^2 (1+g) b / d = (n-1) g^2 / d, written cancellation-free.
    const double bracket = (n - 1.0) * g * g / d;

    JensenGapTerms t;
    t.log_norm_mixture =
        std::log(std::sqrt(n * n * (1.0 + g) * (1.0 + g) * b / (std::numbers::pi * d)));
    t.log_norm_posterior = -std::log(std::sqrt((1.0 + g) / std::numbers::pi));
    t.variance_constant = (n - 1.0) / (n * n) * (g * g / (1.0 + g)) / (2.0 * b);
    t.w2 = (1.0 + g) * bracket;
    t.wz = -(2.0 * g / n) * bracket;
    t.z2 = g * g / (n * n * (1.0 + g)) * bracket;
    return t;
}

double gaussian_jensen_gap(const GaussianProblem& p, double w, double z) {
    const auto t = gaussian_jensen_gap_terms(p);
    return t.log_norm_mixture + t.log_norm_posterior + t.variance_constant + t.w2 * w * w +
           t.wz * w * z + t.z2 * z * z;
}

}  // namespace gibbslab::gaussian
