#pragma once

#include <Eigen/Dense>

#include "gdkl/dataset.hpp"
#include "gdkl/errors.hpp"

namespace gdkl {

struct CholeskyFactor {
    Eigen::MatrixXd lower;
    double jitter_used = 0.0;
};

// Cholesky factorization of a symmetric matrix, retrying with diagonal
// jitter base_jitter * 10^k for k = 0..6 when the plain factorization
// fails. Throws NotPositiveDefinite after the ladder is exhausted.
CholeskyFactor cholesky_with_jitter(const Eigen::MatrixXd& k, double base_jitter = 1e-8);

// Solve (L L^T) x = b via forward/back substitution.
Eigen::MatrixXd chol_solve(const Eigen::MatrixXd& lower, const Eigen::MatrixXd& b);

struct GaussianPosterior {
    Eigen::MatrixXd mean;      // n* x c
    Eigen::MatrixXd variance;  // n* x c
};

// Exact GP posterior at test points under a zero-mean prior.
//   mean  = k*^T (K + D)^-1 y
//   var   = k** - k*^T (K + D)^-1 k*
// D is noise_var per point/output when train.noise_var is set, otherwise
// noise_var * I shared across outputs.
GaussianPosterior posterior_predictive(const Dataset& train, const Eigen::MatrixXd& k,
                                       const Eigen::MatrixXd& k_star,
                                       const Eigen::VectorXd& k_starstar, double noise_var);

// Sum over output columns of log N(y_col | 0, K + D).
double log_marginal_likelihood(const Dataset& train, const Eigen::MatrixXd& k, double noise_var);

}  // namespace gdkl
