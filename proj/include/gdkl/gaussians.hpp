#pragma once

#include <cmath>
#include <numbers>

#include "gdkl/errors.hpp"

namespace gdkl {

inline constexpr double log_2pi = 1.8378770664093454836;

// softplus and its inverse; used everywhere a positive hyperparameter is
// stored as an unconstrained real
inline double softplus(double x) {
    return x > 0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x));
}

inline double inv_softplus(double y) {
    if (y <= 0) throw DomainError("inv_softplus: argument must be positive");
    // log(expm1(y)), stable for large y
    return y > 30 ? y : std::log(std::expm1(y));
}

inline double sigmoid(double x) {
    return x >= 0 ? 1.0 / (1.0 + std::exp(-x)) : std::exp(x) / (1.0 + std::exp(x));
}

// D_KL[ N(mq, vq) || N(mp, vp) ]
inline double kl_gaussians(double mq, double vq, double mp, double vp) {
    if (vq <= 0 || vp <= 0) throw NonPositiveVariance("kl_gaussians: variances must be positive");
    const double dm = mq - mp;
    return 0.5 * std::log(vp / vq) + (vq + dm * dm) / (2.0 * vp) - 0.5;
}

// E_{f ~ N(mq, vq)}[ -log N(y | f, noise_var) ]
inline double expected_nll_gaussian(double mq, double vq, double y, double noise_var) {
    if (vq <= 0 || noise_var <= 0)
        throw NonPositiveVariance("expected_nll_gaussian: variances must be positive");
    const double r = y - mq;
    return 0.5 * (log_2pi + std::log(noise_var) + (r * r + vq) / noise_var);
}

// log N(y | mean, var_latent + noise_var)
inline double gaussian_marginal_ll(double mean, double var_latent, double noise_var, double y) {
    const double v = var_latent + noise_var;
    if (v <= 0) throw NonPositiveVariance("gaussian_marginal_ll: total variance must be positive");
    const double r = y - mean;
    return -0.5 * (log_2pi + std::log(v) + r * r / v);
}

}  // namespace gdkl
