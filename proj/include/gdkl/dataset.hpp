#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "gdkl/errors.hpp"

namespace gdkl {

// Supervised dataset. Regression targets are used as-is; classification
// enters as Dirichlet-transformed per-class targets with per-point
// heteroscedastic noise in noise_var. When noise_var is absent a single
// shared observation variance applies.
struct Dataset {
    Eigen::MatrixXd inputs;                    // n x d
    Eigen::MatrixXd targets;                   // n x c
    std::optional<Eigen::MatrixXd> noise_var;  // n x c, strictly positive

    Eigen::Index n() const { return inputs.rows(); }
    Eigen::Index dim() const { return inputs.cols(); }
    Eigen::Index outputs() const { return targets.cols(); }

    void validate() const;

    Dataset subset(const std::vector<int>& idx) const;

    // content hash of inputs/targets/noise bytes, hex string
    std::string fingerprint() const;
};

}  // namespace gdkl
