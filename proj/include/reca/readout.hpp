#pragma once

// Linear least-squares readout with intercept, fitted on binary features.

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "reca/bit_matrix.hpp"

namespace reca {

/// Ridge added to every diagonal entry of the augmented normal equations is
/// kRidgeScale * trace(A^T A) / (F + 1), A = [features | 1]. Keeps the
/// system positive definite when columns are constant or duplicated.
inline constexpr double kRidgeScale = 1e-8;

struct TrainingBatch {
    BitMatrix features; // N x F
    BitMatrix targets;  // N x Q

    void validate() const;
};

class ReadoutModel {
public:
    ReadoutModel() = default;
    /// weights is (F+1) x Q; the last row is the intercept.
    explicit ReadoutModel(Eigen::MatrixXd weights);

    [[nodiscard]] std::size_t feature_length() const noexcept {
        return static_cast<std::size_t>(weights_.rows()) - 1;
    }
    [[nodiscard]] std::size_t output_width() const noexcept {
        return static_cast<std::size_t>(weights_.cols());
    }
    [[nodiscard]] const Eigen::MatrixXd& weights() const noexcept { return weights_; }

    [[nodiscard]] std::vector<double> predict(std::span<const std::uint8_t> features) const;
    /// One output row per design row.
    [[nodiscard]] Eigen::MatrixXd predict(const BitMatrix& features) const;

private:
    Eigen::MatrixXd weights_;
};

ReadoutModel fit(const TrainingBatch& batch);

/// 0 below 0.5, 1 otherwise. Throws on NaN or infinity.
int binarize(double value);

} // namespace reca
