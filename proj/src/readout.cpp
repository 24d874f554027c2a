#include "reca/readout.hpp"

#include <cmath>
#include <algorithm>
#include <stdexcept>
#include <string>

#include "reca/kernels.hpp"

namespace reca {

void TrainingBatch::validate() const {
    if (features.rows() == 0)
        throw std::invalid_argument("training batch is empty");
    if (features.rows() != targets.rows())
        throw std::invalid_argument("feature and target row counts differ");
    if (targets.cols() == 0)
        throw std::invalid_argument("training batch has no targets");
}

ReadoutModel::ReadoutModel(Eigen::MatrixXd weights) : weights_(std::move(weights)) {
    if (weights_.rows() < 1 || weights_.cols() < 1)
        throw std::invalid_argument("readout weights must be at least 1x1");
    if (!weights_.allFinite())
        throw std::invalid_argument("readout weights must be finite");
}

std::vector<double> ReadoutModel::predict(std::span<const std::uint8_t> features) const {
    if (features.size() != feature_length())
        throw std::invalid_argument("feature vector has " + std::to_string(features.size()) +
                                    " entries, model expects " +
                                    std::to_string(feature_length()));
    const auto f = static_cast<Eigen::Index>(feature_length());
    Eigen::RowVectorXd acc = weights_.row(f);
    for (Eigen::Index i = 0; i < f; ++i) {
        if (features[static_cast<std::size_t>(i)] > 1)
            throw std::invalid_argument("features must be 0 or 1");
        if (features[static_cast<std::size_t>(i)] != 0)
            acc += weights_.row(i);
    }
    return {acc.data(), acc.data() + acc.size()};
}

Eigen::MatrixXd ReadoutModel::predict(const BitMatrix& features) const {
    if (features.cols() != feature_length())
        throw std::invalid_argument("design width does not match the model");
    return kernels::affine_apply(features, weights_);
}

ReadoutModel fit(const TrainingBatch& batch) {
    batch.validate();
    const std::size_t n = batch.features.rows();
    const std::size_t f = batch.features.cols();
    const std::size_t q = batch.targets.cols();

    BitMatrix columns(f + 1, n);
    kernels::transpose_into(batch.features, columns);
    columns.fill_row(f);
    BitMatrix target_columns(q, n);
    kernels::transpose_into(batch.targets, target_columns);

    // Never-active columns get exactly zero weight under the ridge, so they
    // are dropped before forming the normal equations.
    std::vector<std::size_t> active;
    double trace = 0.0;
    for (std::size_t c = 0; c <= f; ++c) {
        const std::size_t ones = columns.row_count_ones(c);
        if (ones != 0) {
            active.push_back(c);
            trace += static_cast<double>(ones);
        }
    }
    BitMatrix compact(active.size(), n);
    for (std::size_t i = 0; i < active.size(); ++i) {
        const auto src = columns.row(active[i]);
        std::copy(src.begin(), src.end(), compact.row(i).begin());
    }

    Eigen::MatrixXd g = kernels::gram(compact);
    const Eigen::MatrixXd rhs = kernels::cross(compact, target_columns);
    const double ridge = kRidgeScale * trace / static_cast<double>(f + 1);
    g.diagonal().array() += ridge;

    Eigen::MatrixXd solution;
    Eigen::LLT<Eigen::MatrixXd> llt(g);
    if (llt.info() == Eigen::Success) {
        solution = llt.solve(rhs);
    } else {
        solution = g.ldlt().solve(rhs);
    }

    Eigen::MatrixXd weights = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(f + 1),
                                                    static_cast<Eigen::Index>(q));
    for (std::size_t i = 0; i < active.size(); ++i)
        weights.row(static_cast<Eigen::Index>(active[i])) = solution.row(static_cast<Eigen::Index>(i));
    return ReadoutModel(std::move(weights));
}

int binarize(double value) {
    if (!std::isfinite(value))
        throw std::domain_error("cannot binarize a non-finite value");
    return value < 0.5 ? 0 : 1;
}

} // namespace reca
