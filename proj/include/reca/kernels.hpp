#pragma once

// Data-parallel kernels behind the readout. Each OpenMP kernel has a serial
// reference used by the unit tests and by the benchmark.

#include <Eigen/Dense>

#include "reca/bit_matrix.hpp"

namespace reca::kernels {

/// Writes the transpose of `in` into the first in.cols() rows of `out`.
/// out.cols() must equal in.rows(); extra rows of `out` are left untouched.
void transpose_into(const BitMatrix& in, BitMatrix& out);
void transpose_into_reference(const BitMatrix& in, BitMatrix& out);

/// G(i,j) = number of samples where columns i and j are both 1, with the
/// columns given as the rows of `columns`.
Eigen::MatrixXd gram(const BitMatrix& columns);
/// Naive accumulation over samples of the row-major design `design`.
Eigen::MatrixXd gram_reference(const BitMatrix& design);

/// C(i,k) = number of samples where column i and target k are both 1.
Eigen::MatrixXd cross(const BitMatrix& columns, const BitMatrix& target_columns);
Eigen::MatrixXd cross_reference(const BitMatrix& design, const BitMatrix& targets);

/// out(n,k) = weights(F,k) + sum over set bits f of row n of weights(f,k),
/// where F = design.cols() is the intercept row.
Eigen::MatrixXd affine_apply(const BitMatrix& design, const Eigen::MatrixXd& weights);
Eigen::MatrixXd affine_apply_reference(const BitMatrix& design, const Eigen::MatrixXd& weights);

} // namespace reca::kernels
