#include <doctest.h>

#include <random>
#include <stdexcept>

#include "reca/kernels.hpp"

using namespace reca;

namespace {

BitMatrix random_matrix(std::mt19937_64& g, std::size_t rows, std::size_t cols, double density) {
    std::bernoulli_distribution d(density);
    BitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m.set(r, c, d(g));
    return m;
}

BitMatrix transposed(const BitMatrix& m) {
    BitMatrix t(m.cols(), m.rows());
    kernels::transpose_into(m, t);
    return t;
}

} // namespace

TEST_SUITE("kernels") {

TEST_CASE("parallel transpose matches the serial reference") {
    std::mt19937_64 g(1);
    for (auto [rows, cols] : {std::pair{1, 1}, {63, 65}, {64, 64}, {130, 7}, {7, 200}}) {
        const auto m = random_matrix(g, static_cast<std::size_t>(rows), static_cast<std::size_t>(cols), 0.4);
        BitMatrix a(m.cols(), m.rows()), b(m.cols(), m.rows());
        kernels::transpose_into(m, a);
        kernels::transpose_into_reference(m, b);
        CHECK(a == b);
        CHECK(transposed(a) == m);
    }
}

TEST_CASE("popcount gram and cross match the naive accumulation") {
    std::mt19937_64 g(2);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = 1 + g() % 150, p = 1 + g() % 70, q = 1 + g() % 4;
        const auto x = random_matrix(g, n, p, 0.3 + 0.05 * trial);
        const auto y = random_matrix(g, n, q, 0.5);
        const auto xc = transposed(x);
        CHECK(kernels::gram(xc) == kernels::gram_reference(x));
        CHECK(kernels::cross(xc, transposed(y)) == kernels::cross_reference(x, y));
    }
}

TEST_CASE("affine_apply matches the dense product") {
    std::mt19937_64 g(3);
    std::normal_distribution<double> w(0.0, 1.0);
    const auto x = random_matrix(g, 97, 130, 0.5);
    Eigen::MatrixXd weights(131, 3);
    for (Eigen::Index i = 0; i < weights.size(); ++i)
        weights.data()[i] = w(g);
    const Eigen::MatrixXd a = kernels::affine_apply(x, weights);
    const Eigen::MatrixXd b = kernels::affine_apply_reference(x, weights);
    CHECK((a - b).cwiseAbs().maxCoeff() < 1e-12);
    CHECK_THROWS_AS(kernels::affine_apply(x, Eigen::MatrixXd::Zero(5, 3)), std::invalid_argument);
}

TEST_CASE("fill_row sets exactly the valid bits") {
    BitMatrix m(2, 70);
    m.fill_row(1);
    CHECK(m.row_count_ones(1) == 70);
    CHECK(m.row_count_ones(0) == 0);
}

}
