#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <limits>
#include <random>

#include "oracle.hpp"
#include "reca/encoder.hpp"
#include "reca/readout.hpp"

using namespace reca;

namespace {

struct Batch {
    std::vector<oracle::Bits> x, y;
    TrainingBatch packed;
};

Batch make_batch(std::vector<oracle::Bits> x, std::vector<oracle::Bits> y) {
    Batch b{std::move(x), std::move(y), {}};
    b.packed.features = BitMatrix(b.x.size(), b.x[0].size());
    b.packed.targets = BitMatrix(b.y.size(), b.y[0].size());
    for (std::size_t r = 0; r < b.x.size(); ++r) {
        for (std::size_t c = 0; c < b.x[r].size(); ++c)
            b.packed.features.set(r, c, b.x[r][c] != 0);
        for (std::size_t c = 0; c < b.y[r].size(); ++c)
            b.packed.targets.set(r, c, b.y[r][c] != 0);
    }
    return b;
}

Batch random_batch(std::mt19937_64& g, std::size_t n, std::size_t f, std::size_t q) {
    std::vector<oracle::Bits> x, y;
    for (std::size_t r = 0; r < n; ++r) {
        x.push_back(oracle::random_bits(g, f));
        y.push_back(oracle::random_bits(g, q));
    }
    return make_batch(std::move(x), std::move(y));
}

double sse(const Eigen::MatrixXd& w, const Batch& b) {
    double s = 0.0;
    for (std::size_t r = 0; r < b.x.size(); ++r) {
        oracle::Dense dense(static_cast<std::size_t>(w.rows()), std::vector<double>(static_cast<std::size_t>(w.cols())));
        for (Eigen::Index i = 0; i < w.rows(); ++i)
            for (Eigen::Index k = 0; k < w.cols(); ++k)
                dense[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = w(i, k);
        const auto p = oracle::affine_predict(dense, b.x[r]);
        for (std::size_t k = 0; k < p.size(); ++k)
            s += (p[k] - b.y[r][k]) * (p[k] - b.y[r][k]);
    }
    return s;
}

} // namespace

TEST_SUITE("readout") {

TEST_CASE("zero targets give zero predictions") {
    std::mt19937_64 g(1);
    auto b = random_batch(g, 30, 10, 2);
    for (auto& row : b.y)
        std::fill(row.begin(), row.end(), 0);
    b = make_batch(b.x, b.y);
    const auto m = fit(b.packed);
    CHECK(m.weights().cwiseAbs().maxCoeff() == 0.0);
    CHECK(m.predict(b.packed.features).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("one-hot rows are interpolated") {
    std::vector<oracle::Bits> x, y;
    for (std::size_t i = 0; i < 8; ++i) {
        oracle::Bits row(8, 0);
        row[i] = 1;
        x.push_back(row);
        y.push_back({static_cast<std::uint8_t>(i & 1), static_cast<std::uint8_t>((i >> 1) & 1),
                     static_cast<std::uint8_t>((i >> 2) & 1)});
    }
    const auto b = make_batch(x, y);
    const auto pred = fit(b.packed).predict(b.packed.features);
    for (std::size_t r = 0; r < 8; ++r)
        for (std::size_t k = 0; k < 3; ++k)
            CHECK(pred(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(k)) ==
                  doctest::Approx(b.y[r][k]).epsilon(1e-6));
}

TEST_CASE("random 50x20 batch matches the normal-equations oracle") {
    std::mt19937_64 g(2);
    const auto b = random_batch(g, 50, 20, 3);
    const auto model = fit(b.packed);
    const auto w_oracle = oracle::ridge_normal_equations(b.x, b.y);
    const auto pred = model.predict(b.packed.features);
    for (std::size_t r = 0; r < 50; ++r) {
        const auto expected = oracle::affine_predict(w_oracle, b.x[r]);
        const auto single = model.predict(b.x[r]);
        for (std::size_t k = 0; k < 3; ++k) {
            CHECK(oracle::close_rel(pred(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(k)), expected[k], 1e-6));
            CHECK(oracle::close_rel(single[k], expected[k], 1e-6));
        }
    }
    CHECK(sse(model.weights(), b) <= sse(Eigen::MatrixXd::Zero(21, 3), b));
}

TEST_CASE("fitted weights are least-squares optimal against perturbations") {
    std::mt19937_64 g(3);
    std::normal_distribution<double> noise(0.0, 1e-3);
    for (int trial = 0; trial < 5; ++trial) {
        const auto b = random_batch(g, 80, 15, 2);
        const auto w = fit(b.packed).weights();
        const double best = sse(w, b);
        for (int k = 0; k < 20; ++k) {
            Eigen::MatrixXd other = w;
            for (Eigen::Index i = 0; i < other.size(); ++i)
                other.data()[i] += noise(g);
            CHECK(best <= sse(other, b) + 1e-9);
        }
    }
}

TEST_CASE("predict examples") {
    const ReadoutModel zero(Eigen::MatrixXd::Zero(5, 3));
    CHECK(zero.predict(BitVector{1, 0, 1, 1}) == std::vector<double>{0.0, 0.0, 0.0});

    std::mt19937_64 g(4);
    auto b = random_batch(g, 40, 6, 1);
    for (auto& row : b.y)
        row[0] = 1;
    b = make_batch(b.x, b.y);
    const auto m = fit(b.packed);
    for (int v = 0; v < 64; ++v) {
        BitVector x(6);
        for (int i = 0; i < 6; ++i)
            x[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((v >> i) & 1);
        CHECK(m.predict(x)[0] == doctest::Approx(1.0).epsilon(1e-6));
    }
    CHECK_THROWS_AS((void)m.predict(BitVector{1, 0}), std::invalid_argument);
}

TEST_CASE("predict is additive on disjoint feature sets") {
    std::mt19937_64 g(5);
    const auto b = random_batch(g, 60, 12, 2);
    const auto m = fit(b.packed);
    const BitVector zero(12, 0);
    const auto base = m.predict(zero);
    for (int trial = 0; trial < 20; ++trial) {
        BitVector x(12, 0), y(12, 0), xy(12, 0);
        for (std::size_t i = 0; i < 12; ++i) {
            const auto pick = g() % 3;
            x[i] = pick == 1;
            y[i] = pick == 2;
            xy[i] = pick != 0;
        }
        const auto px = m.predict(x), py = m.predict(y), pxy = m.predict(xy);
        for (std::size_t k = 0; k < 2; ++k)
            CHECK(pxy[k] - base[k] == doctest::Approx((px[k] - base[k]) + (py[k] - base[k])));
    }
}

TEST_CASE("constant and duplicated columns still give a finite solution") {
    std::vector<oracle::Bits> x, y;
    std::mt19937_64 g(6);
    for (int r = 0; r < 40; ++r) {
        auto row = oracle::random_bits(g, 4);
        row.push_back(row[0]); // duplicate
        row.push_back(0);      // never active
        row.push_back(1);      // same as intercept
        x.push_back(row);
        y.push_back({row[1]});
    }
    const auto b = make_batch(x, y);
    const auto m = fit(b.packed);
    CHECK(m.weights().allFinite());
    CHECK(m.weights()(5, 0) == 0.0);
    const auto pred = m.predict(b.packed.features);
    for (int r = 0; r < 40; ++r)
        CHECK(binarize(pred(r, 0)) == b.y[static_cast<std::size_t>(r)][0]);
}

TEST_CASE("binarize") {
    CHECK(binarize(0.49) == 0);
    CHECK(binarize(0.5) == 1);
    CHECK(binarize(-3.2) == 0);
    CHECK(binarize(7.0) == 1);
    CHECK_THROWS_AS(binarize(std::numeric_limits<double>::quiet_NaN()), std::domain_error);
    CHECK_THROWS_AS(binarize(std::numeric_limits<double>::infinity()), std::domain_error);
    double prev = -2.0;
    for (double v = -2.0; v <= 2.0; v += 0.01) {
        CHECK(binarize(prev) <= binarize(v));
        prev = v;
    }
}

TEST_CASE("bad batches are rejected") {
    TrainingBatch empty{BitMatrix(0, 3), BitMatrix(0, 1)};
    CHECK_THROWS_AS(fit(empty), std::invalid_argument);
    TrainingBatch mismatch{BitMatrix(4, 3), BitMatrix(5, 1)};
    CHECK_THROWS_AS(fit(mismatch), std::invalid_argument);
}

}
