#include "reca/kernels.hpp"

#include <stdexcept>

namespace reca::kernels {

namespace {

using Word = BitMatrix::Word;
constexpr std::size_t kBits = BitMatrix::kWordBits;

void check_transpose_shape(const BitMatrix& in, const BitMatrix& out) {
    if (out.cols() != in.rows() || out.rows() < in.cols())
        throw std::invalid_argument("transpose target has the wrong shape");
}

std::size_t and_popcount(std::span<const Word> a, std::span<const Word> b) noexcept {
    std::size_t n = 0;
    for (std::size_t w = 0; w < a.size(); ++w)
        n += static_cast<std::size_t>(std::popcount(a[w] & b[w]));
    return n;
}

} // namespace

void transpose_into(const BitMatrix& in, BitMatrix& out) {
    check_transpose_shape(in, out);
    const auto blocks = static_cast<std::ptrdiff_t>(in.words_per_row());
    // Each block owns 64 output rows, so writes never collide.
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t blk = 0; blk < blocks; ++blk) {
        const std::size_t base = static_cast<std::size_t>(blk) * kBits;
        for (std::size_t r = 0; r < in.rows(); ++r) {
            Word bits = in.row(r)[static_cast<std::size_t>(blk)];
            while (bits != 0) {
                const auto b = static_cast<std::size_t>(std::countr_zero(bits));
                out.set(base + b, r, true);
                bits &= bits - 1;
            }
        }
    }
}

void transpose_into_reference(const BitMatrix& in, BitMatrix& out) {
    check_transpose_shape(in, out);
    for (std::size_t r = 0; r < in.rows(); ++r)
        for (std::size_t c = 0; c < in.cols(); ++c)
            out.set(c, r, in.get(r, c));
}

Eigen::MatrixXd gram(const BitMatrix& columns) {
    const auto p = static_cast<std::ptrdiff_t>(columns.rows());
    Eigen::MatrixXd g(p, p);
#pragma omp parallel for schedule(dynamic, 8)
    for (std::ptrdiff_t i = 0; i < p; ++i) {
        const auto a = columns.row(static_cast<std::size_t>(i));
        for (std::ptrdiff_t j = i; j < p; ++j) {
            const auto v = static_cast<double>(and_popcount(a, columns.row(static_cast<std::size_t>(j))));
            g(i, j) = v;
            g(j, i) = v;
        }
    }
    return g;
}

Eigen::MatrixXd gram_reference(const BitMatrix& design) {
    const auto p = static_cast<Eigen::Index>(design.cols());
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(p, p);
    for (std::size_t n = 0; n < design.rows(); ++n)
        for (Eigen::Index i = 0; i < p; ++i) {
            const double xi = design.get(n, static_cast<std::size_t>(i)) ? 1.0 : 0.0;
            for (Eigen::Index j = 0; j < p; ++j)
                g(i, j) += xi * (design.get(n, static_cast<std::size_t>(j)) ? 1.0 : 0.0);
        }
    return g;
}

Eigen::MatrixXd cross(const BitMatrix& columns, const BitMatrix& target_columns) {
    if (columns.cols() != target_columns.cols())
        throw std::invalid_argument("feature and target sample counts differ");
    const auto p = static_cast<std::ptrdiff_t>(columns.rows());
    const auto q = static_cast<Eigen::Index>(target_columns.rows());
    Eigen::MatrixXd c(p, q);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < p; ++i)
        for (Eigen::Index k = 0; k < q; ++k)
            c(i, k) = static_cast<double>(and_popcount(columns.row(static_cast<std::size_t>(i)),
                                                       target_columns.row(static_cast<std::size_t>(k))));
    return c;
}

Eigen::MatrixXd cross_reference(const BitMatrix& design, const BitMatrix& targets) {
    if (design.rows() != targets.rows())
        throw std::invalid_argument("feature and target sample counts differ");
    const auto p = static_cast<Eigen::Index>(design.cols());
    const auto q = static_cast<Eigen::Index>(targets.cols());
    Eigen::MatrixXd c = Eigen::MatrixXd::Zero(p, q);
    for (std::size_t n = 0; n < design.rows(); ++n)
        for (Eigen::Index i = 0; i < p; ++i)
            for (Eigen::Index k = 0; k < q; ++k)
                if (design.get(n, static_cast<std::size_t>(i)) &&
                    targets.get(n, static_cast<std::size_t>(k)))
                    c(i, k) += 1.0;
    return c;
}

Eigen::MatrixXd affine_apply(const BitMatrix& design, const Eigen::MatrixXd& weights) {
    const auto f = static_cast<Eigen::Index>(design.cols());
    if (weights.rows() != f + 1)
        throw std::invalid_argument("weight rows must equal feature count + 1");
    const Eigen::Index q = weights.cols();
    // Row-major copy so the q outputs of one feature sit together.
    const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> w = weights;
    const auto n = static_cast<std::ptrdiff_t>(design.rows());
    Eigen::MatrixXd out(n, q);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t r = 0; r < n; ++r) {
        Eigen::RowVectorXd acc = w.row(f);
        for_each_set_bit(design.row(static_cast<std::size_t>(r)),
                         [&](std::size_t c) { acc += w.row(static_cast<Eigen::Index>(c)); });
        out.row(r) = acc;
    }
    return out;
}

Eigen::MatrixXd affine_apply_reference(const BitMatrix& design, const Eigen::MatrixXd& weights) {
    const auto f = static_cast<Eigen::Index>(design.cols());
    if (weights.rows() != f + 1)
        throw std::invalid_argument("weight rows must equal feature count + 1");
    Eigen::MatrixXd x(static_cast<Eigen::Index>(design.rows()), f + 1);
    for (std::size_t r = 0; r < design.rows(); ++r) {
        for (Eigen::Index c = 0; c < f; ++c)
            x(static_cast<Eigen::Index>(r), c) = design.get(r, static_cast<std::size_t>(c)) ? 1.0 : 0.0;
        x(static_cast<Eigen::Index>(r), f) = 1.0;
    }
    return x * weights;
}

} // namespace reca::kernels
