#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace reca {

/// Dense row-major binary matrix, 64 columns per word. Padding bits past
/// cols() in each row are kept zero.
class BitMatrix {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), stride_((cols + kWordBits - 1) / kWordBits),
          words_(rows * stride_, 0) {}

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] std::size_t words_per_row() const noexcept { return stride_; }

    [[nodiscard]] bool get(std::size_t r, std::size_t c) const noexcept {
        return ((words_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1u) != 0;
    }
    void set(std::size_t r, std::size_t c, bool value) noexcept {
        Word& w = words_[r * stride_ + c / kWordBits];
        const Word mask = Word{1} << (c % kWordBits);
        w = value ? (w | mask) : (w & ~mask);
    }

    [[nodiscard]] std::span<const Word> row(std::size_t r) const noexcept {
        return {words_.data() + r * stride_, stride_};
    }
    [[nodiscard]] std::span<Word> row(std::size_t r) noexcept {
        return {words_.data() + r * stride_, stride_};
    }

    [[nodiscard]] std::size_t row_count_ones(std::size_t r) const noexcept {
        std::size_t n = 0;
        for (Word w : row(r))
            n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }

    /// Sets every valid bit of row r.
    void fill_row(std::size_t r) noexcept {
        auto dst = row(r);
        for (auto& w : dst)
            w = ~Word{0};
        if (const std::size_t used = cols_ % kWordBits; used != 0 && stride_ > 0)
            dst[stride_ - 1] = (Word{1} << used) - 1;
    }

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<Word> words_;
};

/// Calls fn(index) for every set bit of a packed word range, ascending.
template <class Fn>
void for_each_set_bit(std::span<const BitMatrix::Word> words, Fn&& fn) {
    for (std::size_t w = 0; w < words.size(); ++w) {
        BitMatrix::Word bits = words[w];
        while (bits != 0) {
            const auto b = static_cast<std::size_t>(std::countr_zero(bits));
            fn(w * BitMatrix::kWordBits + b);
            bits &= bits - 1;
        }
    }
}

} // namespace reca
