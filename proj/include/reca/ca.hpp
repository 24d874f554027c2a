#pragma once

// Elementary (two-state, three-neighbor) cellular automata on a ring.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace reca {

// Cells of a neighborhood are weighted left=4, center=2, right=1; bit n of the
// Wolfram rule number is the output for neighborhood n.
class Rule {
public:
    explicit Rule(int number);

    static Rule from_table(const std::array<std::uint8_t, 8>& table);

    [[nodiscard]] int number() const noexcept { return number_; }
    [[nodiscard]] bool output(unsigned neighborhood) const noexcept {
        return ((number_ >> (neighborhood & 7u)) & 1u) != 0;
    }
    [[nodiscard]] std::array<std::uint8_t, 8> table() const noexcept;

    friend bool operator==(Rule, Rule) = default;

private:
    std::uint8_t number_;
};

Rule make_rule(int number);

/// Fraction of the eight transitions whose output is the live state (1).
double lambda_param(Rule rule) noexcept;

/// Rule obtained by swapping the roles of left and right neighbors.
Rule mirror_rule(Rule rule) noexcept;

/// Rule obtained by exchanging 0 and 1 everywhere (inputs and output).
Rule complement_rule(Rule rule) noexcept;

/// Fixed-width ring of binary cells, packed 64 per word. Cell i lives in bit
/// i % 64 of word i / 64; bits past the width are always zero.
class CAState {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    CAState() = default;
    explicit CAState(std::size_t width);

    /// Throws if any entry is not 0 or 1.
    static CAState from_bits(std::span<const std::uint8_t> bits);

    [[nodiscard]] std::size_t width() const noexcept { return width_; }
    [[nodiscard]] bool get(std::size_t i) const noexcept {
        return ((words_[i / kWordBits] >> (i % kWordBits)) & 1u) != 0;
    }
    void set(std::size_t i, bool value) noexcept {
        const Word mask = Word{1} << (i % kWordBits);
        if (value)
            words_[i / kWordBits] |= mask;
        else
            words_[i / kWordBits] &= ~mask;
    }

    [[nodiscard]] std::span<const Word> words() const noexcept { return words_; }
    [[nodiscard]] std::span<Word> words() noexcept { return words_; }

    [[nodiscard]] std::vector<std::uint8_t> to_bits() const;
    [[nodiscard]] std::size_t count_ones() const noexcept;

    /// Spatial reversal: cell i moves to width-1-i. Ring adjacency is kept.
    [[nodiscard]] CAState reversed() const;
    /// Every cell flipped.
    [[nodiscard]] CAState inverted() const;

    friend bool operator==(const CAState&, const CAState&) = default;

private:
    std::size_t width_ = 0;
    std::vector<Word> words_;
};

/// One synchronous update with wrap-around boundary (word-parallel).
CAState step(const CAState& state, Rule rule);

/// Same as step() but writes into `out`, reusing its storage. `out` must not
/// alias `state`.
void step_into(const CAState& state, Rule rule, CAState& out);

/// Naive per-cell table lookup. Kept as the oracle for step().
CAState step_reference(const CAState& state, Rule rule);

/// The `iterations` states following `state`; the seed itself is excluded.
std::vector<CAState> evolve(const CAState& state, Rule rule, int iterations);

} // namespace reca
