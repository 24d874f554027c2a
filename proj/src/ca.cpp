#include "reca/ca.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace reca {

namespace {

void require_width(const CAState& state) {
    if (state.width() < 3)
        throw std::invalid_argument("CA width must be at least 3, got " +
                                    std::to_string(state.width()));
}

CAState::Word tail_mask(std::size_t width) {
    const std::size_t used = width % CAState::kWordBits;
    return used == 0 ? ~CAState::Word{0} : (CAState::Word{1} << used) - 1;
}

} // namespace

Rule::Rule(int number) {
    if (number < 0 || number > 255)
        throw std::out_of_range("rule number must be in [0,255], got " + std::to_string(number));
    number_ = static_cast<std::uint8_t>(number);
}

Rule Rule::from_table(const std::array<std::uint8_t, 8>& table) {
    int number = 0;
    for (unsigned n = 0; n < 8; ++n) {
        if (table[n] > 1)
            throw std::invalid_argument("rule table entries must be 0 or 1");
        number |= table[n] << n;
    }
    return Rule(number);
}

std::array<std::uint8_t, 8> Rule::table() const noexcept {
    std::array<std::uint8_t, 8> t{};
    for (unsigned n = 0; n < 8; ++n)
        t[n] = output(n) ? 1 : 0;
    return t;
}

Rule make_rule(int number) { return Rule(number); }

double lambda_param(Rule rule) noexcept {
    return static_cast<double>(std::popcount(static_cast<unsigned>(rule.number()))) / 8.0;
}

Rule mirror_rule(Rule rule) noexcept {
    std::array<std::uint8_t, 8> t{};
    for (unsigned n = 0; n < 8; ++n) {
        const unsigned swapped = ((n & 1u) << 2) | (n & 2u) | ((n >> 2) & 1u);
        t[n] = rule.output(swapped) ? 1 : 0;
    }
    return Rule::from_table(t);
}

Rule complement_rule(Rule rule) noexcept {
    std::array<std::uint8_t, 8> t{};
    for (unsigned n = 0; n < 8; ++n)
        t[n] = rule.output(~n & 7u) ? 0 : 1;
    return Rule::from_table(t);
}

CAState::CAState(std::size_t width)
    : width_(width), words_((width + kWordBits - 1) / kWordBits, 0) {}

CAState CAState::from_bits(std::span<const std::uint8_t> bits) {
    CAState s(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] > 1)
            throw std::invalid_argument("cell values must be 0 or 1");
        s.set(i, bits[i] != 0);
    }
    return s;
}

std::vector<std::uint8_t> CAState::to_bits() const {
    std::vector<std::uint8_t> out(width_);
    for (std::size_t i = 0; i < width_; ++i)
        out[i] = get(i) ? 1 : 0;
    return out;
}

std::size_t CAState::count_ones() const noexcept {
    std::size_t n = 0;
    for (Word w : words_)
        n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

CAState CAState::reversed() const {
    CAState out(width_);
    for (std::size_t i = 0; i < width_; ++i)
        out.set(width_ - 1 - i, get(i));
    return out;
}

CAState CAState::inverted() const {
    CAState out(*this);
    for (Word& w : out.words_)
        w = ~w;
    if (!out.words_.empty())
        out.words_.back() &= tail_mask(width_);
    return out;
}

void step_into(const CAState& state, Rule rule, CAState& out) {
    require_width(state);
    using Word = CAState::Word;
    const std::size_t width = state.width();
    const auto in = state.words();
    const std::size_t n = in.size();
    if (out.width() != width)
        out = CAState(width);
    auto dst = out.words();

    // Per-minterm masks: rule bit n selects neighborhood n.
    const unsigned number = static_cast<unsigned>(rule.number());
    for (std::size_t w = 0; w < n; ++w) {
        const Word c = in[w];
        const Word l = (c << 1) | (w > 0 ? in[w - 1] >> 63 : Word{0});
        const Word r = (c >> 1) | (w + 1 < n ? in[w + 1] << 63 : Word{0});
        Word acc = 0;
        for (unsigned m = 0; m < 8; ++m) {
            if (((number >> m) & 1u) == 0)
                continue;
            const Word lm = (m & 4u) ? l : ~l;
            const Word cm = (m & 2u) ? c : ~c;
            const Word rm = (m & 1u) ? r : ~r;
            acc |= lm & cm & rm;
        }
        dst[w] = acc;
    }
    dst[n - 1] &= tail_mask(width);

    // The shifted words above see zeros past either end; patch the two
    // cells whose neighborhood wraps.
    auto cell = [&](std::size_t i) { return state.get(i) ? 1u : 0u; };
    const std::size_t last = width - 1;
    out.set(0, rule.output((cell(last) << 2) | (cell(0) << 1) | cell(1)));
    out.set(last, rule.output((cell(last - 1) << 2) | (cell(last) << 1) | cell(0)));
}

CAState step(const CAState& state, Rule rule) {
    CAState out(state.width());
    step_into(state, rule, out);
    return out;
}

CAState step_reference(const CAState& state, Rule rule) {
    require_width(state);
    const std::size_t width = state.width();
    const auto table = rule.table();
    CAState out(width);
    for (std::size_t i = 0; i < width; ++i) {
        const unsigned left = state.get((i + width - 1) % width);
        const unsigned center = state.get(i);
        const unsigned right = state.get((i + 1) % width);
        out.set(i, table[left * 4 + center * 2 + right] != 0);
    }
    return out;
}

std::vector<CAState> evolve(const CAState& state, Rule rule, int iterations) {
    if (iterations < 1)
        throw std::invalid_argument("iterations must be at least 1");
    std::vector<CAState> out;
    out.reserve(static_cast<std::size_t>(iterations));
    out.push_back(step(state, rule));
    for (int k = 1; k < iterations; ++k)
        out.push_back(step(out.back(), rule));
    return out;
}

} // namespace reca
