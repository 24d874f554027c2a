#pragma once

// 5-bit memory task. Time steps are 1-based in the comments below, 0-based
// in the vectors.
//
//   steps 1..5          input  [b, !b, 0, 0]   b = bit (5-t) of pattern_id
//   steps 6..T          input  [0, 0, 1, 0]    distractor
//   step  T_d+5         input  [0, 0, 0, 1]    cue
//   steps 1..T_d+5      target [0, 0, 1]
//   steps T_d+6..T      target replays the input pairs of steps 1..5
//
// with T = T_d + 10.

#include <cstddef>
#include <vector>

#include "reca/encoder.hpp"

namespace reca {

inline constexpr int kTaskInputWidth = 4;
inline constexpr int kTaskOutputWidth = 3;
inline constexpr int kTaskPatternCount = 32;
inline constexpr int kTaskMessageLength = 5;

struct TaskSequence {
    int pattern_id = 0;
    int distractor = 0;
    std::vector<BitVector> inputs;
    std::vector<BitVector> targets;

    [[nodiscard]] std::size_t length() const noexcept { return inputs.size(); }
    /// 1-based step at which the cue is raised.
    [[nodiscard]] int cue_step() const noexcept { return distractor + kTaskMessageLength; }
};

TaskSequence generate_task(int pattern_id, int distractor);

/// Sequences for pattern ids 0..31, in order.
std::vector<TaskSequence> all_patterns(int distractor);

struct EvaluationResult {
    std::size_t total_bits = 0;
    std::size_t correct_bits = 0;
    bool success = false;

    [[nodiscard]] double accuracy() const noexcept {
        return total_bits == 0 ? 0.0
                               : static_cast<double>(correct_bits) / static_cast<double>(total_bits);
    }
    friend bool operator==(const EvaluationResult&, const EvaluationResult&) = default;
};

/// predicted[s][t] is the 3-bit output for step t of tasks[s].
EvaluationResult evaluate(const std::vector<std::vector<BitVector>>& predicted,
                          const std::vector<TaskSequence>& tasks);

} // namespace reca
