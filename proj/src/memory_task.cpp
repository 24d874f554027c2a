#include "reca/memory_task.hpp"

#include <stdexcept>
#include <string>

namespace reca {

TaskSequence generate_task(int pattern_id, int distractor) {
    if (pattern_id < 0 || pattern_id >= kTaskPatternCount)
        throw std::out_of_range("pattern id must be in [0,31], got " + std::to_string(pattern_id));
    if (distractor < 1)
        throw std::invalid_argument("distractor period must be at least 1");

    TaskSequence seq;
    seq.pattern_id = pattern_id;
    seq.distractor = distractor;
    const int length = distractor + 2 * kTaskMessageLength;
    const int cue = seq.cue_step();
    seq.inputs.assign(static_cast<std::size_t>(length), BitVector(kTaskInputWidth, 0));
    seq.targets.assign(static_cast<std::size_t>(length), BitVector(kTaskOutputWidth, 0));

    for (int step = 1; step <= length; ++step) {
        auto& in = seq.inputs[static_cast<std::size_t>(step - 1)];
        auto& out = seq.targets[static_cast<std::size_t>(step - 1)];
        if (step <= kTaskMessageLength) {
            const int bit = (pattern_id >> (kTaskMessageLength - step)) & 1;
            in[0] = static_cast<std::uint8_t>(bit);
            in[1] = static_cast<std::uint8_t>(1 - bit);
        } else if (step == cue) {
            in[3] = 1;
        } else {
            in[2] = 1;
        }

        if (step <= cue) {
            out[2] = 1;
        } else {
            const auto& replay = seq.inputs[static_cast<std::size_t>(step - cue - 1)];
            out[0] = replay[0];
            out[1] = replay[1];
        }
    }
    return seq;
}

std::vector<TaskSequence> all_patterns(int distractor) {
    std::vector<TaskSequence> out;
    out.reserve(kTaskPatternCount);
    for (int id = 0; id < kTaskPatternCount; ++id)
        out.push_back(generate_task(id, distractor));
    return out;
}

EvaluationResult evaluate(const std::vector<std::vector<BitVector>>& predicted,
                          const std::vector<TaskSequence>& tasks) {
    if (predicted.size() != tasks.size())
        throw std::invalid_argument("prediction count does not match task count");
    EvaluationResult res;
    for (std::size_t s = 0; s < tasks.size(); ++s) {
        const auto& targets = tasks[s].targets;
        if (predicted[s].size() != targets.size())
            throw std::invalid_argument("prediction length mismatch for sequence " +
                                        std::to_string(s));
        for (std::size_t t = 0; t < targets.size(); ++t) {
            if (predicted[s][t].size() != targets[t].size())
                throw std::invalid_argument("prediction width mismatch");
            for (std::size_t k = 0; k < targets[t].size(); ++k) {
                ++res.total_bits;
                if (predicted[s][t][k] == targets[t][k])
                    ++res.correct_bits;
            }
        }
    }
    res.success = res.correct_bits == res.total_bits;
    return res;
}

} // namespace reca
