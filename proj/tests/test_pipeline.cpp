#include <doctest.h>

#include <stdexcept>

#include "reca/pipeline.hpp"

using namespace reca;

namespace {

RunConfig single(int rule, int iterations, int mappings, std::uint64_t seed = 1) {
    RunConfig c;
    c.layer1 = {Rule(rule), iterations, mappings, 40, kTaskInputWidth};
    c.run_seed = seed;
    return c;
}

RunConfig layered(int rule, int iterations, int mappings, std::uint64_t seed = 1) {
    RunConfig c = single(rule, iterations, mappings, seed);
    c.layer2 = c.layer1;
    c.layer2->input_width = kTaskOutputWidth;
    return c;
}

} // namespace

TEST_SUITE("pipeline") {

TEST_CASE("quiescent rule cannot solve the task") {
    const auto res = run_single(single(0, 4, 4));
    CHECK_FALSE(res.layer1.success);
    CHECK(res.layer1.total_bits == 20160);
    CHECK_FALSE(res.layer2);
}

TEST_CASE("rule 90 at (8,8) solves the task") {
    CHECK(run_single(single(90, 8, 8)).layer1.success);
}

TEST_CASE("rule 180 at (4,4) fails") {
    CHECK_FALSE(run_single(single(180, 4, 4)).layer1.success);
}

TEST_CASE("runs are reproducible") {
    const auto a = run_layered(layered(165, 4, 4, 9));
    const auto b = run_layered(layered(165, 4, 4, 9));
    CHECK(a.layer1 == b.layer1);
    CHECK(a.layer2 == b.layer2);
}

TEST_CASE("layer 1 inside a layered run equals the single run") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed)
        CHECK(run_layered(layered(165, 4, 4, seed)).layer1 == run_single(single(165, 4, 4, seed)).layer1);
}

TEST_CASE("identity second layer passes a perfect first layer through") {
    RunConfig c = single(90, 8, 8);
    c.layer2 = ReservoirParams{Rule(204), 1, 1, 40, kTaskOutputWidth};
    const auto res = run_layered(c);
    REQUIRE(res.layer1.success);
    CHECK(res.layer2->success);
}

TEST_CASE("layer 2 is fed 3-bit binarized layer-1 outputs") {
    const auto tasks = all_patterns(20);
    std::vector<std::vector<BitVector>> inputs;
    for (const auto& t : tasks)
        inputs.push_back(t.inputs);
    const ReservoirParams p{Rule(90), 2, 4, 40, kTaskInputWidth};
    const auto out = run_layer(inputs, tasks, p, generate_mappings(p.encoder(mapping_seed(3, 1))));
    REQUIRE(out.predictions.size() == 32);
    for (const auto& seq : out.predictions) {
        CHECK(seq.size() == 30);
        for (const auto& row : seq) {
            CHECK(row.size() == 3);
            for (auto b : row)
                CHECK(b <= 1);
        }
    }
}

TEST_CASE("layer seeds are independent") {
    for (std::uint64_t s = 0; s < 100; ++s) {
        CHECK(mapping_seed(s, 1) != mapping_seed(s, 2));
        CHECK(mapping_seed(s, 1) != mapping_seed(s + 1, 1));
    }
}

TEST_CASE("trainable parameters per output") {
    CHECK(single(90, 8, 8).layer1.feature_length() == 2560);
}

TEST_CASE("config validation") {
    RunConfig c = single(90, 2, 2);
    c.layer1.input_width = 3;
    CHECK_THROWS_AS(run(c), std::invalid_argument);
    c = layered(90, 2, 2);
    c.layer2->input_width = 4;
    CHECK_THROWS_AS(run(c), std::invalid_argument);
    CHECK_THROWS_AS(run_single(layered(90, 2, 2)), std::invalid_argument);
    CHECK_THROWS_AS(run_layered(single(90, 2, 2)), std::invalid_argument);
    c = single(90, 2, 2);
    c.distractor = 0;
    CHECK_THROWS_AS(run(c), std::invalid_argument);
}

TEST_CASE("batch percentages") {
    const auto one = run_batch(single(90, 2, 4, 17), 1);
    CHECK((one.layer1_percent() == 0.0 || one.layer1_percent() == 100.0));
    CHECK_FALSE(one.layer2_percent());

    const auto b = run_batch(layered(90, 2, 4, 1), 6);
    CHECK(b.runs == 6);
    REQUIRE(b.layer2_successes);
    int l1 = 0;
    for (std::uint64_t s = 1; s <= 6; ++s)
        l1 += run_single(single(90, 2, 4, s)).layer1.success;
    CHECK(b.layer1_successes == l1);
    CHECK_THROWS_AS(run_batch(single(90, 2, 4), 0), std::invalid_argument);
}

}
