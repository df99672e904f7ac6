#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "icecount/boundary.hpp"
#include "icecount/enumerate.hpp"
#include "icecount/grid_state.hpp"
#include "icecount/partition.hpp"

using namespace icecount;

namespace {

std::vector<bool> arrows(const std::string& s, char one) {
    std::vector<bool> out;
    for (char c : s) out.push_back(c == one);
    return out;
}
std::vector<bool> ud(const std::string& s) { return arrows(s, 'U'); }
std::vector<bool> rl(const std::string& s) { return arrows(s, 'R'); }

}  // namespace

TEST_CASE("partition validation and parsing") {
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({}), std::invalid_argument);
    CHECK(Partition::parse("2,2,0") == Partition({2, 2, 0}));
    CHECK_THROWS_AS(Partition::parse("2,x"), std::invalid_argument);
    CHECK(Partition({2, 2, 0}).column_labels() == std::vector<long>{5, 4, 1});
    CHECK(Partition({3, 1, 1}).is_hook());
    CHECK(Partition({4}).is_hook());
    CHECK_FALSE(Partition({3, 2, 0}).is_hook());
    CHECK(Partition({2, 1, 0}).is_staircase());
    CHECK(Partition({4, 2, 1}).is_staircase());
    CHECK_FALSE(Partition({1, 1, 0}).is_staircase());
}

TEST_CASE("boundary_from_partition places top arrows by lambda+rho") {
    SUBCASE("lambda=(2,2,0): up in right-to-left columns 5,4,1") {
        const auto spec = boundary_from_partition(Partition({2, 2, 0}));
        CHECK(spec.rows == 3);
        CHECK(spec.cols == 5);
        CHECK(spec.top == ud("UUDDU"));
        CHECK(spec.bottom == ud("DDDDD"));
        CHECK(spec.left == rl("RRR"));
        CHECK(spec.right == rl("LLL"));
        CHECK(spec.feasible());
        CHECK(spec.partition_model);
    }
    SUBCASE("zero partition gives DWBC") {
        const auto spec = boundary_from_partition(Partition({0, 0, 0}));
        CHECK(spec.cols == 3);
        CHECK(spec.top == ud("UUU"));
    }
    SUBCASE("lambda=(3,0)") {
        const auto spec = boundary_from_partition(Partition({3, 0}));
        CHECK(spec.rows == 2);
        CHECK(spec.cols == 5);
        CHECK(spec.top == ud("UDDDU"));
    }
    SUBCASE("leftmost top arrow is always up") {
        for (long l1 = 0; l1 <= 5; ++l1) {
            const auto spec = boundary_from_partition(Partition({l1, 0}));
            CHECK(spec.top[0]);
        }
    }
}

TEST_CASE("S, T, L and refined boundary builders") {
    const auto s = boundary_S(4, 3);
    CHECK(s.top == ud("UDD"));
    CHECK(s.bottom == ud("DDD"));
    CHECK(s.left == rl("RRRR"));
    CHECK(s.right == rl("RRRL"));
    CHECK(s.feasible());

    const auto t = boundary_T(4, 3);
    CHECK(t.top == ud("DDD"));
    CHECK(t.left == rl("LRRR"));
    CHECK(t.right == rl("RRRL"));
    CHECK(t.feasible());

    const auto l = boundary_L(4, 3, 2);
    CHECK(l.rows == 4);
    CHECK(l.cols == 4);
    CHECK(l.top == ud("UDDD"));
    CHECK(l.right == rl("RLRR"));
    CHECK_THROWS_AS(boundary_L(4, 3, 5), std::invalid_argument);

    const auto single = boundary_L(3, 0, 2);
    CHECK(single.cols == 1);
    CHECK(single.feasible());

    const auto ra = boundary_refined_asm(3, 2);
    CHECK(ra.rows == 2);
    CHECK(ra.cols == 3);
    CHECK(ra.top == ud("UDU"));  // column 2 right-to-left flipped down
    CHECK_THROWS_AS(boundary_refined_asm(3, 4), std::invalid_argument);

    const auto rv = boundary_refined_vsasm(2, 2);
    CHECK(rv.rows == 2);
    CHECK(rv.cols == 2);
    CHECK(rv.top == ud("UD"));
    CHECK(rv.right == rl("RL"));
    CHECK_THROWS_AS(boundary_refined_vsasm(2, 3), std::invalid_argument);
}

TEST_CASE("boundary_R restricts the partition top boundary") {
    // Hook (m,0,...,0): top of the right part is all up across its n-1 columns.
    const auto hook = boundary_R(Partition({3, 0, 0}), 2);
    CHECK(hook.rows == 3);
    CHECK(hook.cols == 2);
    CHECK(hook.top == ud("UU"));
    CHECK(hook.left == rl("RLR"));
    CHECK(hook.right == rl("LLL"));

    // Staircase: the right part's top alternates across its 2n-3 columns.
    const auto stairs = boundary_R(Partition({4, 1, 0}), 1);
    CHECK(stairs.cols == 2 * 3 - 3);
    CHECK(stairs.top == ud("UDU"));

    CHECK_THROWS_AS(boundary_R(Partition({2}), 1), std::invalid_argument);
    CHECK_THROWS_AS(boundary_R(Partition({2, 0}), 3), std::invalid_argument);
}

TEST_CASE("constructor parity feasibility across the paper families") {
    for (int n = 1; n <= 6; ++n)
        for (long l1 = 0; l1 <= 8; ++l1) {
            std::vector<long> parts(static_cast<size_t>(n), 0);
            parts[0] = l1;
            CHECK(boundary_from_partition(Partition(parts)).feasible());
        }
    for (int r = 1; r <= 8; ++r)
        for (int c = 1; c <= 8; ++c) {
            CHECK(boundary_S(r, c).feasible());
            CHECK(boundary_T(r, c).feasible());
        }
    for (int n = 1; n <= 5; ++n)
        for (long m = 0; m <= 4; ++m)
            for (int j = 1; j <= n; ++j) CHECK(boundary_L(n, m, j).feasible());
}

TEST_CASE("translating a partition appends a forced down column") {
    for (const auto& parts : {std::vector<long>{2, 2, 0}, {1, 0}, {3, 1, 1}}) {
        const Partition lambda(parts);
        const auto base = boundary_from_partition(lambda);
        const auto shifted = boundary_from_partition(lambda.translated(1));
        REQUIRE(shifted.cols == base.cols + 1);
        for (int j = 0; j < base.cols; ++j) CHECK(shifted.top[j] == base.top[j]);
        CHECK_FALSE(shifted.top[base.cols]);
    }
}

TEST_CASE("validate_state accepts the 3x5 example state") {
    GridState state{boundary_from_partition(Partition({2, 2, 0})),
                    {ud("UUDDU"), ud("DUDDU"), ud("DDUDD"), ud("DDDDD")},
                    {rl("RLLLLL"), rl("RRLRRL"), rl("RRRLLL")}};
    CHECK(validate_state(state));

    SUBCASE("one flipped internal edge breaks the ice rule") {
        state.vertical[1][1] = !state.vertical[1][1];
        CHECK_FALSE(validate_state(state));
    }
    SUBCASE("dimension mismatch is a distinct error") {
        state.vertical.pop_back();
        CHECK_THROWS_AS(validate_state(state), std::invalid_argument);
    }
}

TEST_CASE("validate_state rejects boundary mismatch") {
    const auto spec = boundary_from_partition(Partition({0, 0}));
    GridState state{spec,
                    std::vector<std::vector<bool>>(3, std::vector<bool>(2, false)),
                    std::vector<std::vector<bool>>(2, std::vector<bool>(3, true))};
    CHECK_FALSE(validate_state(state));
}

TEST_CASE("state_to_asm maps DWBC states to distinct valid ASMs") {
    SUBCASE("n=1") {
        const auto states = enumerate_states(boundary_from_partition(Partition({0})));
        REQUIRE(states.size() == 1);
        CHECK(state_to_asm(states[0]) == std::vector<std::vector<int>>{{1}});
    }
    for (int n = 3; n <= 4; ++n) {
        CAPTURE(n);
        std::vector<long> parts(static_cast<size_t>(n), 0);
        const auto states = enumerate_states(boundary_from_partition(Partition(parts)));
        std::set<std::vector<std::vector<int>>> images;
        for (const auto& s : states) {
            const auto matrix = state_to_asm(s);
            CHECK(is_asm(matrix));
            images.insert(matrix);
        }
        CHECK(images.size() == states.size());  // injective
    }
    SUBCASE("non-DWBC specs are rejected") {
        const auto states = enumerate_states(boundary_from_partition(Partition({1, 0})));
        REQUIRE(!states.empty());
        CHECK_THROWS_AS(state_to_asm(states[0]), std::invalid_argument);
    }
}

TEST_CASE("state JSON round-trips") {
    for (const auto& s : enumerate_states(boundary_from_partition(Partition({2, 0})))) {
        const auto j = state_to_json(s);
        const GridState back = state_from_json(j);
        CHECK(back.spec == s.spec);
        CHECK(back.vertical == s.vertical);
        CHECK(back.horizontal == s.horizontal);
        CHECK(validate_state(back));
    }
}

TEST_CASE("flux: cut r below the top carries n-r up arrows") {
    for (const auto& parts : {std::vector<long>{2, 2, 0}, {3, 1, 0}, {1, 1}}) {
        const Partition lambda(parts);
        const int n = lambda.length();
        for (const auto& s : enumerate_states(boundary_from_partition(lambda))) {
            for (int r = 0; r <= n; ++r) {
                int ups = 0;
                for (bool up : s.vertical[r]) ups += up ? 1 : 0;
                CHECK(ups == n - r);
            }
        }
    }
}

TEST_CASE("ascii rendering covers every edge") {
    const auto states = enumerate_states(boundary_from_partition(Partition({0, 0})));
    REQUIRE(states.size() == 2);
    const std::string art = render_ascii(states[0]);
    CHECK(art.find('^') != std::string::npos);
    CHECK(art.find('>') != std::string::npos);
}
