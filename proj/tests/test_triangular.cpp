#include <doctest.h>

#include "hookmax/enumerate.hpp"
#include "hookmax/triangular.hpp"

using namespace hookmax;

TEST_CASE("staircase index split") {
    StaircaseIndex index(8, 3);
    CHECK(index.blocks() == 2);
    CHECK(index.top() == 2);
    CHECK(index.blocks() * index.k + index.top() == index.m);
    CHECK(StaircaseIndex(0, 5).blocks() == 0);
    CHECK_THROWS_AS(StaircaseIndex(-1, 3), std::invalid_argument);
    CHECK_THROWS_AS(StaircaseIndex(3, 0), std::invalid_argument);
}

TEST_CASE("staircase family members") {
    CHECK(nearly_triangular(8, 3).parts() ==
          std::vector<int>{9, 9, 6, 6, 6, 3, 3, 3});
    CHECK(nearly_triangular(5, 3).parts() == std::vector<int>{6, 6, 3, 3, 3});
    CHECK(nearly_triangular(0, 7) == Partition{});
    CHECK(nearly_triangular(3, 3).parts() == std::vector<int>{3, 3, 3});
    CHECK(nearly_triangular(4, 1).parts() == std::vector<int>{4, 3, 2, 1});
}

TEST_CASE("family weights") {
    CHECK(triangular_weight(5, 3) == 21);
    CHECK(triangular_weight(0, 4) == 0);
    CHECK(triangular_weight(8, 3) == 45);

    for (int k = 1; k <= 10; ++k)
        for (int m = 0; m <= 200; ++m)
            CHECK(triangular_weight(m, k) == nearly_triangular(m, k).weight());
}

TEST_CASE("closed-form weight from the block split") {
    CHECK(triangular_weight_closed(1, 2, 3) == 21);
    CHECK(triangular_weight_closed(0, 0, 4) == 0);
    CHECK(triangular_weight_closed(2, 2, 3) == 45);
    CHECK_THROWS_AS(triangular_weight_closed(1, 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(triangular_weight_closed(1, -1, 3), std::invalid_argument);

    for (int k = 1; k <= 10; ++k)
        for (long long j = 0; j <= 30; ++j)
            for (int r = 0; r < k; ++r)
                CHECK(triangular_weight_closed(j, r, k) ==
                      triangular_weight(static_cast<int>(j * k + r), k));
}

TEST_CASE("family weight is strictly increasing in the part count") {
    for (int k = 1; k <= 10; ++k)
        for (int m = 0; m < 200; ++m)
            CHECK(triangular_weight(m, k) < triangular_weight(m + 1, k));
}

TEST_CASE("interval formula for the maximum") {
    CHECK(max_hook_count(12, 3) == 3);
    CHECK(max_hook_count(0, 9) == 0);
    CHECK(max_hook_count(44, 3) == 7);
    CHECK(max_hook_count(45, 3) == 8);
    for (int n = 3; n <= 5; ++n) CHECK(max_hook_count(n, 3) == 1);
}

TEST_CASE("distinct-part maximum") {
    CHECK(max_distinct_parts(5) == 2);
    CHECK(max_distinct_parts(0) == 0);
    CHECK(max_distinct_parts(9) == 3);
    CHECK(triangular_weight(7, 1) == 28);
    for (int m = 0; m <= 200; ++m)
        CHECK(triangular_weight(m, 1) == static_cast<long long>(m) * (m + 1) / 2);
    for (long long n = 0; n <= 500; ++n)
        CHECK(max_distinct_parts(n) == max_hook_count(n, 1));
}

TEST_CASE("every family member has one k-hook per row") {
    for (int k = 1; k <= 5; ++k) {
        for (int m = 0; m <= 40; ++m) {
            Partition t = nearly_triangular(m, k);
            MarkSet marks = mark_set(t, k);
            REQUIRE(marks.count() == m);
            for (int i = 0; i < m; ++i)
                CHECK(marks.cells[static_cast<std::size_t>(i)].row == i + 1);
        }
    }
}

TEST_CASE("witnesses attain the maximum") {
    CHECK(max_hook_witness(8, 1).parts() == std::vector<int>{3, 2, 1, 1, 1});
    CHECK(hook_count(max_hook_witness(8, 1), 1) == 3);

    CHECK(max_hook_witness(21, 3) == nearly_triangular(5, 3));
    CHECK(max_hook_witness(0, 4) == Partition{});

    Partition w12 = max_hook_witness(12, 3);
    CHECK(w12.weight() == 12);
    CHECK(hook_count(w12, 3) == 3);
    CHECK(w12.parts() == std::vector<int>{4, 4, 1, 1, 1, 1});

    for (int k = 1; k <= 5; ++k) {
        for (long long n = 0; n <= 45; ++n) {
            Partition w = max_hook_witness(n, k);
            CHECK(w.weight() == n);
            CHECK(hook_count(w, k) == max_hook_count(n, k));
        }
    }
}

TEST_CASE("witness growth trace is retained on request") {
    TransformTrace trace;
    Partition w = max_hook_witness(12, 3, &trace);
    CHECK(w.parts() == std::vector<int>{4, 4, 1, 1, 1, 1});
    REQUIRE(trace.steps.size() == 4);  // start + three growth steps
    CHECK(trace.steps.front().result == nearly_triangular(3, 3));
    CHECK(trace.steps.back().result == w);
    long long weight = 9;
    for (std::size_t i = 1; i < trace.steps.size(); ++i) {
        CHECK(trace.steps[i].weight == ++weight);
        CHECK(trace.steps[i].hook_count >= 3);
    }
}

TEST_CASE("formula equals the exhaustive maximum on a spot grid") {
    for (int k = 1; k <= 3; ++k)
        for (int n = 0; n <= 30; ++n)
            CHECK(max_hook_count(n, k) == max_hook_count_brute(n, k).value);
}
