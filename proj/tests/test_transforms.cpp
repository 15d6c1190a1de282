#include <doctest.h>

#include <json.hpp>

#include "hookmax/enumerate.hpp"
#include "hookmax/transforms.hpp"
#include "hookmax/triangular.hpp"

using namespace hookmax;

namespace {

Partition pt(const char* text) { return Partition::from_text(text); }

// Row-excluded hook count, recomputed from scratch.
int excl(const Partition& p, int k, int row) {
    int total = hook_count(p, k);
    if (row >= 1 && row <= p.length()) total -= hook_count_in_row(p, k, row);
    return total;
}

} // namespace

TEST_CASE("row deletion") {
    CHECK(delete_row(pt("6,6,3,3,3,3"), 4) == pt("6,6,3,3,3"));
    CHECK(delete_row(pt("5"), 1) == Partition{});
    CHECK(delete_row(pt("3,2,1"), 2) == pt("3,1"));
    CHECK_THROWS_AS(delete_row(pt("3,2,1"), 4), std::invalid_argument);
    CHECK_THROWS_AS(delete_row(pt("3"), 0), std::invalid_argument);
}

TEST_CASE("cell removal without a cascade") {
    CHECK(remove_cell_cascade(pt("6,6,3,3,3,3,1"), 7, 3) == pt("6,6,3,3,3,3"));
    CHECK(remove_cell_cascade(pt("2"), 1, 5) == pt("1"));
    CHECK(remove_cell_cascade(pt("2,2,1"), 3, 1) == pt("2,2"));
    CHECK_THROWS_AS(remove_cell_cascade(pt("3,3"), 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(remove_cell_cascade(pt("3"), 2, 2), std::invalid_argument);
}

TEST_CASE("cell removal with a compensating add keeps the weight") {
    TraceStep step;
    step.label = "P_3";
    Partition out = remove_cell_cascade(pt("3,3,3,1"), 3, 3, &step);
    CHECK(out == pt("4,3,2,1"));
    CHECK(out.weight() == 10);
    REQUIRE(step.sub.size() == 2);
    CHECK(step.sub[0].label == "remove(3,3)");
    CHECK(step.sub[0].result == pt("3,3,2,1"));
    CHECK(step.sub[1].label == "add(1,4)");
    CHECK(step.sub[1].result == pt("4,3,2,1"));
}

TEST_CASE("cell removal satisfies the weight and hook-count contract") {
    Partition p = pt("7,4,3,3,3,3");
    Partition q = remove_cell_cascade(p, 1, 3);
    CHECK(q.weight() <= p.weight());
    CHECK(excl(p, 3, 1) <= excl(q, 3, 1));
}

TEST_CASE("cell addition") {
    CHECK(add_cell_cascade(pt("3,3,3"), 4, 3) == pt("4,3,2,1"));
    CHECK(add_cell_cascade(Partition{}, 1, 1) == pt("1"));

    Partition q = add_cell_cascade(pt("2,1"), 2, 2);
    CHECK(q == pt("2,2"));
    CHECK(excl(pt("2,1"), 2, 2) <= excl(q, 2, 2));

    // The added cell can be absorbed by an equal row below the mark...
    CHECK(add_cell_cascade(pt("4,4,1,1,1"), 6, 3) == pt("4,4,1,1,1,1"));
    // ...or trigger a removal cascade on the mark's row.
    CHECK(add_cell_cascade(pt("4,3,2,1"), 5, 3) == pt("4,4,1,1,1"));

    CHECK_THROWS_AS(add_cell_cascade(pt("2,2"), 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(add_cell_cascade(pt("1"), 3, 2), std::invalid_argument);
}

TEST_CASE("removal inequalities hold for every legal row") {
    for (int n = 0; n <= 14; ++n) {
        for_each_partition(n, [](const std::vector<int>& parts) {
            Partition p = Partition::unchecked(parts);
            for (int k = 1; k <= 3; ++k) {
                for (int i = 1; i <= p.length(); ++i) {
                    if (p.part(i) <= p.part_or_zero(i + 1)) continue;
                    Partition q = remove_cell_cascade(p, i, k);
                    CHECK(q.weight() <= p.weight());
                    CHECK(p.weight() - q.weight() <= 1);
                    CHECK(excl(p, k, i) <= excl(q, k, i));
                }
            }
        });
    }
}

TEST_CASE("addition bounds hold for every legal row") {
    for (int n = 0; n <= 14; ++n) {
        for_each_partition(n, [](const std::vector<int>& parts) {
            Partition p = Partition::unchecked(parts);
            for (int k = 1; k <= 3; ++k) {
                for (int j = 1; j <= p.length() + 1; ++j) {
                    if (j > 1 && p.part(j - 1) <= p.part_or_zero(j)) continue;
                    Partition q = add_cell_cascade(p, j, k);
                    CHECK(q.weight() >= p.weight());
                    CHECK(q.weight() <= p.weight() + 1);
                    // The full hook count absorbs everything outside the
                    // worked row; the row-excluded form holds for k >= 2.
                    CHECK(excl(p, k, j) <= hook_count(q, k));
                    if (k >= 2) CHECK(excl(p, k, j) <= excl(q, k, j));
                }
            }
        });
    }
}

TEST_CASE("the row-excluded addition inequality genuinely fails for k = 1") {
    // Extending row 2 of (2,1) is forced to give (2,2): the 1-hooks of
    // (2,1) are (1,2) and (2,1), but the only 1-hook of (2,2) is the added
    // cell (2,2) itself, so the row-2-excluded count drops from 1 to 0.
    // This pins the defect in the transcribed statement; the corrected
    // bound (previous test) is what the growth procedure actually needs.
    Partition p = pt("2,1");
    Partition q = add_cell_cascade(p, 2, 1);
    CHECK(q == pt("2,2"));
    CHECK(excl(p, 1, 2) == 1);
    CHECK(excl(q, 1, 2) == 0);

    Partition single = pt("1");
    Partition grown = add_cell_cascade(single, 2, 1);
    CHECK(grown == pt("1,1"));
    CHECK(excl(single, 1, 2) == 1);
    CHECK(excl(grown, 1, 2) == 0);
    CHECK(hook_count(grown, 1) == 1);  // the corrected bound still holds
}

TEST_CASE("reduction reproduces the known 33-to-21 run") {
    auto [end, trace] = reduce_to_triangular(pt("10,7,4,3,3,3,3"), 3);
    CHECK(end == pt("6,6,3,3,3"));
    CHECK(end.weight() == 21);
    CHECK(end == nearly_triangular(5, 3));

    REQUIRE(trace.steps.size() == 4);
    CHECK(trace.steps[0].label == "D_4 [case 2.1]");
    CHECK(trace.steps[1].label == "P_3 D_3 [case 2.1]");
    CHECK(trace.steps[2].label == "P_2 [case 2.2]");
    CHECK(trace.steps[3].label == "(P_1)^4 [case 2.3]");

    CHECK(trace.steps[0].result == pt("10,7,4,3,3,3"));
    CHECK(trace.steps[1].result == pt("10,7,3,3,3"));
    CHECK(trace.steps[2].result == pt("10,6,3,3,3"));
    CHECK(trace.steps[3].result == pt("6,6,3,3,3"));

    for (const TraceStep& step : trace.steps) CHECK(step.hook_count == 5);

    std::string text = trace_to_text(trace);
    CHECK(text.substr(0, text.find('\n')) ==
          "D_4 [case 2.1]\t10,7,4,3,3,3\tweight=30\talpha_k=5");
}

TEST_CASE("family members reduce to themselves with an empty trace") {
    for (auto [m, k] : {std::pair{5, 3}, {4, 2}, {7, 1}, {0, 3}}) {
        Partition t = nearly_triangular(m, k);
        auto [end, trace] = reduce_to_triangular(t, k);
        CHECK(end == t);
        CHECK(trace.steps.empty());
    }
}

TEST_CASE("reduction lands in the family with no fewer hooks") {
    for (int n = 0; n <= 16; ++n) {
        for_each_partition(n, [](const std::vector<int>& parts) {
            Partition p = Partition::unchecked(parts);
            for (int k = 1; k <= 3; ++k) {
                int hooks = hook_count(p, k);
                auto [end, trace] = reduce_to_triangular(p, k);
                int family_index = end.length();
                CHECK(end == nearly_triangular(family_index, k));
                CHECK(family_index >= hooks);
                CHECK(p.weight() >= triangular_weight(hooks, k));
                long long w = p.weight();
                int a = hooks;
                for (const TraceStep& step : trace.steps) {
                    CHECK(step.weight <= w);
                    CHECK(step.hook_count >= a);
                    CHECK(step.weight == step.result.weight());
                    CHECK(step.hook_count == hook_count(step.result, k));
                    w = step.weight;
                    a = step.hook_count;
                }
            }
        });
    }
}

TEST_CASE("growth adds one unit of weight and never loses hooks") {
    CHECK(grow_one(pt("3,3,3"), 3) == pt("4,3,2,1"));
    CHECK(grow_one(Partition{}, 1) == pt("1"));

    Partition p = pt("3,3,3");
    for (int i = 0; i < 3; ++i) p = grow_one(p, 3);
    CHECK(p == pt("4,4,1,1,1,1"));
    CHECK(p.weight() == 12);
    CHECK(hook_count(p, 3) == 3);
}

TEST_CASE("iterated growth reaches every weight above a family member") {
    for (int k = 1; k <= 4; ++k) {
        for (int m = 0; m <= 6; ++m) {
            Partition p = nearly_triangular(m, k);
            long long target = triangular_weight(m, k) + 15;
            while (p.weight() < target) {
                long long before = p.weight();
                int hooks = hook_count(p, k);
                p = grow_one(p, k);
                CHECK(p.weight() == before + 1);
                CHECK(hook_count(p, k) >= hooks);
                CHECK(hook_count(p, k) >= m);
            }
        }
    }
}

TEST_CASE("growth trace records the cascade steps") {
    TraceStep step;
    step.label = "grow_1";
    Partition out = grow_one(pt("3,3,3"), 3, &step);
    CHECK(step.result == out);
    CHECK(step.weight == 10);
    REQUIRE(step.sub.size() == 1);
    CHECK(step.sub[0].label == "Q_4");
    REQUIRE(step.sub[0].sub.size() == 2);
    CHECK(step.sub[0].sub[0].label == "add(4,1)");
    CHECK(step.sub[0].sub[1].label == "P_3");
}

TEST_CASE("text export indents nested steps") {
    TraceStep step;
    step.label = "grow_1";
    grow_one(pt("3,3,3"), 3, &step);
    TransformTrace trace;
    trace.k = 3;
    trace.steps.push_back(step);
    CHECK(trace_to_text(trace) ==
          "grow_1\t4,3,2,1\tweight=10\talpha_k=3\n"
          "  Q_4\t4,3,2,1\tweight=10\talpha_k=3\n"
          "    add(4,1)\t3,3,3,1\tweight=10\talpha_k=2\n"
          "    P_3\t4,3,2,1\tweight=10\talpha_k=3\n"
          "      remove(3,3)\t3,3,2,1\tweight=9\talpha_k=2\n"
          "      add(1,4)\t4,3,2,1\tweight=10\talpha_k=3\n");
}

TEST_CASE("structured trace export parses and mirrors the tree") {
    auto [end, trace] = reduce_to_triangular(pt("4,4,4"), 2);
    CHECK(end == nearly_triangular(end.length(), 2));
    nlohmann::json j = nlohmann::json::parse(trace_to_json_text(trace));
    CHECK(j["k"] == 2);
    REQUIRE(j["trace"].is_array());
    REQUIRE(j["trace"].size() == trace.steps.size());
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        CHECK(j["trace"][i]["label"] == trace.steps[i].label);
        CHECK(j["trace"][i]["weight"] == trace.steps[i].weight);
        CHECK(j["trace"][i]["alpha"] == trace.steps[i].hook_count);
        CHECK(j["trace"][i]["steps"].size() == trace.steps[i].sub.size());
    }
}
