#include <doctest.h>

#include <kforest/coloring.hpp>
#include <kforest/graph.hpp>

#include "support/oracles.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <vector>

using namespace kforest;
using testing::Rng;

namespace {

bool walk_is_closed_and_adjacent(const Graph& g, const std::vector<int>& walk) {
    if (walk.size() < 4) return false;
    if (walk.front() != walk.back()) return false;
    for (std::size_t i = 0; i + 1 < walk.size(); ++i)
        if (!g.has_edge(walk[i], walk[i + 1])) return false;
    return true;
}

}  // namespace

TEST_CASE("coloring container basics") {
    Coloring c(4);
    CHECK_FALSE(c.is_total());
    CHECK(c.colored_count() == 0);
    c.set(1, 3);
    CHECK(c.color(1) == 3);
    CHECK(c.is_colored(1));
    c.clear(1);
    CHECK_FALSE(c.is_colored(1));
    CHECK_THROWS_AS(c.set(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(c.set(0, -2), std::invalid_argument);
    CHECK_THROWS_AS(c.set(4, 1), std::out_of_range);
    CHECK_THROWS_AS(Coloring({1, -1}), std::invalid_argument);
    CHECK(Coloring({1, 0, 2}).colored_count() == 2);
}

TEST_CASE("list assignment normalization") {
    ListAssignment la{{{3, 1, 3}, {2}}};
    la.normalize_and_check(2);
    CHECK(la.at(0) == std::vector<int>{1, 3});
    CHECK(la.contains(0, 3));
    CHECK_FALSE(la.contains(0, 2));

    ListAssignment empty_list{{{1}, {}}};
    CHECK_THROWS_AS(empty_list.normalize_and_check(2), std::invalid_argument);
    ListAssignment bad_color{{{1}, {0}}};
    CHECK_THROWS_AS(bad_color.normalize_and_check(2), std::invalid_argument);
    ListAssignment wrong_size{{{1}}};
    CHECK_THROWS_AS(wrong_size.normalize_and_check(2), std::invalid_argument);

    auto uni = ListAssignment::uniform(3, {2, 1});
    CHECK(uni.at(2) == std::vector<int>{1, 2});
}

TEST_CASE("five-cycle with colors 1,2,1,2,3 is valid at k=4") {
    Graph c5 = generate({.family = "cycle", .n = 5});
    auto report = verify(c5, Coloring({1, 2, 1, 2, 3}), 4);
    CHECK(report.valid);
    CHECK(report.improper_edges.empty());
    CHECK(report.frugality_violations.empty());
    CHECK(report.bicolored_cycles.empty());
}

TEST_CASE("monochromatic star center overload is a frugality violation") {
    Graph star = generate({.family = "star", .n = 3});
    auto report = verify(star, Coloring({1, 2, 2, 2}), 3);
    CHECK_FALSE(report.valid);
    REQUIRE(report.frugality_violations.size() == 1);
    CHECK(report.frugality_violations[0].v == 0);
    CHECK(report.frugality_violations[0].color == 2);
    CHECK(report.frugality_violations[0].count == 3);
    // The same coloring is fine once k allows 3 same-colored neighbors.
    CHECK(verify(star, Coloring({1, 2, 2, 2}), 4).valid);
}

TEST_CASE("improper edge is reported with its endpoints") {
    Graph k2(2);
    k2.add_edge(0, 1);
    for (int k : {2, 3, 7}) {
        auto report = verify(k2, Coloring({1, 1}), k);
        CHECK_FALSE(report.valid);
        REQUIRE(report.improper_edges.size() == 1);
        CHECK(report.improper_edges[0].u == 0);
        CHECK(report.improper_edges[0].v == 1);
    }
}

TEST_CASE("two-colored four-cycle is rejected with a cycle witness") {
    Graph c4 = generate({.family = "cycle", .n = 4});
    auto report = verify(c4, Coloring({1, 2, 1, 2}), 5);
    CHECK_FALSE(report.valid);
    REQUIRE(report.bicolored_cycles.size() == 1);
    const auto& w = report.bicolored_cycles[0];
    CHECK(w.color_a == 1);
    CHECK(w.color_b == 2);
    CHECK(walk_is_closed_and_adjacent(c4, w.cycle));
    // Three colors break the cycle.
    CHECK(verify(c4, Coloring({1, 2, 1, 3}), 5).valid);
}

TEST_CASE("verify rejects partial colorings and tiny k") {
    Graph c4 = generate({.family = "cycle", .n = 4});
    CHECK_THROWS_AS(verify(c4, Coloring({1, 2, 1, 0}), 4), std::invalid_argument);
    CHECK_THROWS_AS(verify(c4, Coloring({1, 2, 1, 2}), 1), std::invalid_argument);
    CHECK_THROWS_AS(verify(c4, Coloring({1, 2}), 4), std::invalid_argument);
}

TEST_CASE("verify agrees with the literal definition on random inputs") {
    Rng rng(987654321);
    int checked = 0;
    for (int trial = 0; trial < 400; ++trial) {
        int n = 1 + rng.below(8);
        int mmax = n * (n - 1) / 2;
        Graph g = testing::random_graph(n, rng.below(mmax + 1), rng);
        int k = 2 + rng.below(4);
        int palette = 1 + rng.below(n + 1);
        auto colors = testing::random_total_coloring(n, palette, rng);
        bool expected = testing::naive_kforested_valid(g, colors, k);
        CHECK(verify(g, Coloring(colors), k).valid == expected);
        ++checked;
    }
    CHECK(checked == 400);
}

TEST_CASE("rainbow colorings are always valid") {
    Rng rng(2024);
    Graph g = testing::random_graph(7, 15, rng);
    std::vector<int> rainbow{1, 2, 3, 4, 5, 6, 7};
    CHECK(verify(g, Coloring(rainbow), 2).valid);
}

TEST_CASE("witnesses can be replayed against the graph") {
    Rng rng(555);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 2 + rng.below(7);
        int mmax = n * (n - 1) / 2;
        Graph g = testing::random_graph(n, rng.below(mmax + 1), rng);
        auto colors = testing::random_total_coloring(n, 1 + rng.below(4), rng);
        auto report = verify(g, Coloring(colors), 3);
        for (const auto& e : report.improper_edges) {
            CHECK(g.has_edge(e.u, e.v));
            CHECK(colors[e.u] == colors[e.v]);
        }
        for (const auto& f : report.frugality_violations) {
            CHECK(f.count >= 3);
            CHECK(f.color != colors[f.v]);
            int seen = 0;
            for (int u : g.neighbors(f.v)) seen += colors[u] == f.color;
            CHECK(seen == f.count);
        }
        for (const auto& b : report.bicolored_cycles) {
            CHECK(walk_is_closed_and_adjacent(g, b.cycle));
            for (int v : b.cycle) {
                bool in_pair = colors[v] == b.color_a || colors[v] == b.color_b;
                CHECK(in_pair);
            }
        }
    }
}

TEST_CASE("validity is monotone in k") {
    Rng rng(8080);
    for (int trial = 0; trial < 100; ++trial) {
        Graph g = testing::random_graph(6, rng.below(16), rng);
        auto colors = testing::random_total_coloring(6, 1 + rng.below(5), rng);
        bool prev = verify(g, Coloring(colors), 2).valid;
        for (int k = 3; k <= 7; ++k) {
            bool now = verify(g, Coloring(colors), k).valid;
            if (prev) CHECK(now);
            prev = now;
        }
    }
}

TEST_CASE("for k above the maximum degree only acyclicity matters") {
    Rng rng(1618);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 2 + rng.below(6);
        int mmax = n * (n - 1) / 2;
        Graph g = testing::random_graph(n, rng.below(mmax + 1), rng);
        auto colors = testing::random_total_coloring(n, 1 + rng.below(n), rng);
        int k = (n == 1 ? 0 : g.max_degree()) + 1;
        if (k < 2) k = 2;
        bool expected = testing::proper_and_acyclic(g, colors);
        CHECK(verify(g, Coloring(colors), k).valid == expected);
    }
}

TEST_CASE("partial verification ignores uncolored vertices") {
    Graph c5 = generate({.family = "cycle", .n = 5});
    CHECK(verify_partial(c5, Coloring(5), 4).valid);

    Coloring adjacent_same(5);
    adjacent_same.set(1, 1);
    adjacent_same.set(2, 1);
    auto bad = verify_partial(c5, adjacent_same, 4);
    CHECK_FALSE(bad.valid);
    REQUIRE(bad.improper_edges.size() == 1);
    CHECK(bad.improper_edges[0].u == 1);
    CHECK(bad.improper_edges[0].v == 2);

    Graph c4 = generate({.family = "cycle", .n = 4});
    Coloring corners(4);
    corners.set(0, 1);
    corners.set(2, 1);
    CHECK(verify_partial(c4, corners, 4).valid);
}

TEST_CASE("partial witnesses carry original vertex ids") {
    // Path 0-1-2-3-4 colored only on 2,3,4 with an improper edge at (3,4).
    Graph p5 = generate({.family = "path", .n = 5});
    Coloring c(5);
    c.set(2, 2);
    c.set(3, 1);
    c.set(4, 1);
    auto report = verify_partial(p5, c, 4);
    CHECK_FALSE(report.valid);
    REQUIRE(report.improper_edges.size() == 1);
    CHECK(report.improper_edges[0].u == 3);
    CHECK(report.improper_edges[0].v == 4);
}

TEST_CASE("neighbor color multiset") {
    Graph star = generate({.family = "star", .n = 3});
    Coloring c(4);
    c.set(1, 2);
    c.set(2, 2);
    c.set(3, 3);
    std::map<int, int> expected{{2, 2}, {3, 1}};
    CHECK(neighbor_colors(star, c, 0) == expected);
    CHECK(neighbor_colors(star, c, 1).size() == 0);  // center uncolored
    Graph lonely(2);
    CHECK(neighbor_colors(lonely, Coloring(2), 0).empty());
}

TEST_CASE("colors on exactly k-1 neighbors") {
    Graph star = generate({.family = "star", .n = 4});
    Coloring c(5);
    c.set(1, 1);
    c.set(2, 1);
    c.set(3, 1);
    c.set(4, 2);
    CHECK(c_k_minus_1(star, c, 0, 4) == std::set<int>{1});
    CHECK(c_k_minus_1(star, c, 0, 3).empty());
    c.set(3, 2);
    CHECK(c_k_minus_1(star, c, 0, 4).empty());
    CHECK(c_k_minus_1(star, c, 0, 3) == std::set<int>{1, 2});
}

TEST_CASE("bounded count of nearly-full colors near an uncolored neighbor") {
    // With d(v) = 7 and k = 4 at most two colors can sit on exactly three
    // neighbors each once one neighbor is uncolored.
    Rng rng(444);
    Graph star = generate({.family = "star", .n = 7});
    for (int trial = 0; trial < 300; ++trial) {
        Coloring c(8);
        bool has_uncolored = false;
        for (int v = 1; v <= 7; ++v) {
            int col = rng.below(4);
            if (col == 0)
                has_uncolored = true;
            else
                c.set(v, col);
        }
        if (!has_uncolored) continue;
        CHECK(static_cast<int>(c_k_minus_1(star, c, 0, 4).size()) <= 2);
    }
}
