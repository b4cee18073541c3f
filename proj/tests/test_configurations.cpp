#include <doctest.h>

#include <kforest/configurations.hpp>
#include <kforest/graph.hpp>

#include <vector>

using namespace kforest;

namespace {

// Degree-4 hub 0 with three degree-2 arms (1,2,3) ending in leaves-with-tail
// so the arm ends have degree >= 2, plus a fourth neighbor 4 of higher
// degree. Arm ends: 5, 6, 7; vertex 4 also touches 8 and 9.
Graph c4_shape() {
    Graph g(11);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(0, 3);
    g.add_edge(0, 4);
    g.add_edge(1, 5);
    g.add_edge(2, 6);
    g.add_edge(3, 7);
    g.add_edge(4, 8);
    g.add_edge(4, 9);
    g.add_edge(5, 10);
    g.add_edge(6, 10);
    g.add_edge(7, 10);
    g.add_edge(8, 10);
    g.add_edge(9, 10);
    return g;
}

// Degree-5 hub 0, all five neighbors of degree 2, their far ends merged
// pairwise into a ring so no far end is deleted with the hub.
Graph c5_shape() {
    Graph g(11);
    for (int i = 1; i <= 5; ++i) g.add_edge(0, i);
    for (int i = 1; i <= 5; ++i) g.add_edge(i, 5 + i);
    for (int i = 6; i <= 10; ++i) g.add_edge(i, i == 10 ? 6 : i + 1);
    return g;
}

}  // namespace

TEST_CASE("applicability table") {
    CHECK(applicable(ConfigKind::C1, 1, 2));
    CHECK(applicable(ConfigKind::C1, 3, 4));
    CHECK(applicable(ConfigKind::C2, 1, 2));
    CHECK_FALSE(applicable(ConfigKind::C2, 3, 3));
    CHECK(applicable(ConfigKind::C2, 3, 4));
    CHECK(applicable(ConfigKind::C3, 1, 4));
    CHECK_FALSE(applicable(ConfigKind::C3, 1, 3));
    CHECK_FALSE(applicable(ConfigKind::C3, 3, 4));
    CHECK(applicable(ConfigKind::C3, 3, 5));
    CHECK_FALSE(applicable(ConfigKind::C4, 1, 4));
    CHECK_FALSE(applicable(ConfigKind::C4, 2, 4));
    CHECK(applicable(ConfigKind::C4, 3, 3));
    CHECK(applicable(ConfigKind::C4, 3, 4));
    CHECK_FALSE(applicable(ConfigKind::C5, 3, 3));
    CHECK(applicable(ConfigKind::C5, 3, 4));
    CHECK_FALSE(applicable(ConfigKind::C5, 1, 4));
}

TEST_CASE("a single edge is a C1 at vertex 0") {
    Graph k2(2);
    k2.add_edge(0, 1);
    auto found = find_configuration(k2, 1, 4);
    REQUIRE(found.has_value());
    CHECK(found->kind() == ConfigKind::C1);
    auto c1 = std::get<ConfigC1>(found->match);
    CHECK(c1.v == 0);
    CHECK(c1.u == 1);
    CHECK(deletion_set(*found) == std::vector<int>{0});
}

TEST_CASE("every tree has a C1 and the smallest leaf anchors it") {
    Graph p4 = generate({.family = "path", .n = 4});
    auto found = find_configuration_of_kind(p4, ConfigKind::C1, 1, 4);
    REQUIRE(found.has_value());
    CHECK(std::get<ConfigC1>(found->match).v == 0);
    Graph star = generate({.family = "star", .n = 5});
    auto leaf = find_configuration(star, 2, 4);
    REQUIRE(leaf.has_value());
    CHECK(std::get<ConfigC1>(leaf->match).v == 1);
    CHECK(std::get<ConfigC1>(leaf->match).u == 0);
}

TEST_CASE("five-cycle carries a C3 for p=1 and a C2 once p reaches 2") {
    Graph c5 = generate({.family = "cycle", .n = 5});
    auto p1 = find_configuration(c5, 1, 4);
    REQUIRE(p1.has_value());
    CHECK(p1->kind() == ConfigKind::C3);
    auto c3 = std::get<ConfigC3>(p1->match);
    CHECK(c3.v == 0);
    CHECK(c3.u == 1);
    CHECK(c3.w == 4);
    CHECK(deletion_set(*p1) == std::vector<int>{0});
    CHECK(configuration_matches(c5, *p1, 1, 4));

    auto p2 = find_configuration(c5, 2, 4);
    REQUIRE(p2.has_value());
    CHECK(p2->kind() == ConfigKind::C2);
}

TEST_CASE("C2 requires a small-degree neighbor") {
    // Path of length 2 into a K4 block: vertex 1 has degree 2, its
    // neighbor 0 is a leaf of degree 1 <= p.
    Graph g(6);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    for (int i = 2; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) g.add_edge(i, j);
    auto found = find_configuration_of_kind(g, ConfigKind::C2, 1, 4);
    REQUIRE(found.has_value());
    auto c2 = std::get<ConfigC2>(found->match);
    CHECK(c2.v == 1);
    CHECK(c2.u == 0);
    CHECK(c2.w == 2);
    CHECK(configuration_matches(g, *found, 1, 4));
    // The K4-side neighbor has degree 4, too big to serve as u at p=3.
    Graph no_leaf = induced_subgraph(g, {1, 2, 3, 4, 5}).graph;
    CHECK_FALSE(find_configuration_of_kind(no_leaf, ConfigKind::C2, 3, 4).has_value());
}

TEST_CASE("C3 binds u to the smaller-degree side when both fit") {
    // Vertex 0 of degree 2 between a degree-2 vertex and a degree-4 vertex,
    // inside a sparse frame: u must satisfy deg <= p+1, w <= 2p+1.
    Graph g(8);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 3);
    g.add_edge(2, 4);
    g.add_edge(2, 5);
    g.add_edge(2, 6);
    g.add_edge(3, 7);
    g.add_edge(4, 7);
    g.add_edge(5, 7);
    g.add_edge(6, 7);
    // Degrees: 0:2, 1:2, 2:4, others small. p=3: u needs deg <= 4,
    // w needs deg <= 7; the pair (1, 2) works with u = 1.
    auto found = find_configuration_of_kind(g, ConfigKind::C3, 3, 5);
    REQUIRE(found.has_value());
    auto c3 = std::get<ConfigC3>(found->match);
    CHECK(c3.v == 0);
    CHECK(c3.u == 1);
    CHECK(c3.w == 2);
    // At p=1 vertex 2 (degree 4) exceeds 2p+1 = 3 as w, but the (u, w)
    // assignment can't swap since degree 4 > p+1 = 2 either way. The scan
    // must move on to anchor 1 whose neighbors are 0 (deg 2) and 3 (deg 2).
    auto p1 = find_configuration_of_kind(g, ConfigKind::C3, 1, 4);
    REQUIRE(p1.has_value());
    CHECK(std::get<ConfigC3>(p1->match).v == 1);
}

TEST_CASE("C4 binds the three smallest-id degree-2 neighbors") {
    Graph g = c4_shape();
    auto found = find_configuration_of_kind(g, ConfigKind::C4, 3, 4);
    REQUIRE(found.has_value());
    auto c4 = std::get<ConfigC4>(found->match);
    CHECK(c4.v == 0);
    CHECK(c4.x == 1);
    CHECK(c4.y == 2);
    CHECK(c4.z == 3);
    CHECK(c4.w == 4);
    CHECK(c4.xp == 5);
    CHECK(c4.yp == 6);
    CHECK(c4.zp == 7);
    CHECK(deletion_set(*found) == std::vector<int>{0, 1, 2, 3});
    CHECK(configuration_matches(g, *found, 3, 4));
    // Same shape is invisible at p=1.
    CHECK_FALSE(find_configuration_of_kind(g, ConfigKind::C4, 1, 4).has_value());
}

TEST_CASE("C4 with four degree-2 neighbors still binds only three") {
    Graph g(9);
    for (int i = 1; i <= 4; ++i) g.add_edge(0, i);
    for (int i = 1; i <= 4; ++i) g.add_edge(i, 4 + i);
    for (int i = 5; i <= 8; ++i) g.add_edge(i, i == 8 ? 5 : i + 1);
    auto found = find_configuration_of_kind(g, ConfigKind::C4, 3, 4);
    REQUIRE(found.has_value());
    auto c4 = std::get<ConfigC4>(found->match);
    CHECK(c4.x == 1);
    CHECK(c4.y == 2);
    CHECK(c4.z == 3);
    CHECK(c4.w == 4);
}

TEST_CASE("C5 binds all five spokes in id order") {
    Graph g = c5_shape();
    auto found = find_configuration_of_kind(g, ConfigKind::C5, 3, 4);
    REQUIRE(found.has_value());
    auto c5 = std::get<ConfigC5>(found->match);
    CHECK(c5.v == 0);
    CHECK(c5.x == std::array<int, 5>{1, 2, 3, 4, 5});
    CHECK(c5.xp == std::array<int, 5>{6, 7, 8, 9, 10});
    CHECK(deletion_set(*found) == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(configuration_matches(g, *found, 3, 4));
}

TEST_CASE("degenerate C4 with adjacent spokes is skipped but C2 covers it") {
    // Hub 0 with degree-2 neighbors 1, 2 adjacent to each other; the match
    // would put x' = y inside the deletion set.
    Graph g(7);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(0, 3);
    g.add_edge(0, 4);
    g.add_edge(1, 2);
    g.add_edge(3, 5);
    g.add_edge(4, 6);
    g.add_edge(5, 6);
    REQUIRE(g.degree(0) == 4);
    CHECK_FALSE(find_configuration_of_kind(g, ConfigKind::C4, 3, 4).has_value());
    auto fallback = find_configuration(g, 3, 4);
    REQUIRE(fallback.has_value());
    CHECK(fallback->kind() == ConfigKind::C2);
}

TEST_CASE("degenerate C5 with paired spokes is skipped but C2 covers it") {
    // Hub 0 with five degree-2 neighbors, two of which share their far end
    // with each other directly.
    Graph g(10);
    for (int i = 1; i <= 5; ++i) g.add_edge(0, i);
    g.add_edge(1, 2);
    g.add_edge(3, 6);
    g.add_edge(4, 7);
    g.add_edge(5, 8);
    g.add_edge(6, 9);
    g.add_edge(7, 9);
    g.add_edge(8, 9);
    CHECK_FALSE(find_configuration_of_kind(g, ConfigKind::C5, 3, 4).has_value());
    auto fallback = find_configuration(g, 3, 4);
    REQUIRE(fallback.has_value());
    CHECK(fallback->kind() == ConfigKind::C2);
}

TEST_CASE("the scan fires the cheapest kind first") {
    // A graph with both a C1 (leaf 6 hanging off the ring) and the C4 shape.
    Graph g = c4_shape();
    Graph with_leaf(12);
    for (auto [u, v] : g.edges()) with_leaf.add_edge(u, v);
    with_leaf.add_edge(10, 11);
    auto found = find_configuration(with_leaf, 3, 4);
    REQUIRE(found.has_value());
    CHECK(found->kind() == ConfigKind::C1);
    CHECK(std::get<ConfigC1>(found->match).v == 11);
}

TEST_CASE("K4 is configuration-free at p=3") {
    Graph k4 = generate({.family = "complete", .n = 4});
    CHECK_FALSE(find_configuration(k4, 3, 4).has_value());
    CHECK_FALSE(find_configuration(k4, 1, 4).has_value());
}

TEST_CASE("K4 with one subdivided edge is configuration-free at p=1") {
    Graph k4 = generate({.family = "complete", .n = 4});
    Graph g(5);
    g.add_edge(0, 4);
    g.add_edge(1, 4);
    g.add_edge(0, 2);
    g.add_edge(0, 3);
    g.add_edge(1, 2);
    g.add_edge(1, 3);
    g.add_edge(2, 3);
    CHECK_FALSE(find_configuration(g, 1, 4).has_value());
    // At p=2 the subdivision vertex becomes a C3: 3 <= p+1 and 3 <= 2p+1.
    auto p2 = find_configuration(g, 2, 4);
    REQUIRE(p2.has_value());
    CHECK(p2->kind() == ConfigKind::C3);
    CHECK(std::get<ConfigC3>(p2->match).v == 4);
}

TEST_CASE("reported matches survive a full recheck") {
    for (const auto& g : {c4_shape(), c5_shape(), generate({.family = "cycle", .n = 6}),
                          generate({.family = "random_tree", .n = 12, .seed = 3})}) {
        for (int p = 1; p <= 3; ++p) {
            auto found = find_configuration(g, p, 4);
            if (found) CHECK(configuration_matches(g, *found, p, 4));
        }
    }
}

TEST_CASE("configuration_matches rejects stale bindings") {
    Graph k2(2);
    k2.add_edge(0, 1);
    Configuration fake{ConfigC1{0, 1}};
    CHECK(configuration_matches(k2, fake, 1, 4));
    Graph p3 = generate({.family = "path", .n = 3});
    Configuration wrong{ConfigC1{1, 0}};  // vertex 1 has degree 2
    CHECK_FALSE(configuration_matches(p3, wrong, 1, 4));
}
