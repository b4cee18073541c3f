#pragma once

#include "kforest/graph.hpp"

#include <map>
#include <optional>
#include <set>
#include <vector>

namespace kforest {

// Vertex coloring; colors are positive ints, 0 marks an uncolored vertex.
class Coloring {
 public:
  Coloring() = default;
  explicit Coloring(int n) : colors_(n, 0) {}
  explicit Coloring(std::vector<int> colors);

  int size() const { return static_cast<int>(colors_.size()); }
  int color(int v) const;
  bool is_colored(int v) const { return color(v) != 0; }
  void set(int v, int c);
  void clear(int v);
  bool is_total() const;
  int colored_count() const;
  const std::vector<int>& raw() const { return colors_; }

  bool operator==(const Coloring& o) const { return colors_ == o.colors_; }

 private:
  void check_vertex(int v) const;
  std::vector<int> colors_;
};

// Per-vertex color lists. Lists are kept sorted and duplicate-free.
struct ListAssignment {
  std::vector<std::vector<int>> lists;

  int size() const { return static_cast<int>(lists.size()); }
  const std::vector<int>& at(int v) const { return lists.at(v); }
  bool contains(int v, int c) const;

  // Sorts and dedups each list, then checks: one nonempty list per vertex,
  // all colors positive.
  void normalize_and_check(int n);

  // Same colors for every vertex.
  static ListAssignment uniform(int n, std::vector<int> colors);
};

struct ImproperEdge {
  int u, v;
};

struct FrugalityViolation {
  int v;      // vertex whose neighborhood is overloaded
  int color;  // offending color, distinct from v's own
  int count;  // neighbors of v wearing it
};

struct BicoloredCycle {
  int color_a, color_b;
  std::vector<int> cycle;  // closed walk, consecutive entries adjacent
};

struct VerificationReport {
  bool valid = true;
  std::vector<ImproperEdge> improper_edges;
  std::vector<FrugalityViolation> frugality_violations;
  std::vector<BicoloredCycle> bicolored_cycles;
};

// Full check of a total coloring: proper, every non-own color appears at
// most k-1 times in each neighborhood, and the union of any two color
// classes induces a forest.
VerificationReport verify(const Graph& g, const Coloring& c, int k);

// Same checks restricted to the subgraph induced by the colored vertices.
// Witnesses use vertex ids of g.
VerificationReport verify_partial(const Graph& g, const Coloring& c, int k);

// Multiset of colors on v's colored neighbors: color -> multiplicity.
std::map<int, int> neighbor_colors(const Graph& g, const Coloring& c, int v);

// Colors appearing on exactly k-1 colored neighbors of v.
std::set<int> c_k_minus_1(const Graph& g, const Coloring& c, int v, int k);

}  // namespace kforest
