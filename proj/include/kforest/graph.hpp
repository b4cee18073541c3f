#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kforest {

// Raised by the text parsers; offset is the byte position of the problem.
struct ParseError : std::runtime_error {
  std::size_t offset;
  ParseError(const std::string& what, std::size_t at)
      : std::runtime_error(what + " (byte " + std::to_string(at) + ")"), offset(at) {}
};

// Simple undirected graph on vertices 0..n-1. No loops, no parallel edges.
// Adjacency lists are kept sorted ascending.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return m_; }

  // Returns false when the edge was already present. Throws on loops and
  // out-of-range endpoints.
  bool add_edge(int u, int v);
  bool has_edge(int u, int v) const;

  int degree(int v) const;
  const std::vector<int>& neighbors(int v) const;

  // All edges as (u, v) with u < v, sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const;

  int max_degree() const;
  int min_degree() const;

  bool operator==(const Graph& o) const { return adj_ == o.adj_; }

 private:
  void check_vertex(int v) const;
  std::vector<std::vector<int>> adj_;
  int m_ = 0;
};

// Length of a shortest cycle, or nullopt for forests.
std::optional<int> girth(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> vertex_map;  // new id -> old id, ascending
};

// Subgraph induced by the given vertex set (duplicates ignored).
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& keep);

// graph6 text codec. The parser accepts an optional ">>graph6<<" header and
// enforces canonical length encoding and zero padding bits.
Graph parse_graph6(const std::string& text);
std::string to_graph6(const Graph& g);

struct EdgeListGraph {
  Graph graph;
  bool duplicates_collapsed = false;
};

// Edge-list text: optional first line "n <count>", then "u v" lines.
// '#' starts a comment, blank lines are skipped, duplicate edges are
// collapsed and flagged, loops are errors.
EdgeListGraph parse_edge_list(const std::string& text);
std::string to_edge_list(const Graph& g);

// Replaces every edge by a path with t internal vertices.
Graph subdivide(const Graph& g, int t);

struct FamilySpec {
  std::string family;  // cycle, path, star, complete, complete_bipartite,
                       // petersen, random_tree
  int n = 0;
  int n2 = 0;                         // second side for complete_bipartite
  std::uint64_t seed = 0;             // random_tree only
  int subdivide = 0;                  // applied after construction
};

Graph generate(const FamilySpec& spec);

}  // namespace kforest
