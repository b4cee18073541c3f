#include "support/oracles.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace kforest::testing {

namespace {

// DFS forest test on an explicit edge list over the given vertices.
bool subgraph_is_forest(const std::vector<int>& verts,
                        const std::vector<std::pair<int, int>>& edges) {
  std::map<int, std::vector<int>> adj;
  for (int v : verts) adj[v];
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::set<int> visited;
  for (int root : verts) {
    if (visited.count(root)) continue;
    // iterative DFS carrying the parent
    std::vector<std::pair<int, int>> stack{{root, -1}};
    visited.insert(root);
    while (!stack.empty()) {
      auto [x, parent] = stack.back();
      stack.pop_back();
      bool skipped_parent_edge = false;
      for (int y : adj[x]) {
        if (y == parent && !skipped_parent_edge) {
          // one edge back to the parent is the tree edge itself
          skipped_parent_edge = true;
          continue;
        }
        if (visited.count(y)) return false;
        visited.insert(y);
        stack.push_back({y, x});
      }
    }
  }
  return true;
}

}  // namespace

bool naive_kforested_valid(const Graph& g, const std::vector<int>& colors, int k) {
  int n = g.vertex_count();
  if (static_cast<int>(colors.size()) != n) return false;
  for (int c : colors)
    if (c < 1) return false;
  for (auto [u, v] : g.edges())
    if (colors[u] == colors[v]) return false;

  std::set<int> used(colors.begin(), colors.end());
  for (auto ia = used.begin(); ia != used.end(); ++ia) {
    for (auto ib = std::next(ia); ib != used.end(); ++ib) {
      std::vector<int> verts;
      for (int v = 0; v < n; ++v)
        if (colors[v] == *ia || colors[v] == *ib) verts.push_back(v);
      std::vector<std::pair<int, int>> edges;
      std::map<int, int> deg;
      for (auto [u, v] : g.edges()) {
        bool in_u = colors[u] == *ia || colors[u] == *ib;
        bool in_v = colors[v] == *ia || colors[v] == *ib;
        if (in_u && in_v) {
          edges.emplace_back(u, v);
          ++deg[u];
          ++deg[v];
        }
      }
      for (const auto& kv : deg)
        if (kv.second > k - 1) return false;
      if (!subgraph_is_forest(verts, edges)) return false;
    }
  }
  return true;
}

bool proper_and_acyclic(const Graph& g, const std::vector<int>& colors) {
  int n = g.vertex_count();
  if (static_cast<int>(colors.size()) != n) return false;
  for (auto [u, v] : g.edges())
    if (colors[u] == colors[v]) return false;
  std::set<int> used(colors.begin(), colors.end());
  for (auto ia = used.begin(); ia != used.end(); ++ia) {
    for (auto ib = std::next(ia); ib != used.end(); ++ib) {
      std::vector<int> verts;
      for (int v = 0; v < n; ++v)
        if (colors[v] == *ia || colors[v] == *ib) verts.push_back(v);
      std::vector<std::pair<int, int>> edges;
      for (auto [u, v] : g.edges())
        if ((colors[u] == *ia || colors[u] == *ib) &&
            (colors[v] == *ia || colors[v] == *ib))
          edges.emplace_back(u, v);
      if (!subgraph_is_forest(verts, edges)) return false;
    }
  }
  return true;
}

std::string oracle_g6_encode(const Graph& g) {
  int n = g.vertex_count();
  std::string bits;
  for (int col = 1; col < n; ++col)
    for (int row = 0; row < col; ++row) bits.push_back(g.has_edge(row, col) ? '1' : '0');
  while (bits.size() % 6 != 0) bits.push_back('0');

  std::string out;
  auto emit18 = [&](long long value, int chunks) {
    for (int i = chunks - 1; i >= 0; --i)
      out.push_back(static_cast<char>(63 + ((value >> (6 * i)) & 63)));
  };
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(126);
    emit18(n, 3);
  } else {
    out.push_back(126);
    out.push_back(126);
    emit18(n, 6);
  }
  for (std::size_t i = 0; i < bits.size(); i += 6) {
    int val = 0;
    for (int b = 0; b < 6; ++b) val = val * 2 + (bits[i + b] == '1');
    out.push_back(static_cast<char>(63 + val));
  }
  return out;
}

Graph oracle_g6_decode(const std::string& line) {
  std::string s = line;
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  std::size_t pos = 0;
  long long n;
  if (s.at(0) != 126) {
    n = s.at(0) - 63;
    pos = 1;
  } else if (s.at(1) != 126) {
    n = 0;
    for (int i = 1; i <= 3; ++i) n = n * 64 + (s.at(i) - 63);
    pos = 4;
  } else {
    n = 0;
    for (int i = 2; i <= 7; ++i) n = n * 64 + (s.at(i) - 63);
    pos = 8;
  }
  std::string bits;
  for (std::size_t i = pos; i < s.size(); ++i) {
    int val = s[i] - 63;
    for (int b = 5; b >= 0; --b) bits.push_back(((val >> b) & 1) ? '1' : '0');
  }
  if (bits.size() < static_cast<std::size_t>(n * (n - 1) / 2))
    throw std::runtime_error("oracle_g6_decode: short input");
  Graph g(static_cast<int>(n));
  std::size_t at = 0;
  for (int col = 1; col < n; ++col)
    for (int row = 0; row < col; ++row)
      if (bits[at++] == '1') g.add_edge(row, col);
  return g;
}

Graph random_graph(int n, int m, Rng& rng) {
  Graph g(n);
  long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
  if (m > max_edges) throw std::invalid_argument("random_graph: too many edges");
  int added = 0;
  while (added < m) {
    int u = rng.below(n), v = rng.below(n);
    if (u == v || g.has_edge(u, v)) continue;
    g.add_edge(u, v);
    ++added;
  }
  return g;
}

Graph random_tree(int n, Rng& rng) {
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(v, rng.below(v));
  return g;
}

Graph random_sparse(int n, int extra_edges, Rng& rng) {
  Graph g = random_tree(n, rng);
  int added = 0, guard = 0;
  while (added < extra_edges && ++guard < 1000) {
    int u = rng.below(n), v = rng.below(n);
    if (u == v || g.has_edge(u, v)) continue;
    g.add_edge(u, v);
    ++added;
  }
  return g;
}

std::vector<int> random_total_coloring(int n, int palette, Rng& rng) {
  std::vector<int> colors(n);
  for (int v = 0; v < n; ++v) colors[v] = 1 + rng.below(palette);
  return colors;
}

std::vector<int> random_partial_coloring(int n, int palette, int uncolored_percent,
                                         Rng& rng) {
  std::vector<int> colors(n, 0);
  for (int v = 0; v < n; ++v)
    if (rng.below(100) >= uncolored_percent) colors[v] = 1 + rng.below(palette);
  return colors;
}

ListAssignment random_lists(int n, int q, int universe, Rng& rng) {
  if (universe < q) throw std::invalid_argument("random_lists: universe too small");
  ListAssignment out;
  out.lists.resize(n);
  std::vector<int> pool(universe);
  for (int i = 0; i < universe; ++i) pool[i] = i + 1;
  for (int v = 0; v < n; ++v) {
    for (int i = universe - 1; i > 0; --i) std::swap(pool[i], pool[rng.below(i + 1)]);
    out.lists[v].assign(pool.begin(), pool.begin() + q);
    std::sort(out.lists[v].begin(), out.lists[v].end());
  }
  return out;
}

}  // namespace kforest::testing
