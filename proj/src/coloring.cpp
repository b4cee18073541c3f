#include "kforest/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace kforest {

Coloring::Coloring(std::vector<int> colors) : colors_(std::move(colors)) {
  for (int c : colors_)
    if (c < 0) throw std::invalid_argument("Coloring: negative color");
}

void Coloring::check_vertex(int v) const {
  if (v < 0 || v >= size())
    throw std::out_of_range("Coloring: vertex " + std::to_string(v) + " out of range");
}

int Coloring::color(int v) const {
  check_vertex(v);
  return colors_[v];
}

void Coloring::set(int v, int c) {
  check_vertex(v);
  if (c < 1) throw std::invalid_argument("Coloring: colors are positive");
  colors_[v] = c;
}

void Coloring::clear(int v) {
  check_vertex(v);
  colors_[v] = 0;
}

bool Coloring::is_total() const {
  return std::all_of(colors_.begin(), colors_.end(), [](int c) { return c != 0; });
}

int Coloring::colored_count() const {
  return static_cast<int>(std::count_if(colors_.begin(), colors_.end(),
                                        [](int c) { return c != 0; }));
}

bool ListAssignment::contains(int v, int c) const {
  const auto& l = lists.at(v);
  return std::binary_search(l.begin(), l.end(), c);
}

void ListAssignment::normalize_and_check(int n) {
  if (size() != n) throw std::invalid_argument("ListAssignment: wrong vertex count");
  for (auto& l : lists) {
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
    if (l.empty()) throw std::invalid_argument("ListAssignment: empty list");
    if (l.front() < 1) throw std::invalid_argument("ListAssignment: colors are positive");
  }
}

ListAssignment ListAssignment::uniform(int n, std::vector<int> colors) {
  ListAssignment out;
  out.lists.assign(n, colors);
  out.normalize_and_check(n);
  return out;
}

namespace {

// Union-find with cycle witness recovery for one pair of color classes.
struct PairChecker {
  // edges already inserted, used to recover an explicit cycle
  std::vector<std::pair<int, int>> inserted;

  std::optional<std::vector<int>> add(std::vector<int>& parent, int u, int v) {
    int ru = find(parent, u), rv = find(parent, v);
    if (ru != rv) {
      parent[ru] = rv;
      inserted.emplace_back(u, v);
      return std::nullopt;
    }
    // u and v already connected: walk the inserted edges for a u-v path.
    std::vector<int> path = bfs_path(u, v);
    path.push_back(u);
    return path;
  }

  static int find(std::vector<int>& parent, int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  std::vector<int> bfs_path(int from, int to) const {
    std::map<int, std::vector<int>> adj;
    for (auto [a, b] : inserted) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    std::map<int, int> prev;
    std::vector<int> queue{from};
    prev[from] = from;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      int x = queue[h];
      if (x == to) break;
      for (int y : adj[x])
        if (!prev.count(y)) {
          prev[y] = x;
          queue.push_back(y);
        }
    }
    std::vector<int> path;
    for (int x = to;; x = prev[x]) {
      path.push_back(x);
      if (x == from) break;
    }
    std::reverse(path.begin(), path.end());
    return path;
  }
};

VerificationReport verify_impl(const Graph& g, const Coloring& c, int k) {
  VerificationReport report;
  int n = g.vertex_count();

  for (auto [u, v] : g.edges())
    if (c.color(u) == c.color(v)) report.improper_edges.push_back({u, v});

  for (int v = 0; v < n; ++v) {
    for (auto [color, count] : neighbor_colors(g, c, v)) {
      if (color != c.color(v) && count > k - 1) {
        report.frugality_violations.push_back({v, color, count});
        break;
      }
    }
  }

  // Group edges by the color pair their endpoints span. An edge inside one
  // class belongs to every pair containing that class.
  std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> cross;
  std::map<int, std::vector<std::pair<int, int>>> mono;
  std::set<int> used;
  for (int v = 0; v < n; ++v) used.insert(c.color(v));
  for (auto [u, v] : g.edges()) {
    int a = c.color(u), b = c.color(v);
    if (a == b)
      mono[a].emplace_back(u, v);
    else
      cross[{std::min(a, b), std::max(a, b)}].emplace_back(u, v);
  }
  std::set<std::pair<int, int>> pairs;
  for (const auto& kv : cross) pairs.insert(kv.first);
  for (const auto& kv : mono)
    for (int other : used)
      if (other != kv.first)
        pairs.insert({std::min(kv.first, other), std::max(kv.first, other)});

  std::vector<int> parent(n);
  for (auto [a, b] : pairs) {
    std::iota(parent.begin(), parent.end(), 0);
    PairChecker checker;
    std::vector<std::pair<int, int>> pool;
    auto append = [&](const std::vector<std::pair<int, int>>& src) {
      pool.insert(pool.end(), src.begin(), src.end());
    };
    if (auto it = cross.find({a, b}); it != cross.end()) append(it->second);
    if (auto it = mono.find(a); it != mono.end()) append(it->second);
    if (auto it = mono.find(b); it != mono.end()) append(it->second);
    for (auto [u, v] : pool) {
      if (auto cycle = checker.add(parent, u, v)) {
        report.bicolored_cycles.push_back({a, b, std::move(*cycle)});
        break;
      }
    }
  }

  report.valid = report.improper_edges.empty() && report.frugality_violations.empty() &&
                 report.bicolored_cycles.empty();
  return report;
}

}  // namespace

VerificationReport verify(const Graph& g, const Coloring& c, int k) {
  if (k < 2) throw std::invalid_argument("verify: k must be at least 2");
  if (c.size() != g.vertex_count())
    throw std::invalid_argument("verify: coloring size mismatch");
  if (!c.is_total()) throw std::invalid_argument("verify: coloring is not total");
  return verify_impl(g, c, k);
}

VerificationReport verify_partial(const Graph& g, const Coloring& c, int k) {
  if (k < 2) throw std::invalid_argument("verify_partial: k must be at least 2");
  if (c.size() != g.vertex_count())
    throw std::invalid_argument("verify_partial: coloring size mismatch");
  std::vector<int> colored;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (c.is_colored(v)) colored.push_back(v);
  auto sub = induced_subgraph(g, colored);
  Coloring cs(sub.graph.vertex_count());
  for (int i = 0; i < sub.graph.vertex_count(); ++i) cs.set(i, c.color(sub.vertex_map[i]));
  VerificationReport inner = verify_impl(sub.graph, cs, k);
  VerificationReport out;
  out.valid = inner.valid;
  const auto& map = sub.vertex_map;
  for (auto e : inner.improper_edges) out.improper_edges.push_back({map[e.u], map[e.v]});
  for (auto f : inner.frugality_violations)
    out.frugality_violations.push_back({map[f.v], f.color, f.count});
  for (auto& cyc : inner.bicolored_cycles) {
    BicoloredCycle mapped{cyc.color_a, cyc.color_b, {}};
    for (int v : cyc.cycle) mapped.cycle.push_back(map[v]);
    out.bicolored_cycles.push_back(std::move(mapped));
  }
  return out;
}

std::map<int, int> neighbor_colors(const Graph& g, const Coloring& c, int v) {
  if (c.size() != g.vertex_count())
    throw std::invalid_argument("neighbor_colors: coloring size mismatch");
  std::map<int, int> out;
  for (int u : g.neighbors(v))
    if (c.is_colored(u)) ++out[c.color(u)];
  return out;
}

std::set<int> c_k_minus_1(const Graph& g, const Coloring& c, int v, int k) {
  if (k < 2) throw std::invalid_argument("c_k_minus_1: k must be at least 2");
  std::set<int> out;
  for (auto [color, count] : neighbor_colors(g, c, v))
    if (count == k - 1) out.insert(color);
  return out;
}

}  // namespace kforest
