#include "kforest/solvers.hpp"

#include "kforest/bounds.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <memory>
#include <stdexcept>

namespace kforest {

namespace {

using Clock = std::chrono::steady_clock;

// Union-find with union by size and an undo stack, one instance per pair of
// palette indices. Rollback order must mirror union order.
class RollbackDsu {
 public:
  explicit RollbackDsu(int n) : parent_(n), size_(n, 1) {
    for (int i = 0; i < n; ++i) parent_[i] = i;
  }

  // False when u and v are already connected (the new edge closes a cycle).
  bool unite(int u, int v) {
    int ru = find(u), rv = find(v);
    if (ru == rv) return false;
    if (size_[ru] > size_[rv]) std::swap(ru, rv);
    parent_[ru] = rv;
    size_[rv] += size_[ru];
    trail_.emplace_back(ru, rv);
    return true;
  }

  void undo_one() {
    auto [child, root] = trail_.back();
    trail_.pop_back();
    parent_[child] = child;
    size_[root] -= size_[child];
  }

 private:
  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<std::pair<int, int>> trail_;
};

// Backtracking search over palette indices 0..P-1. Maintains, per vertex,
// how many neighbors wear each palette color, and per color pair a DSU of
// the union subgraph built so far. The invariant cnt[u][c] <= k-1 for every
// vertex u and color c != color(u) keeps uncolored vertices extendable and
// colored vertices frugal at once.
class Searcher {
 public:
  Searcher(const Graph& g, int k, std::vector<std::vector<int>> allowed, int palette_size,
           bool canonical, const SolveBudget& budget)
      : g_(g),
        n_(g.vertex_count()),
        k_(k),
        pal_(palette_size),
        allowed_(std::move(allowed)),
        canonical_(canonical),
        budget_(budget),
        color_(n_, -1),
        cnt_(static_cast<std::size_t>(n_) * pal_, 0),
        deadline_(Clock::now() + std::chrono::milliseconds(budget.wall_time_ms)) {
    pair_dsu_.resize(static_cast<std::size_t>(pal_) * pal_);
  }

  // True when a full valid coloring was found; colors() then holds palette
  // indices. False otherwise; exhausted() tells whether the search was cut
  // short by the budget.
  bool solve() { return branch(); }

  bool exhausted() const { return exhausted_; }
  std::uint64_t nodes() const { return nodes_; }
  const std::vector<int>& colors() const { return color_; }

 private:
  int& cnt(int v, int c) { return cnt_[static_cast<std::size_t>(v) * pal_ + c]; }

  RollbackDsu& dsu(int a, int b) {
    if (a > b) std::swap(a, b);
    auto& slot = pair_dsu_[static_cast<std::size_t>(a) * pal_ + b];
    if (!slot) slot = std::make_unique<RollbackDsu>(n_);
    return *slot;
  }

  bool try_assign(int v, int c) {
    for (int u : g_.neighbors(v)) {
      if (color_[u] == c) return false;
      if (cnt(u, c) + 1 > k_ - 1) return false;
    }
    int united = 0;
    bool ok = true;
    for (int u : g_.neighbors(v)) {
      if (color_[u] < 0 || color_[u] == c) continue;
      if (!dsu(c, color_[u]).unite(v, u)) {
        ok = false;
        break;
      }
      undo_log_.emplace_back(c, color_[u]);
      ++united;
    }
    if (!ok) {
      for (int i = 0; i < united; ++i) {
        auto [a, b] = undo_log_.back();
        undo_log_.pop_back();
        dsu(a, b).undo_one();
      }
      return false;
    }
    color_[v] = c;
    for (int u : g_.neighbors(v)) ++cnt(u, c);
    union_marks_.push_back(united);
    return true;
  }

  void unassign(int v) {
    int c = color_[v];
    color_[v] = -1;
    for (int u : g_.neighbors(v)) --cnt(u, c);
    int united = union_marks_.back();
    union_marks_.pop_back();
    for (int i = 0; i < united; ++i) {
      auto [a, b] = undo_log_.back();
      undo_log_.pop_back();
      dsu(a, b).undo_one();
    }
  }

  // Most-saturated uncolored vertex, ties to the smallest id.
  int pick_vertex() const {
    int best = -1, best_sat = -1;
    for (int v = 0; v < n_; ++v) {
      if (color_[v] >= 0) continue;
      int sat = 0;
      for (int c = 0; c < pal_; ++c)
        if (cnt_[static_cast<std::size_t>(v) * pal_ + c] > 0) ++sat;
      if (sat > best_sat) {
        best_sat = sat;
        best = v;
      }
    }
    return best;
  }

  bool branch() {
    if (++nodes_ > budget_.max_nodes ||
        (nodes_ % 1024 == 0 && Clock::now() > deadline_)) {
      exhausted_ = true;
      return false;
    }
    int v = pick_vertex();
    if (v < 0) return true;
    int max_new = canonical_ ? std::min(pal_ - 1, used_) : pal_ - 1;
    for (int c : allowed_[v]) {
      if (c > max_new) break;
      if (!try_assign(v, c)) continue;
      bool fresh = c == used_;
      if (fresh) ++used_;
      if (branch()) return true;
      if (fresh) --used_;
      unassign(v);
      if (exhausted_) return false;
    }
    return false;
  }

  const Graph& g_;
  int n_;
  int k_;
  int pal_;
  std::vector<std::vector<int>> allowed_;  // per vertex, ascending palette indices
  bool canonical_;
  SolveBudget budget_;
  std::vector<int> color_;
  std::vector<int> cnt_;
  std::vector<std::unique_ptr<RollbackDsu>> pair_dsu_;
  std::vector<std::pair<int, int>> undo_log_;
  std::vector<int> union_marks_;
  int used_ = 0;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  Clock::time_point deadline_;
};

void check_k(int k) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
}

}  // namespace

ChromaticResult kf_chromatic(const Graph& g, int k, const SolveBudget& budget) {
  check_k(k);
  ChromaticResult out;
  int n = g.vertex_count();
  if (n == 0) {
    out.chromatic = 0;
    out.witness = Coloring(0);
    return out;
  }
  int start = std::max(1, lower_bound(g.max_degree(), k));
  out.proven_lower = start;
  for (int t = start; t <= n; ++t) {
    std::vector<std::vector<int>> allowed(n);
    for (auto& a : allowed) {
      a.resize(t);
      for (int c = 0; c < t; ++c) a[c] = c;
    }
    SolveBudget inner = budget;
    inner.max_nodes = budget.max_nodes - std::min(budget.max_nodes, out.nodes);
    Searcher s(g, k, std::move(allowed), t, true, inner);
    bool found = s.solve();
    out.nodes += s.nodes();
    if (found) {
      out.chromatic = t;
      Coloring witness(n);
      for (int v = 0; v < n; ++v) witness.set(v, s.colors()[v] + 1);
      out.witness = std::move(witness);
      return out;
    }
    if (s.exhausted()) {
      out.status = SolveStatus::Exhausted;
      out.proven_lower = t;
      return out;
    }
    out.proven_lower = t + 1;
  }
  throw std::logic_error("kf_chromatic: n colors must always suffice");
}

ListColorResult kf_list_color(const Graph& g, const ListAssignment& lists, int k,
                              const SolveBudget& budget) {
  check_k(k);
  ListAssignment norm = lists;
  norm.normalize_and_check(g.vertex_count());
  int n = g.vertex_count();

  std::vector<int> palette;
  for (const auto& l : norm.lists) palette.insert(palette.end(), l.begin(), l.end());
  std::sort(palette.begin(), palette.end());
  palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
  std::map<int, int> index;
  for (std::size_t i = 0; i < palette.size(); ++i) index[palette[i]] = static_cast<int>(i);

  std::vector<std::vector<int>> allowed(n);
  for (int v = 0; v < n; ++v)
    for (int c : norm.lists[v]) allowed[v].push_back(index[c]);

  Searcher s(g, k, std::move(allowed), static_cast<int>(palette.size()), false, budget);
  ListColorResult out;
  bool found = s.solve();
  out.nodes = s.nodes();
  if (found) {
    Coloring witness(n);
    for (int v = 0; v < n; ++v) witness.set(v, palette[s.colors()[v]]);
    out.coloring = std::move(witness);
    return out;
  }
  if (s.exhausted()) out.status = SolveStatus::Exhausted;
  return out;
}

namespace {

// Enumerates list assignments in canonical order and tests colorability of
// the assigned prefix after each list is placed. Vertices are taken in BFS
// order from vertex 0 so prefixes stay as connected as the graph allows.
class ChoosableScan {
 public:
  ChoosableScan(const Graph& g, int k, int q, const SolveBudget& budget)
      : g_(g), k_(k), q_(q), n_(g.vertex_count()), budget_(budget),
        deadline_(Clock::now() + std::chrono::milliseconds(budget.wall_time_ms)) {
    order_ = bfs_order(g);
    lists_.resize(n_);
  }

  ChoosableResult run() {
    ChoosableResult out;
    out.choosable = true;
    descend(0, 0, out);
    if (exhausted_) {
      out.status = SolveStatus::Exhausted;
      out.choosable = false;
      out.counterexample.reset();
    }
    out.nodes = nodes_;
    out.assignments_checked = leaves_;
    return out;
  }

 private:
  static std::vector<int> bfs_order(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> order;
    std::vector<bool> seen(n, false);
    for (int s = 0; s < n; ++s) {
      if (seen[s]) continue;
      seen[s] = true;
      order.push_back(s);
      for (std::size_t h = order.size() - 1; h < order.size(); ++h)
        for (int u : g.neighbors(order[h]))
          if (!seen[u]) {
            seen[u] = true;
            order.push_back(u);
          }
    }
    return order;
  }

  // True to keep scanning, false once a counterexample is recorded.
  bool descend(int pos, int used, ChoosableResult& out) {
    ++nodes_;
    if (nodes_ > budget_.max_nodes || (nodes_ % 256 == 0 && Clock::now() > deadline_)) {
      exhausted_ = true;
      return false;
    }
    // Prefixes on at most two vertices are always colorable with lists of
    // size two or more, so skip the solve there.
    if ((pos >= 3 || (pos > 0 && q_ == 1)) && !prefix_colorable(pos)) {
      if (exhausted_) return false;
      record_counterexample(pos, used, out);
      return false;
    }
    if (pos == n_) {
      ++leaves_;
      return true;
    }
    // List for the next vertex: some colors already in use plus a block of
    // fresh ones. Renaming fresh colors never changes colorability, so only
    // the consecutive block is tried.
    int v = order_[pos];
    for (int fresh = 0; fresh <= std::min(q_, n_ * q_ - used); ++fresh) {
      int old = q_ - fresh;
      if (old > used) continue;
      std::vector<int> pick(old);
      for (int i = 0; i < old; ++i) pick[i] = i;
      while (true) {
        auto& list = lists_[v];
        list.clear();
        for (int i = 0; i < old; ++i) list.push_back(pick[i] + 1);
        for (int i = 0; i < fresh; ++i) list.push_back(used + i + 1);
        if (!descend(pos + 1, used + fresh, out)) return false;
        // next combination of old colors, lexicographic
        int i = old - 1;
        while (i >= 0 && pick[i] == used - old + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < old; ++j) pick[j] = pick[j - 1] + 1;
      }
      if (old == 0) break;  // fresh == q_ has a single list; larger fresh is impossible
    }
    return true;
  }

  bool prefix_colorable(int pos) {
    std::vector<int> verts(order_.begin(), order_.begin() + pos);
    auto sub = induced_subgraph(g_, verts);
    ListAssignment sub_lists;
    sub_lists.lists.resize(pos);
    for (int i = 0; i < pos; ++i) sub_lists.lists[i] = lists_[sub.vertex_map[i]];
    SolveBudget inner = budget_;
    inner.max_nodes = budget_.max_nodes - std::min(budget_.max_nodes, nodes_);
    auto res = kf_list_color(sub.graph, sub_lists, k_, inner);
    nodes_ += res.nodes;
    if (res.status == SolveStatus::Exhausted) {
      exhausted_ = true;
      return true;
    }
    return res.coloring.has_value();
  }

  void record_counterexample(int pos, int used, ChoosableResult& out) {
    ListAssignment bad;
    bad.lists.resize(n_);
    for (int i = 0; i < pos; ++i) bad.lists[order_[i]] = lists_[order_[i]];
    // Unassigned vertices get disjoint blocks of fresh colors; they cannot
    // help the already-failing prefix.
    int next = used + 1;
    for (int i = pos; i < n_; ++i) {
      for (int j = 0; j < q_; ++j) bad.lists[order_[i]].push_back(next++);
    }
    out.choosable = false;
    out.counterexample = std::move(bad);
  }

  const Graph& g_;
  int k_;
  int q_;
  int n_;
  SolveBudget budget_;
  Clock::time_point deadline_;
  std::vector<int> order_;
  std::vector<std::vector<int>> lists_;
  std::uint64_t nodes_ = 0;
  std::uint64_t leaves_ = 0;
  bool exhausted_ = false;
};

}  // namespace

ChoosableResult kf_choosable(const Graph& g, int k, int q, const SolveBudget& budget) {
  check_k(k);
  if (q < 1) throw std::invalid_argument("kf_choosable: q must be at least 1");
  ChoosableResult out;
  if (g.vertex_count() == 0) {
    out.choosable = true;
    return out;
  }
  if (q * g.vertex_count() > budget.universe_cap) {
    out.status = SolveStatus::Exhausted;
    return out;
  }
  return ChoosableScan(g, k, q, budget).run();
}

ChoiceNumberResult kf_choice_number(const Graph& g, int k, const SolveBudget& budget) {
  check_k(k);
  ChoiceNumberResult out;
  int n = g.vertex_count();
  if (n == 0) {
    out.choice_number = 0;
    return out;
  }
  auto chrom = kf_chromatic(g, k, budget);
  out.nodes = chrom.nodes;
  if (chrom.status == SolveStatus::Exhausted) {
    out.status = SolveStatus::Exhausted;
    return out;
  }
  for (int q = chrom.chromatic;; ++q) {
    // Lists of size n always admit an all-distinct coloring, which is valid
    // for every k, so the scan stops at n at the latest.
    if (q >= n) {
      out.choice_number = q;
      return out;
    }
    auto res = kf_choosable(g, k, q, budget);
    out.nodes += res.nodes;
    if (res.status == SolveStatus::Exhausted) {
      out.status = SolveStatus::Exhausted;
      return out;
    }
    if (res.choosable) {
      out.choice_number = q;
      return out;
    }
  }
}

}  // namespace kforest
