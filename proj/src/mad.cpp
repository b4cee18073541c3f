#include "kforest/mad.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace kforest {

namespace {

using Cap = __int128;

// Dinic max-flow with 128-bit capacities. Small and exact; the densest
// subgraph networks here never exceed a few hundred nodes in tests.
class Dinic {
 public:
  explicit Dinic(int n) : g_(n), level_(n), it_(n) {}

  void add_edge(int u, int v, Cap cap) {
    g_[u].push_back({v, cap, static_cast<int>(g_[v].size())});
    g_[v].push_back({u, 0, static_cast<int>(g_[u].size()) - 1});
  }

  Cap max_flow(int s, int t) {
    Cap flow = 0;
    while (bfs(s, t)) {
      std::fill(it_.begin(), it_.end(), 0);
      while (Cap pushed = dfs(s, t, kInf)) flow += pushed;
    }
    return flow;
  }

  // After max_flow: vertices reachable from s in the residual network.
  std::vector<bool> source_side(int s) const {
    std::vector<bool> seen(g_.size(), false);
    std::vector<int> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (const auto& e : g_[u])
        if (e.cap > 0 && !seen[e.to]) {
          seen[e.to] = true;
          stack.push_back(e.to);
        }
    }
    return seen;
  }

 private:
  static constexpr Cap kInf = static_cast<Cap>(1) << 100;

  struct Edge {
    int to;
    Cap cap;
    int rev;
  };

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::vector<int> queue{s};
    level_[s] = 0;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      int u = queue[h];
      for (const auto& e : g_[u])
        if (e.cap > 0 && level_[e.to] < 0) {
          level_[e.to] = level_[u] + 1;
          queue.push_back(e.to);
        }
    }
    return level_[t] >= 0;
  }

  Cap dfs(int u, int t, Cap limit) {
    if (u == t) return limit;
    for (int& i = it_[u]; i < static_cast<int>(g_[u].size()); ++i) {
      Edge& e = g_[u][i];
      if (e.cap <= 0 || level_[e.to] != level_[u] + 1) continue;
      Cap pushed = dfs(e.to, t, std::min(limit, e.cap));
      if (pushed > 0) {
        e.cap -= pushed;
        g_[e.to][e.rev].cap += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<std::vector<Edge>> g_;
  std::vector<int> level_;
  std::vector<int> it_;
};

Cap to_cap(const BigInt& v) {
  // Values here stay below 2^100 by construction; convert via 64-bit limbs.
  bool neg = v < 0;
  BigInt a = neg ? -v : v;
  BigInt hi = a >> 64;
  BigInt lo = a - (hi << 64);
  Cap out = static_cast<Cap>(static_cast<std::uint64_t>(hi)) << 64 |
            static_cast<Cap>(static_cast<std::uint64_t>(lo));
  return neg ? -out : out;
}

struct DecisionOutcome {
  bool denser_exists;
  std::vector<int> source_set;  // vertices on the source side of the min cut
};

// Is there a nonempty S with e(S)/|S| > a/b? The min cut of this network
// equals b*m*n + 2*min_S (a|S| - b e(S)); a strictly negative minimum is
// exactly a denser-than-a/b subgraph, and the cut's source side attains it.
DecisionOutcome density_decision(const Graph& g, const BigInt& a, const BigInt& b) {
  int n = g.vertex_count();
  long long m = g.edge_count();
  int source = n, sink = n + 1;
  Dinic net(n + 2);
  Cap mb = to_cap(BigInt(m) * b);
  for (int v = 0; v < n; ++v) {
    net.add_edge(source, v, mb);
    Cap back = to_cap(BigInt(m) * b + 2 * a - BigInt(g.degree(v)) * b);
    if (back < 0) throw std::logic_error("density_decision: negative capacity");
    net.add_edge(v, sink, back);
  }
  Cap cb = to_cap(b);
  for (auto [u, v] : g.edges()) {
    net.add_edge(u, v, cb);
    net.add_edge(v, u, cb);
  }
  Cap flow = net.max_flow(source, sink);
  Cap total = mb * n;
  DecisionOutcome out;
  out.denser_exists = flow < total;
  if (out.denser_exists) {
    auto side = net.source_side(source);
    for (int v = 0; v < n; ++v)
      if (side[v]) out.source_set.push_back(v);
  }
  return out;
}

Rational subset_density(const Graph& g, const std::vector<int>& verts) {
  if (verts.empty()) throw std::logic_error("subset_density: empty set");
  auto sub = induced_subgraph(g, verts);
  return Rational(BigInt(sub.graph.edge_count()), BigInt(verts.size()));
}

}  // namespace

DensestResult densest_subgraph(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("densest_subgraph: empty graph");
  if (g.edge_count() == 0) {
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    return {Rational(0), all};
  }

  // Densities of induced subgraphs are fractions with denominator <= n, and
  // two distinct such fractions differ by at least 1/n^2. Binary search down
  // to that gap isolates a unique candidate in (lo, hi].
  Rational lo(0), hi(n);
  Rational gap(1, static_cast<long long>(n) * n);
  while (hi - lo > gap) {
    Rational mid = (lo + hi) / 2;
    if (density_decision(g, mid.num(), mid.den()).denser_exists)
      lo = mid;
    else
      hi = mid;
  }

  // Snap to the unique fraction with denominator <= n inside (lo, hi].
  Rational density;
  bool found = false;
  for (int q = 1; q <= n; ++q) {
    BigInt p = (hi * Rational(q)).floor();
    if (p < 0) continue;
    Rational cand(p, BigInt(q));
    if (cand <= lo || cand > hi) continue;
    if (!found) {
      density = cand;
      found = true;
    } else if (cand != density) {
      throw std::logic_error("densest_subgraph: snap interval not unique");
    }
  }
  if (!found) throw std::logic_error("densest_subgraph: no candidate in interval");

  // Witness: rerun the decision just below the optimum. Every subgraph
  // denser than optimum - 1/(2qn) has density exactly the optimum, so the
  // min cut's source side is a maximizer.
  BigInt p = density.num(), q = density.den();
  BigInt wa = 2 * p * n - 1;
  BigInt wb = 2 * q * n;
  auto outcome = density_decision(g, wa, wb);
  if (!outcome.denser_exists || outcome.source_set.empty())
    throw std::logic_error("densest_subgraph: witness run found nothing");
  if (subset_density(g, outcome.source_set) != density)
    throw std::logic_error("densest_subgraph: witness density mismatch");
  if (density_decision(g, p, q).denser_exists)
    throw std::logic_error("densest_subgraph: optimum not maximal");
  return {density, outcome.source_set};
}

Rational mad(const Graph& g) { return Rational(2) * densest_subgraph(g).density; }

std::vector<int> mad_witness(const Graph& g) { return densest_subgraph(g).witness; }

Rational mad_brute(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("mad_brute: empty graph");
  if (n > 24) throw std::invalid_argument("mad_brute: too many vertices");
  std::vector<std::uint32_t> adj(n, 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  long long best_e = 0, best_s = 1;
  for (std::uint32_t set = 1; set < (1u << n); ++set) {
    long long twice_e = 0;
    for (std::uint32_t rest = set; rest;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      twice_e += std::popcount(adj[v] & set);
    }
    long long e = twice_e / 2;
    long long s = std::popcount(set);
    if (e * best_s > best_e * s) {
      best_e = e;
      best_s = s;
    }
  }
  return Rational(2 * best_e, best_s);
}

Rational girth_mad_bound(int g) {
  if (g < 3) throw std::invalid_argument("girth_mad_bound: girth must be at least 3");
  return Rational(2 * g, g - 2);
}

}  // namespace kforest
