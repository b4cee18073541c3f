#include "kforest/colorer.hpp"

#include "kforest/bounds.hpp"
#include "kforest/mad.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace kforest {

namespace {

void check_shape(const Graph& g, const Coloring& c, const ListAssignment& lists,
                 const std::vector<int>& deleted) {
  int n = g.vertex_count();
  if (c.size() != n) throw std::invalid_argument("extend: coloring size mismatch");
  if (lists.size() != n) throw std::invalid_argument("extend: list size mismatch");
  std::vector<bool> is_deleted(n, false);
  for (int v : deleted) {
    if (v < 0 || v >= n) throw std::invalid_argument("extend: vertex out of range");
    is_deleted[v] = true;
  }
  for (int v = 0; v < n; ++v) {
    if (is_deleted[v] && c.is_colored(v))
      throw std::invalid_argument("extend: deleted vertex already colored");
    if (!is_deleted[v] && !c.is_colored(v))
      throw std::invalid_argument("extend: vertex outside the configuration uncolored");
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(std::string("extend: ") + what);
}

int other_neighbor(const Graph& g, int x, int v) {
  const auto& nb = g.neighbors(x);
  return nb[0] == v ? nb[1] : nb[0];
}

// Colors v with the smallest list color outside the forbidden set.
void take_smallest(const Graph&, Coloring& c, int v, const std::set<int>& forbidden,
                   const ListAssignment& lists, const char* config, ExtensionTrace* trace) {
  int chosen = 0;
  for (int col : lists.at(v)) {
    if (!forbidden.count(col)) {
      chosen = col;
      break;
    }
  }
  if (chosen == 0)
    throw ExtensionError(std::string("extend: no candidate color at vertex ") +
                             std::to_string(v) + " in " + config,
                         v);
  c.set(v, chosen);
  if (trace)
    trace->steps.push_back(
        {config, v, std::vector<int>(forbidden.begin(), forbidden.end()), chosen});
}

std::set<int> colors_of_neighbors(const Graph& g, const Coloring& c, int v) {
  std::set<int> out;
  for (const auto& kv : neighbor_colors(g, c, v)) out.insert(kv.first);
  return out;
}

ListAssignment normalized(const ListAssignment& lists, int n) {
  ListAssignment out = lists;
  out.normalize_and_check(n);
  return out;
}

}  // namespace

Coloring extend_c1(const Graph& g, const Coloring& c, const Configuration& cfg,
                   const ListAssignment& lists_in, int k, ExtensionTrace* trace) {
  const auto* m = std::get_if<ConfigC1>(&cfg.match);
  require(m != nullptr, "C1 expected");
  ListAssignment lists = normalized(lists_in, g.vertex_count());
  check_shape(g, c, lists, {m->v});
  require(g.degree(m->v) == 1 && g.neighbors(m->v)[0] == m->u, "C1 bindings do not match");
  Coloring out = c;
  std::set<int> f = c_k_minus_1(g, out, m->u, k);
  f.insert(out.color(m->u));
  take_smallest(g, out, m->v, f, lists, "C1", trace);
  return out;
}

Coloring extend_c2(const Graph& g, const Coloring& c, const Configuration& cfg,
                   const ListAssignment& lists_in, int k, ExtensionTrace* trace) {
  const auto* m = std::get_if<ConfigC2>(&cfg.match);
  require(m != nullptr, "C2 expected");
  ListAssignment lists = normalized(lists_in, g.vertex_count());
  check_shape(g, c, lists, {m->v});
  require(g.degree(m->v) == 2 && m->u != m->w && g.has_edge(m->v, m->u) &&
              g.has_edge(m->v, m->w),
          "C2 bindings do not match");
  Coloring out = c;
  std::set<int> f;
  if (out.color(m->u) == out.color(m->w)) {
    f = colors_of_neighbors(g, out, m->u);
    for (int col : c_k_minus_1(g, out, m->w, k)) f.insert(col);
    f.insert(out.color(m->u));
  } else {
    f = c_k_minus_1(g, out, m->w, k);
    f.insert(out.color(m->u));
    f.insert(out.color(m->w));
  }
  take_smallest(g, out, m->v, f, lists, "C2", trace);
  return out;
}

Coloring extend_c3(const Graph& g, const Coloring& c, const Configuration& cfg,
                   const ListAssignment& lists_in, int k, ExtensionTrace* trace) {
  const auto* m = std::get_if<ConfigC3>(&cfg.match);
  require(m != nullptr, "C3 expected");
  ListAssignment lists = normalized(lists_in, g.vertex_count());
  check_shape(g, c, lists, {m->v});
  require(g.degree(m->v) == 2 && m->u != m->w && g.has_edge(m->v, m->u) &&
              g.has_edge(m->v, m->w),
          "C3 bindings do not match");
  Coloring out = c;
  std::set<int> f;
  if (out.color(m->u) == out.color(m->w)) {
    std::set<int> nu = colors_of_neighbors(g, out, m->u);
    std::set<int> nw = colors_of_neighbors(g, out, m->w);
    for (int col : nu)
      if (nw.count(col)) f.insert(col);
    for (int col : c_k_minus_1(g, out, m->w, k)) f.insert(col);
    f.insert(out.color(m->u));
  } else {
    f = c_k_minus_1(g, out, m->w, k);
    f.insert(out.color(m->u));
    f.insert(out.color(m->w));
  }
  take_smallest(g, out, m->v, f, lists, "C3", trace);
  return out;
}

Coloring extend_c4(const Graph& g, const Coloring& c, const Configuration& cfg,
                   const ListAssignment& lists_in, int k, ExtensionTrace* trace) {
  const auto* m = std::get_if<ConfigC4>(&cfg.match);
  require(m != nullptr, "C4 expected");
  ListAssignment lists = normalized(lists_in, g.vertex_count());
  check_shape(g, c, lists, {m->v, m->x, m->y, m->z});
  require(g.degree(m->v) == 4, "C4 bindings do not match");
  std::vector<int> nb{m->x, m->y, m->z, m->w};
  std::sort(nb.begin(), nb.end());
  require(std::unique(nb.begin(), nb.end()) == nb.end() && nb == g.neighbors(m->v),
          "C4 bindings do not match");
  require(g.degree(m->x) == 2 && g.degree(m->y) == 2 && g.degree(m->z) == 2,
          "C4 bindings do not match");
  require(other_neighbor(g, m->x, m->v) == m->xp &&
              other_neighbor(g, m->y, m->v) == m->yp &&
              other_neighbor(g, m->z, m->v) == m->zp,
          "C4 bindings do not match");
  auto deleted = [&](int t) { return t == m->v || t == m->x || t == m->y || t == m->z; };
  require(!deleted(m->xp) && !deleted(m->yp) && !deleted(m->zp),
          "C4 outside neighbors overlap the deletion set");

  Coloring out = c;
  // z first: stay off w's color and z's outside constraint.
  std::set<int> f = c_k_minus_1(g, out, m->zp, k);
  f.insert(out.color(m->w));
  f.insert(out.color(m->zp));
  take_smallest(g, out, m->z, f, lists, "C4", trace);

  // v next: avoid w, z and x's outside color; keep w's neighborhood frugal.
  f = c_k_minus_1(g, out, m->w, k);
  f.insert(out.color(m->w));
  f.insert(out.color(m->z));
  f.insert(out.color(m->xp));
  take_smallest(g, out, m->v, f, lists, "C4", trace);

  // y: the tight case is v and y's outside neighbor wearing the same color.
  if (out.color(m->v) == out.color(m->yp)) {
    f = c_k_minus_1(g, out, m->yp, k);
    f.insert(out.color(m->v));
    f.insert(out.color(m->w));
    f.insert(out.color(m->z));
  } else {
    f = c_k_minus_1(g, out, m->yp, k);
    f.insert(out.color(m->v));
    f.insert(out.color(m->yp));
  }
  take_smallest(g, out, m->y, f, lists, "C4", trace);

  // x last: avoid v and its outside color, and both frugality budgets.
  f = c_k_minus_1(g, out, m->v, k);
  for (int col : c_k_minus_1(g, out, m->xp, k)) f.insert(col);
  f.insert(out.color(m->v));
  f.insert(out.color(m->xp));
  take_smallest(g, out, m->x, f, lists, "C4", trace);
  return out;
}

Coloring extend_c5(const Graph& g, const Coloring& c, const Configuration& cfg,
                   const ListAssignment& lists_in, int k, ExtensionTrace* trace) {
  const auto* m = std::get_if<ConfigC5>(&cfg.match);
  require(m != nullptr, "C5 expected");
  ListAssignment lists = normalized(lists_in, g.vertex_count());
  check_shape(g, c, lists, {m->v, m->x[0], m->x[1], m->x[2], m->x[3]});
  require(g.degree(m->v) == 5, "C5 bindings do not match");
  std::vector<int> nb(m->x.begin(), m->x.end());
  std::sort(nb.begin(), nb.end());
  require(std::unique(nb.begin(), nb.end()) == nb.end() && nb == g.neighbors(m->v),
          "C5 bindings do not match");
  for (int i = 0; i < 5; ++i) {
    require(g.degree(m->x[i]) == 2, "C5 bindings do not match");
    require(other_neighbor(g, m->x[i], m->v) == m->xp[i], "C5 bindings do not match");
  }
  auto deleted = [&](int t) {
    return t == m->v || t == m->x[0] || t == m->x[1] || t == m->x[2] || t == m->x[3];
  };
  for (int i = 0; i < 5; ++i)
    require(!deleted(m->xp[i]), "C5 outside neighbors overlap the deletion set");

  Coloring out = c;
  // x1: stay off x5's color and x1's outside constraint.
  std::set<int> f = c_k_minus_1(g, out, m->xp[0], k);
  f.insert(out.color(m->xp[0]));
  f.insert(out.color(m->x[4]));
  take_smallest(g, out, m->x[0], f, lists, "C5", trace);

  // v: avoid both colored neighbors and the outside colors of x2, x3.
  f.clear();
  f.insert(out.color(m->x[0]));
  f.insert(out.color(m->x[4]));
  f.insert(out.color(m->xp[1]));
  f.insert(out.color(m->xp[2]));
  take_smallest(g, out, m->v, f, lists, "C5", trace);

  // x2 and x3: avoid v and their outside constraints.
  for (int i : {1, 2}) {
    f = c_k_minus_1(g, out, m->xp[i], k);
    f.insert(out.color(m->v));
    f.insert(out.color(m->xp[i]));
    take_smallest(g, out, m->x[i], f, lists, "C5", trace);
  }

  // x4: the tight case is v and x4's outside neighbor wearing the same color.
  if (out.color(m->v) == out.color(m->xp[3])) {
    f = c_k_minus_1(g, out, m->xp[3], k);
    f.insert(out.color(m->v));
    f.insert(out.color(m->x[0]));
    f.insert(out.color(m->x[4]));
  } else {
    f = c_k_minus_1(g, out, m->v, k);
    for (int col : c_k_minus_1(g, out, m->xp[3], k)) f.insert(col);
    f.insert(out.color(m->v));
    f.insert(out.color(m->xp[3]));
  }
  take_smallest(g, out, m->x[3], f, lists, "C5", trace);
  return out;
}

namespace {

struct PeelStep {
  bool isolated = false;
  int iso_vertex = -1;
  std::optional<Configuration> cfg;
  Graph graph;            // the level graph the step applies to
  std::vector<int> orig;  // level id -> original id
};

Coloring extend_any(const Graph& g, const Coloring& c, const Configuration& cfg,
                    const ListAssignment& lists, int k, ExtensionTrace* trace) {
  switch (cfg.kind()) {
    case ConfigKind::C1: return extend_c1(g, c, cfg, lists, k, trace);
    case ConfigKind::C2: return extend_c2(g, c, cfg, lists, k, trace);
    case ConfigKind::C3: return extend_c3(g, c, cfg, lists, k, trace);
    case ConfigKind::C4: return extend_c4(g, c, cfg, lists, k, trace);
    case ConfigKind::C5: return extend_c5(g, c, cfg, lists, k, trace);
  }
  throw std::logic_error("extend_any: bad kind");
}

}  // namespace

ColorResult color(const Graph& g, const ListAssignment& lists_in, int k, int p, int M,
                  const ColorOptions& opts) {
  Parameters par = params(M, k, p);
  int n = g.vertex_count();
  if (n > 0 && g.max_degree() > M)
    throw std::invalid_argument("color: maximum degree exceeds M");
  ListAssignment lists = normalized(lists_in, n);
  for (int v = 0; v < n; ++v)
    if (static_cast<int>(lists.at(v).size()) < par.q)
      throw std::invalid_argument("color: list at vertex " + std::to_string(v) +
                                  " smaller than q");

  ColorResult result;
  result.q = par.q;

  std::optional<bool> mad_violated;
  auto mad_flag = [&]() {
    if (!mad_violated) {
      if (n == 0)
        mad_violated = false;
      else
        mad_violated = !(mad(g) < sparseness_bound(p));
    }
    return *mad_violated;
  };

  // Peel phase: remove one configuration or isolated vertex per level.
  std::vector<PeelStep> peeled;
  Graph cur = g;
  std::vector<int> orig(n);
  for (int i = 0; i < n; ++i) orig[i] = i;
  Coloring partial(n);
  bool whole_fallback = false;

  while (cur.vertex_count() > 0) {
    PeelStep step;
    step.graph = cur;
    step.orig = orig;
    std::vector<int> deleted;
    int iso = -1;
    for (int v = 0; v < cur.vertex_count(); ++v)
      if (cur.degree(v) == 0) {
        iso = v;
        break;
      }
    if (iso >= 0) {
      step.isolated = true;
      step.iso_vertex = iso;
      deleted = {iso};
    } else if (auto cfg = find_configuration(cur, p, k)) {
      step.cfg = cfg;
      deleted = deletion_set(*cfg);
    } else {
      // No reducible structure: hand the remaining subgraph to the solver
      // and keep the peeled levels for extension.
      result.trace.fallbacks.push_back(
          {"no_configuration", cur.vertex_count(), mad_flag()});
      ListAssignment sub_lists;
      sub_lists.lists.resize(cur.vertex_count());
      for (int v = 0; v < cur.vertex_count(); ++v) sub_lists.lists[v] = lists.at(orig[v]);
      auto res = kf_list_color(cur, sub_lists, k, opts.budget);
      if (res.status == SolveStatus::Exhausted) {
        result.status = ColorStatus::Exhausted;
        result.coloring = Coloring(n);
        return result;
      }
      if (!res.coloring) {
        // The remainder is an induced subgraph, so its impossibility
        // transfers to the whole graph.
        result.status = ColorStatus::ProvenImpossible;
        result.coloring = Coloring(n);
        return result;
      }
      for (int v = 0; v < cur.vertex_count(); ++v)
        partial.set(orig[v], res.coloring->color(v));
      break;
    }
    peeled.push_back(step);
    std::vector<int> keep;
    for (int v = 0; v < cur.vertex_count(); ++v)
      if (std::find(deleted.begin(), deleted.end(), v) == deleted.end()) keep.push_back(v);
    auto sub = induced_subgraph(cur, keep);
    std::vector<int> new_orig(sub.graph.vertex_count());
    for (int j = 0; j < sub.graph.vertex_count(); ++j) new_orig[j] = orig[sub.vertex_map[j]];
    cur = std::move(sub.graph);
    orig = std::move(new_orig);
  }

  // Extension phase, innermost level outward.
  for (auto it = peeled.rbegin(); it != peeled.rend() && !whole_fallback; ++it) {
    const PeelStep& step = *it;
    int ln = step.graph.vertex_count();
    Coloring level_col(ln);
    ListAssignment level_lists;
    level_lists.lists.resize(ln);
    for (int j = 0; j < ln; ++j) {
      if (partial.is_colored(step.orig[j])) level_col.set(j, partial.color(step.orig[j]));
      level_lists.lists[j] = lists.at(step.orig[j]);
    }
    ExtensionTrace local;
    if (step.isolated) {
      local.steps.push_back({"isolated", step.iso_vertex, {},
                             level_lists.at(step.iso_vertex).front()});
    } else {
      try {
        extend_any(step.graph, level_col, *step.cfg, level_lists, k, &local);
      } catch (const ExtensionError&) {
        int remaining = n - partial.colored_count();
        result.trace.fallbacks.push_back({"empty_candidate", remaining, mad_flag()});
        whole_fallback = true;
        break;
      }
    }
    for (const auto& s : local.steps) {
      int v = step.orig[s.vertex];
      partial.set(v, s.chosen);
      result.trace.steps.push_back({s.config, v, s.forbidden, s.chosen});
      if (opts.verify_each_step && !verify_partial(g, partial, k).valid) {
        result.trace.fallbacks.push_back(
            {"verify_failed", n - partial.colored_count(), mad_flag()});
        whole_fallback = true;
        break;
      }
    }
  }

  // Final safety net: the produced coloring must verify and respect lists.
  if (!whole_fallback && n > 0) {
    bool ok = partial.is_total() && verify(g, partial, k).valid;
    for (int v = 0; ok && v < n; ++v)
      if (!lists.contains(v, partial.color(v))) ok = false;
    if (!ok) {
      result.trace.fallbacks.push_back(
          {"verify_failed", n - partial.colored_count(), mad_flag()});
      whole_fallback = true;
    }
  }

  if (whole_fallback) {
    auto res = kf_list_color(g, lists, k, opts.budget);
    if (res.status == SolveStatus::Exhausted) {
      result.status = ColorStatus::Exhausted;
      result.coloring = Coloring(n);
      return result;
    }
    if (!res.coloring) {
      result.status = ColorStatus::ProvenImpossible;
      result.coloring = Coloring(n);
      return result;
    }
    partial = *res.coloring;
    if (!verify(g, partial, k).valid)
      throw std::logic_error("color: solver fallback produced an invalid coloring");
  }

  result.status = ColorStatus::Colored;
  result.coloring = std::move(partial);
  return result;
}

}  // namespace kforest
