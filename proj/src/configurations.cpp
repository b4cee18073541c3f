#include "kforest/configurations.hpp"

#include <algorithm>
#include <stdexcept>

namespace kforest {

namespace {

void check_params(int p, int k) {
  if (p < 1 || p > 3) throw std::invalid_argument("p must be 1, 2 or 3");
  if (k < 2) throw std::invalid_argument("k must be at least 2");
}

// Second neighbor of a degree-2 vertex x, the one that is not v.
int other_neighbor(const Graph& g, int x, int v) {
  const auto& nb = g.neighbors(x);
  return nb[0] == v ? nb[1] : nb[0];
}

std::optional<Configuration> match_c1(const Graph& g) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 1) return Configuration{ConfigC1{v, g.neighbors(v)[0]}};
  return std::nullopt;
}

std::optional<Configuration> match_c2(const Graph& g, int p) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 2) continue;
    int a = g.neighbors(v)[0], b = g.neighbors(v)[1];
    if (g.degree(a) <= p) return Configuration{ConfigC2{v, a, b}};
    if (g.degree(b) <= p) return Configuration{ConfigC2{v, b, a}};
  }
  return std::nullopt;
}

std::optional<Configuration> match_c3(const Graph& g, int p) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 2) continue;
    int a = g.neighbors(v)[0], b = g.neighbors(v)[1];
    if (g.degree(a) <= p + 1 && g.degree(b) <= 2 * p + 1)
      return Configuration{ConfigC3{v, a, b}};
    if (g.degree(b) <= p + 1 && g.degree(a) <= 2 * p + 1)
      return Configuration{ConfigC3{v, b, a}};
  }
  return std::nullopt;
}

std::optional<Configuration> match_c4(const Graph& g) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 4) continue;
    std::vector<int> twos;
    for (int u : g.neighbors(v))
      if (g.degree(u) == 2) twos.push_back(u);
    if (twos.size() < 3) continue;
    int x = twos[0], y = twos[1], z = twos[2];
    int w = -1;
    for (int u : g.neighbors(v))
      if (u != x && u != y && u != z) {
        w = u;
        break;
      }
    ConfigC4 m{v, x, y, z, w,
               other_neighbor(g, x, v), other_neighbor(g, y, v), other_neighbor(g, z, v)};
    auto deleted = [&](int t) { return t == v || t == x || t == y || t == z; };
    if (deleted(m.xp) || deleted(m.yp) || deleted(m.zp)) continue;
    return Configuration{m};
  }
  return std::nullopt;
}

std::optional<Configuration> match_c5(const Graph& g) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 5) continue;
    const auto& nb = g.neighbors(v);
    if (!std::all_of(nb.begin(), nb.end(), [&](int u) { return g.degree(u) == 2; }))
      continue;
    ConfigC5 m;
    m.v = v;
    for (int i = 0; i < 5; ++i) {
      m.x[i] = nb[i];
      m.xp[i] = other_neighbor(g, nb[i], v);
    }
    auto deleted = [&](int t) {
      return t == v || t == m.x[0] || t == m.x[1] || t == m.x[2] || t == m.x[3];
    };
    bool skip = false;
    for (int i = 0; i < 5; ++i)
      if (deleted(m.xp[i])) skip = true;
    if (skip) continue;
    return Configuration{m};
  }
  return std::nullopt;
}

}  // namespace

std::string config_kind_name(ConfigKind kind) {
  switch (kind) {
    case ConfigKind::C1: return "C1";
    case ConfigKind::C2: return "C2";
    case ConfigKind::C3: return "C3";
    case ConfigKind::C4: return "C4";
    case ConfigKind::C5: return "C5";
  }
  throw std::logic_error("config_kind_name: bad kind");
}

bool applicable(ConfigKind kind, int p, int k) {
  check_params(p, k);
  switch (kind) {
    case ConfigKind::C1: return k >= 2;
    case ConfigKind::C2: return k >= p + 1;
    case ConfigKind::C3: return k >= std::max(p + 2, 4);
    case ConfigKind::C4: return k >= 3 && p >= 3;
    case ConfigKind::C5: return k >= 4 && p >= 3;
  }
  throw std::logic_error("applicable: bad kind");
}

std::optional<Configuration> find_configuration_of_kind(const Graph& g, ConfigKind kind,
                                                        int p, int k) {
  if (!applicable(kind, p, k)) return std::nullopt;
  switch (kind) {
    case ConfigKind::C1: return match_c1(g);
    case ConfigKind::C2: return match_c2(g, p);
    case ConfigKind::C3: return match_c3(g, p);
    case ConfigKind::C4: return match_c4(g);
    case ConfigKind::C5: return match_c5(g);
  }
  throw std::logic_error("find_configuration_of_kind: bad kind");
}

std::optional<Configuration> find_configuration(const Graph& g, int p, int k) {
  check_params(p, k);
  for (ConfigKind kind : {ConfigKind::C1, ConfigKind::C2, ConfigKind::C3, ConfigKind::C4,
                          ConfigKind::C5})
    if (auto cfg = find_configuration_of_kind(g, kind, p, k)) return cfg;
  return std::nullopt;
}

std::vector<int> deletion_set(const Configuration& cfg) {
  std::vector<int> out;
  if (auto* c = std::get_if<ConfigC1>(&cfg.match)) {
    out = {c->v};
  } else if (auto* c2 = std::get_if<ConfigC2>(&cfg.match)) {
    out = {c2->v};
  } else if (auto* c3 = std::get_if<ConfigC3>(&cfg.match)) {
    out = {c3->v};
  } else if (auto* c4 = std::get_if<ConfigC4>(&cfg.match)) {
    out = {c4->v, c4->x, c4->y, c4->z};
  } else if (auto* c5 = std::get_if<ConfigC5>(&cfg.match)) {
    out = {c5->v, c5->x[0], c5->x[1], c5->x[2], c5->x[3]};
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool configuration_matches(const Graph& g, const Configuration& cfg, int p, int k) {
  check_params(p, k);
  if (!applicable(cfg.kind(), p, k)) return false;
  auto deg_ok = [&](int v, int d) {
    return v >= 0 && v < g.vertex_count() && g.degree(v) == d;
  };
  if (auto* c = std::get_if<ConfigC1>(&cfg.match))
    return deg_ok(c->v, 1) && g.has_edge(c->v, c->u);
  if (auto* c = std::get_if<ConfigC2>(&cfg.match))
    return deg_ok(c->v, 2) && g.has_edge(c->v, c->u) && g.has_edge(c->v, c->w) &&
           c->u != c->w && g.degree(c->u) <= p;
  if (auto* c = std::get_if<ConfigC3>(&cfg.match))
    return deg_ok(c->v, 2) && g.has_edge(c->v, c->u) && g.has_edge(c->v, c->w) &&
           c->u != c->w && g.degree(c->u) <= p + 1 && g.degree(c->w) <= 2 * p + 1;
  if (auto* c = std::get_if<ConfigC4>(&cfg.match)) {
    std::vector<int> nb{c->x, c->y, c->z, c->w};
    std::sort(nb.begin(), nb.end());
    if (std::unique(nb.begin(), nb.end()) != nb.end()) return false;
    if (!deg_ok(c->v, 4)) return false;
    if (nb != g.neighbors(c->v)) return false;
    for (int t : {c->x, c->y, c->z})
      if (g.degree(t) != 2) return false;
    if (other_neighbor(g, c->x, c->v) != c->xp) return false;
    if (other_neighbor(g, c->y, c->v) != c->yp) return false;
    if (other_neighbor(g, c->z, c->v) != c->zp) return false;
    auto deleted = [&](int t) { return t == c->v || t == c->x || t == c->y || t == c->z; };
    return !deleted(c->xp) && !deleted(c->yp) && !deleted(c->zp);
  }
  if (auto* c = std::get_if<ConfigC5>(&cfg.match)) {
    if (!deg_ok(c->v, 5)) return false;
    std::vector<int> nb(c->x.begin(), c->x.end());
    std::sort(nb.begin(), nb.end());
    if (std::unique(nb.begin(), nb.end()) != nb.end()) return false;
    if (nb != g.neighbors(c->v)) return false;
    for (int i = 0; i < 5; ++i) {
      if (g.degree(c->x[i]) != 2) return false;
      if (other_neighbor(g, c->x[i], c->v) != c->xp[i]) return false;
    }
    auto deleted = [&](int t) {
      return t == c->v || t == c->x[0] || t == c->x[1] || t == c->x[2] || t == c->x[3];
    };
    for (int i = 0; i < 5; ++i)
      if (deleted(c->xp[i])) return false;
    return true;
  }
  return false;
}

}  // namespace kforest
