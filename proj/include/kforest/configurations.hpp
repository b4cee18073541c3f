#pragma once

#include "kforest/graph.hpp"

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace kforest {

enum class ConfigKind { C1, C2, C3, C4, C5 };

// A degree-1 vertex v with its neighbor u.
struct ConfigC1 {
  int v, u;
};

// A degree-2 vertex v with one neighbor u of degree <= p; w is the other.
struct ConfigC2 {
  int v, u, w;
};

// A degree-2 vertex v with neighbors u of degree <= p+1 and w of degree
// <= 2p+1.
struct ConfigC3 {
  int v, u, w;
};

// A degree-4 vertex v with at least three degree-2 neighbors x, y, z; w is
// the remaining neighbor and xp, yp, zp are the second neighbors of x, y, z.
struct ConfigC4 {
  int v, x, y, z, w, xp, yp, zp;
};

// A degree-5 vertex v all of whose neighbors x[0..4] have degree 2;
// xp[i] is the second neighbor of x[i].
struct ConfigC5 {
  int v;
  std::array<int, 5> x;
  std::array<int, 5> xp;
};

struct Configuration {
  std::variant<ConfigC1, ConfigC2, ConfigC3, ConfigC4, ConfigC5> match;
  ConfigKind kind() const { return static_cast<ConfigKind>(match.index()); }
};

std::string config_kind_name(ConfigKind kind);

// Whether the reduction for this kind is valid at the given parameters:
// C1 needs k >= 2; C2 needs k >= p+1; C3 needs k >= max(p+2, 4);
// C4 needs k >= 3 and p = 3; C5 needs k >= 4 and p = 3.
bool applicable(ConfigKind kind, int p, int k);

// First match of this kind by ascending anchor vertex id, or nullopt.
// C4 and C5 matches whose outside neighbors fall inside the deletion set
// are skipped; such graphs always carry a C2 instead.
std::optional<Configuration> find_configuration_of_kind(const Graph& g, ConfigKind kind,
                                                        int p, int k);

// Scans kinds C1..C5 in order, each by ascending anchor id.
std::optional<Configuration> find_configuration(const Graph& g, int p, int k);

// Vertices removed when the configuration is reduced: {v} for C1..C3,
// {v, x, y, z} for C4, {v, x[0..3]} for C5. Sorted ascending.
std::vector<int> deletion_set(const Configuration& cfg);

// Re-checks every binding and degree constraint of cfg against g.
bool configuration_matches(const Graph& g, const Configuration& cfg, int p, int k);

}  // namespace kforest
