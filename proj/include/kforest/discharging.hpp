#pragma once

#include "kforest/configurations.hpp"
#include "kforest/graph.hpp"
#include "kforest/rational.hpp"

#include <limits>
#include <string>
#include <vector>

namespace kforest {

// Charge transfer along edges: a vertex with degree in [giver_lo, giver_hi]
// sends amount to each neighbor of degree receiver.
struct Rule {
  static constexpr int kUnbounded = std::numeric_limits<int>::max();
  int giver_lo = 0;
  int giver_hi = kUnbounded;
  int receiver = 0;
  Rational amount;
};

struct RuleSet {
  std::string name;
  std::vector<Rule> rules;
  Rational bound;  // every final charge should reach this when no
                   // configuration is present
  int p = 0;       // sparseness level the built-in sets belong to; 0 when custom

  // The built-in set for sparseness level p (1, 2 or 3).
  static RuleSet builtin(int p);

  // Validates: positive amounts, ordered ranges, and no two rules with the
  // same receiver and overlapping giver ranges.
  static RuleSet custom(std::string name, std::vector<Rule> rules, Rational bound);
};

struct ChargeState {
  std::vector<Rational> w;       // initial charge, the degree
  std::vector<Rational> w_star;  // final charge after all transfers
};

// Runs every rule on every ordered adjacent pair, all at once. The total
// charge is conserved: sum of w_star equals sum of w equals 2|E|.
ChargeState apply_rules(const Graph& g, const RuleSet& rules);

Rational min_final_charge(const ChargeState& state);

struct BoundReport {
  std::vector<Configuration> configs_found;  // at most one, the first found
  Rational min_charge;
  Rational bound;
  bool consistent = false;
  ChargeState charges;
};

// Mechanized sanity check for sparseness level p: either the graph carries
// a reducible configuration, or its final charges all reach the bound.
// Requires a nonempty graph, p in {1,2,3} and k >= 4.
BoundReport check_bound(const Graph& g, int p, int k);

}  // namespace kforest
