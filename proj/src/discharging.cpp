#include "kforest/discharging.hpp"

#include "kforest/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace kforest {

RuleSet RuleSet::builtin(int p) {
  if (p == 1)
    return {"R1",
            {{3, 3, 2, Rational(1, 5)}, {4, Rule::kUnbounded, 2, Rational(2, 5)}},
            Rational(12, 5),
            1};
  if (p == 2)
    return {"R2",
            {{3, 3, 2, Rational(1, 9)},
             {4, 5, 2, Rational(1, 3)},
             {6, Rule::kUnbounded, 2, Rational(5, 9)}},
            Rational(8, 3),
            2};
  if (p == 3)
    return {"R3", {{4, Rule::kUnbounded, 2, Rational(1, 2)}}, Rational(3), 3};
  throw std::invalid_argument("RuleSet::builtin: p must be 1, 2 or 3");
}

RuleSet RuleSet::custom(std::string name, std::vector<Rule> rules, Rational bound) {
  for (const auto& r : rules) {
    if (r.amount <= Rational(0))
      throw std::invalid_argument("RuleSet: amounts must be positive");
    if (r.giver_lo < 0 || r.giver_lo > r.giver_hi)
      throw std::invalid_argument("RuleSet: bad giver range");
    if (r.receiver < 0) throw std::invalid_argument("RuleSet: bad receiver degree");
  }
  for (std::size_t i = 0; i < rules.size(); ++i)
    for (std::size_t j = i + 1; j < rules.size(); ++j) {
      if (rules[i].receiver != rules[j].receiver) continue;
      bool overlap = rules[i].giver_lo <= rules[j].giver_hi &&
                     rules[j].giver_lo <= rules[i].giver_hi;
      if (overlap)
        throw std::invalid_argument(
            "RuleSet: rules " + std::to_string(i) + " and " + std::to_string(j) +
            " overlap on receiver degree " + std::to_string(rules[i].receiver));
    }
  RuleSet out;
  out.name = std::move(name);
  out.rules = std::move(rules);
  out.bound = bound;
  return out;
}

ChargeState apply_rules(const Graph& g, const RuleSet& rules) {
  int n = g.vertex_count();
  ChargeState state;
  state.w.reserve(n);
  for (int v = 0; v < n; ++v) state.w.emplace_back(g.degree(v));
  state.w_star = state.w;
  for (int u = 0; u < n; ++u) {
    int du = g.degree(u);
    for (int v : g.neighbors(u)) {
      int dv = g.degree(v);
      for (const auto& r : rules.rules) {
        if (du >= r.giver_lo && du <= r.giver_hi && dv == r.receiver) {
          state.w_star[u] -= r.amount;
          state.w_star[v] += r.amount;
          break;  // ranges are disjoint per receiver, one rule can fire
        }
      }
    }
  }
  Rational total_before(0), total_after(0);
  for (int v = 0; v < n; ++v) {
    total_before += state.w[v];
    total_after += state.w_star[v];
  }
  if (total_before != total_after || total_before != Rational(2 * g.edge_count()))
    throw std::logic_error("apply_rules: charge not conserved");
  return state;
}

Rational min_final_charge(const ChargeState& state) {
  if (state.w_star.empty())
    throw std::invalid_argument("min_final_charge: no vertices");
  return *std::min_element(state.w_star.begin(), state.w_star.end());
}

BoundReport check_bound(const Graph& g, int p, int k) {
  if (g.vertex_count() == 0)
    throw std::invalid_argument("check_bound: empty graph");
  if (k < 4) throw std::invalid_argument("check_bound: k must be at least 4");
  RuleSet rules = RuleSet::builtin(p);
  BoundReport report;
  report.bound = rules.bound;
  report.charges = apply_rules(g, rules);
  report.min_charge = min_final_charge(report.charges);
  if (auto cfg = find_configuration(g, p, k)) report.configs_found.push_back(*cfg);
  report.consistent = !report.configs_found.empty() || report.min_charge >= report.bound;
  return report;
}

}  // namespace kforest
