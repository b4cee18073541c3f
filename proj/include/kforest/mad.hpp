#pragma once

#include "kforest/graph.hpp"
#include "kforest/rational.hpp"

#include <vector>

namespace kforest {

struct DensestResult {
  Rational density;           // max over nonempty S of e(S)/|S|
  std::vector<int> witness;   // a vertex set achieving it, sorted
};

// Exact maximum subgraph density via parametric min-cut with a rational
// binary search. The witness is verified internally before returning.
DensestResult densest_subgraph(const Graph& g);

// Maximum average degree: max over nonempty induced subgraphs H of
// 2|E(H)| / |V(H)|. Exact rational value.
Rational mad(const Graph& g);
std::vector<int> mad_witness(const Graph& g);

// Exhaustive reference over all vertex subsets. Requires n <= 24.
Rational mad_brute(const Graph& g);

// Largest mad forced below by girth g: 2g / (g - 2), for g >= 3.
Rational girth_mad_bound(int g);

}  // namespace kforest
