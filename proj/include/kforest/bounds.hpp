#pragma once

#include "kforest/rational.hpp"

#include <optional>

namespace kforest {

struct Parameters {
  int k = 0;
  int p = 0;
  int M = 0;
  int Q = 0;  // ceil(M / (k - 1))
  int q = 0;  // Q + p, the list size the constructive colorer works with
  bool relaxed = false;
};

// Derives Q and q. Strict mode needs M >= k >= 4; relaxed mode only needs
// k >= 2 and M >= 1 and is meant for exploratory use.
Parameters params(int M, int k, int p, bool relaxed = false);

// Smallest possible number of colors forced by a degree-Delta vertex:
// ceil(Delta / (k - 1)) + 1.
int lower_bound(int delta, int k);

// Colors guaranteed to suffice under a mad bound, as an offset from Q:
// mad < 12/5 gives Q+1, mad < 8/3 gives Q+2, mad < 3 gives Q+3.
// Returns nullopt when mad is 3 or larger. Needs M >= k >= 4.
std::optional<int> upper_bound(const Rational& mad_value, int M, int k);

// The mad threshold tied to each sparseness level p.
Rational sparseness_bound(int p);

}  // namespace kforest
