#include "kforest/bounds.hpp"

#include <stdexcept>
#include <string>

namespace kforest {

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

void check_p(int p) {
  if (p < 1 || p > 3)
    throw std::invalid_argument("p must be 1, 2 or 3, got " + std::to_string(p));
}

}  // namespace

Parameters params(int M, int k, int p, bool relaxed) {
  check_p(p);
  if (relaxed) {
    if (k < 2) throw std::invalid_argument("params: k must be at least 2");
    if (M < 1) throw std::invalid_argument("params: M must be at least 1");
  } else {
    if (k < 4) throw std::invalid_argument("params: k must be at least 4");
    if (M < k) throw std::invalid_argument("params: M must be at least k");
  }
  Parameters out;
  out.k = k;
  out.p = p;
  out.M = M;
  out.relaxed = relaxed;
  out.Q = ceil_div(M, k - 1);
  out.q = out.Q + p;
  if (M >= k && (out.Q < 2 || out.q < p + 2))
    throw std::logic_error("params: derived values out of range");
  return out;
}

int lower_bound(int delta, int k) {
  if (delta < 0) throw std::invalid_argument("lower_bound: negative degree");
  if (k < 2) throw std::invalid_argument("lower_bound: k must be at least 2");
  return ceil_div(delta, k - 1) + 1;
}

std::optional<int> upper_bound(const Rational& mad_value, int M, int k) {
  if (k < 4) throw std::invalid_argument("upper_bound: k must be at least 4");
  if (M < k) throw std::invalid_argument("upper_bound: M must be at least k");
  int Q = ceil_div(M, k - 1);
  if (mad_value < Rational(12, 5)) return Q + 1;
  if (mad_value < Rational(8, 3)) return Q + 2;
  if (mad_value < Rational(3)) return Q + 3;
  return std::nullopt;
}

Rational sparseness_bound(int p) {
  check_p(p);
  if (p == 1) return Rational(12, 5);
  if (p == 2) return Rational(8, 3);
  return Rational(3);
}

}  // namespace kforest
