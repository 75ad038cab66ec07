#include "etcons/dynamics.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace etcons {

double control_input(std::size_t i, const LaplacianMatrix& l, std::span<const double> x_hat) {
  // Summed as neighbour differences so the result is exactly 0 at consensus.
  double u = 0.0;
  for (std::size_t j = 0; j < l.size(); ++j) {
    if (j != i) u -= l(i, j) * (x_hat[j] - x_hat[i]);
  }
  return u;
}

double local_disagreement_q(std::size_t i, const LaplacianMatrix& l, std::span<const double> x) {
  double q = 0.0;
  for (std::size_t j = 0; j < l.size(); ++j) {
    if (j == i) continue;
    const double d = x[j] - x[i];
    q -= 0.5 * l(i, j) * d * d;
  }
  assert(q >= 0.0);
  return q;
}

bool sum_q_equals_quadratic(const LaplacianMatrix& l, std::span<const double> x) {
  double sum_q = 0.0;
  for (std::size_t i = 0; i < l.size(); ++i) sum_q += local_disagreement_q(i, l, x);
  const double quad = quadratic_form(l, x);
  return std::abs(sum_q - quad) <= 1e-9 * std::max(1.0, std::abs(quad));
}

}  // namespace etcons
