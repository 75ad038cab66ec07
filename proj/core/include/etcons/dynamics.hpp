#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "etcons/graph.hpp"

namespace etcons {

/// Per-agent bookkeeping. The measurement error is always derived from
/// (x_hat, x) and never stored.
struct AgentState {
  double x = 0.0;
  double x_hat = 0.0;
  double last_trigger_time = 0.0;
  double internal = 0.0;

  double error() const noexcept { return x_hat - x; }
};

/// Latest broadcast value of every agent. Entry j only changes when agent j
/// triggers; a new value takes effect at the trigger instant itself.
class BroadcastTable {
 public:
  BroadcastTable() = default;
  explicit BroadcastTable(std::vector<double> values) : values_(std::move(values)) {}

  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t j) const noexcept { return values_[j]; }
  void publish(std::size_t j, double value) noexcept { values_[j] = value; }
  std::span<const double> values() const noexcept { return values_; }

  friend bool operator==(const BroadcastTable&, const BroadcastTable&) = default;

 private:
  std::vector<double> values_;
};

/// u_i = -sum_j L_ij x_hat_j.
double control_input(std::size_t i, const LaplacianMatrix& l, std::span<const double> x_hat);
inline double control_input(std::size_t i, const LaplacianMatrix& l, const BroadcastTable& bcast) {
  return control_input(i, l, bcast.values());
}

/// q_i = -1/2 sum_j L_ij (x_j - x_i)^2, computed on true states.
double local_disagreement_q(std::size_t i, const LaplacianMatrix& l, std::span<const double> x);

/// Same functional evaluated on broadcast values.
inline double local_disagreement_qhat(std::size_t i, const LaplacianMatrix& l,
                                      const BroadcastTable& bcast) {
  return local_disagreement_q(i, l, bcast.values());
}

/// Checks sum_i q_i(x) == x' L x to 1e-9 relative.
bool sum_q_equals_quadratic(const LaplacianMatrix& l, std::span<const double> x);

}  // namespace etcons
