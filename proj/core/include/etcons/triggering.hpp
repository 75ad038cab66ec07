#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace etcons {

/// The four triggering laws. Continuous laws consume q_i (true neighbour
/// states, monitored continuously); broadcast laws consume q̂_i (broadcast
/// values only).
enum class LawKind {
  StaticContinuous,
  DynamicContinuous,
  StaticBroadcast,
  DynamicBroadcast,
};

inline constexpr std::array<LawKind, 4> kAllLaws = {
    LawKind::StaticContinuous, LawKind::DynamicContinuous,
    LawKind::StaticBroadcast, LawKind::DynamicBroadcast};

constexpr bool is_dynamic(LawKind k) noexcept {
  return k == LawKind::DynamicContinuous || k == LawKind::DynamicBroadcast;
}
constexpr bool uses_broadcast_signal(LawKind k) noexcept {
  return k == LawKind::StaticBroadcast || k == LawKind::DynamicBroadcast;
}

/// "static-continuous", "dynamic-continuous", "static-broadcast",
/// "dynamic-broadcast".
std::string_view law_name(LawKind k) noexcept;
std::optional<LawKind> parse_law(std::string_view name) noexcept;

/// Parameters of a single agent. Static laws only read sigma.
struct AgentParams {
  double sigma = 0.5;
  double beta = 1.0;
  double xi = 1.0;
  double theta = 1.0;
  double internal0 = 10.0;

  friend bool operator==(const AgentParams&, const AgentParams&) = default;
};

struct TriggerParams {
  std::vector<AgentParams> agents;

  static TriggerParams uniform(std::size_t n, const AgentParams& p) {
    return TriggerParams{std::vector<AgentParams>(n, p)};
  }
  std::size_t size() const noexcept { return agents.size(); }
  const AgentParams& operator[](std::size_t i) const noexcept { return agents[i]; }
  double sigma_max() const noexcept;

  friend bool operator==(const TriggerParams&, const TriggerParams&) = default;
};

/// Throws ParamError for the first agent violating the law's hypotheses:
/// sigma in (0,1) for static laws and [0,1) for dynamic laws; for dynamic
/// laws also beta > 0, xi in [0,1], internal0 > 0, theta > (1 - xi)/beta.
const TriggerParams& validate_params(const TriggerParams& p, LawKind kind);

/// k_d = min_i (beta_i - (1 - xi_i)/theta_i).
double dynamic_margin(const TriggerParams& p);

/// True when the static condition e^2 <= sigma/(2 L_ii) q is violated.
bool static_check(double e, double q, double sigma, double l_ii) noexcept;

/// Right-hand side of the internal variable ODE:
/// -beta*internal + xi*(sigma/2*q - L_ii*e^2).
double internal_derivative(double internal, double q, double e, const AgentParams& p,
                           double l_ii) noexcept;

/// True when theta*(L_ii e^2 - sigma/2 q) exceeds the internal variable.
/// Throws Error(NonpositiveInternal) if internal <= 0.
bool dynamic_check(double e, double q, double internal, const AgentParams& p, double l_ii);

/// internal0 * exp(-(beta + xi/theta) t).
double internal_lower_bound(double t, const AgentParams& p) noexcept;

}  // namespace etcons
