#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "etcons/event_log.hpp"
#include "etcons/graph.hpp"
#include "etcons/triggering.hpp"

namespace etcons {

/// V = 1/2 sum_i (x_i - mean0)^2.
double lyapunov_v(std::span<const double> x, double mean0);

/// W = V + sum eta_i (continuous) and F = V + sum chi_i (broadcast) share a
/// formula. Throws Error(NonpositiveInternal) if any internal is <= 0.
double lyapunov_w(double v, std::span<const double> internals);
inline double lyapunov_f(double v, std::span<const double> internals) {
  return lyapunov_w(v, internals);
}

/// (1 - sigma_max) * rho2(L).
double static_decay_rate_continuous(const SpectralSummary& s, double sigma_max);
double static_decay_rate_continuous(const LaplacianMatrix& l, double sigma_max);

/// (1 - sigma_max) min L_ii / (2 min L_ii + ||L|| sigma_max) * rho2(L).
double static_decay_rate_broadcast(const SpectralSummary& s, double sigma_max);
double static_decay_rate_broadcast(const LaplacianMatrix& l, double sigma_max);

/// k_x = max{2 + ||L|| sigma_max / min L_ii,
///           2 (1 - sigma_max) ||L|| / (k_d min_i theta_i L_ii)}.
double broadcast_gain_bound(const LaplacianMatrix& l, const SpectralSummary& s,
                            const TriggerParams& p);

/// k_W for DynamicContinuous, k_F for DynamicBroadcast. For the static laws
/// returns the corresponding static rate so callers can treat all four
/// uniformly.
double decay_rate(LawKind kind, const LaplacianMatrix& l, const SpectralSummary& s,
                  const TriggerParams& p);
double dynamic_decay_rate(LawKind kind, const LaplacianMatrix& l, const TriggerParams& p);

struct DecayEnvelope {
  double initial = 0.0;
  double rate = 0.0;
  double slack = 1.0;

  double operator()(double t) const noexcept;
};

struct SeriesPoint {
  double t = 0.0;
  double value = 0.0;
};

struct EnvelopeViolation {
  std::size_t index = 0;
  double t = 0.0;
  double value = 0.0;
  double bound = 0.0;
};

struct EnvelopeCheck {
  bool ok = true;
  std::optional<EnvelopeViolation> first_violation;
};

EnvelopeCheck check_envelope(std::span<const SeriesPoint> series, const DecayEnvelope& env);

struct InterEventStats {
  std::vector<std::size_t> counts;
  std::size_t total = 0;
  std::optional<double> min_gap;
  std::optional<double> mean_gap;
};

/// Per-agent counts plus min/mean gap between consecutive events of the same
/// agent. Gaps are absent when no agent triggered twice.
InterEventStats inter_event_stats(std::span<const EventRecord> events, std::size_t n);

}  // namespace etcons
