#include "etcons/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "etcons/errors.hpp"

namespace etcons {

double lyapunov_v(std::span<const double> x, double mean0) {
  double s = 0.0;
  for (double v : x) s += (v - mean0) * (v - mean0);
  return 0.5 * s;
}

double lyapunov_w(double v, std::span<const double> internals) {
  double w = v;
  for (std::size_t i = 0; i < internals.size(); ++i) {
    if (!(internals[i] > 0.0)) {
      std::ostringstream os;
      os << "internal variable of agent " << i + 1 << " is not positive";
      throw Error(ErrorKind::NonpositiveInternal, os.str());
    }
    w += internals[i];
  }
  return w;
}

double static_decay_rate_continuous(const SpectralSummary& s, double sigma_max) {
  return (1.0 - sigma_max) * s.fiedler;
}

double static_decay_rate_continuous(const LaplacianMatrix& l, double sigma_max) {
  return static_decay_rate_continuous(spectral_summary(l), sigma_max);
}

double static_decay_rate_broadcast(const SpectralSummary& s, double sigma_max) {
  return (1.0 - sigma_max) * s.min_diagonal / (2.0 * s.min_diagonal + s.norm * sigma_max) *
         s.fiedler;
}

double static_decay_rate_broadcast(const LaplacianMatrix& l, double sigma_max) {
  return static_decay_rate_broadcast(spectral_summary(l), sigma_max);
}

double broadcast_gain_bound(const LaplacianMatrix& l, const SpectralSummary& s,
                            const TriggerParams& p) {
  const double sigma_max = p.sigma_max();
  double min_theta_lii = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < p.size(); ++i) {
    min_theta_lii = std::min(min_theta_lii, p[i].theta * l.diagonal(i));
  }
  const double kd = dynamic_margin(p);
  return std::max(2.0 + s.norm * sigma_max / s.min_diagonal,
                  2.0 * (1.0 - sigma_max) * s.norm / (kd * min_theta_lii));
}

double decay_rate(LawKind kind, const LaplacianMatrix& l, const SpectralSummary& s,
                  const TriggerParams& p) {
  const double sigma_max = p.sigma_max();
  switch (kind) {
    case LawKind::StaticContinuous: return static_decay_rate_continuous(s, sigma_max);
    case LawKind::StaticBroadcast: return static_decay_rate_broadcast(s, sigma_max);
    case LawKind::DynamicContinuous:
      return std::min((1.0 - sigma_max) * s.fiedler, dynamic_margin(p));
    case LawKind::DynamicBroadcast: {
      const double kx = broadcast_gain_bound(l, s, p);
      return std::min(s.fiedler / kx * (1.0 - sigma_max), dynamic_margin(p) / 2.0);
    }
  }
  return 0.0;
}

double dynamic_decay_rate(LawKind kind, const LaplacianMatrix& l, const TriggerParams& p) {
  return decay_rate(kind, l, spectral_summary(l), p);
}

double DecayEnvelope::operator()(double t) const noexcept {
  return slack * initial * std::exp(-rate * t);
}

EnvelopeCheck check_envelope(std::span<const SeriesPoint> series, const DecayEnvelope& env) {
  for (std::size_t k = 0; k < series.size(); ++k) {
    const double bound = env(series[k].t);
    if (series[k].value > bound) {
      return {false, EnvelopeViolation{k, series[k].t, series[k].value, bound}};
    }
  }
  return {};
}

InterEventStats inter_event_stats(std::span<const EventRecord> events, std::size_t n) {
  InterEventStats s;
  s.counts.assign(n, 0);
  std::vector<std::optional<double>> last(n);
  double gap_sum = 0.0;
  std::size_t gap_count = 0;
  for (const EventRecord& ev : events) {
    ++s.counts.at(ev.agent);
    ++s.total;
    if (last[ev.agent]) {
      const double gap = ev.time - *last[ev.agent];
      s.min_gap = s.min_gap ? std::min(*s.min_gap, gap) : gap;
      gap_sum += gap;
      ++gap_count;
    }
    last[ev.agent] = ev.time;
  }
  if (gap_count > 0) s.mean_gap = gap_sum / static_cast<double>(gap_count);
  return s;
}

}  // namespace etcons
