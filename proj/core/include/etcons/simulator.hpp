#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "etcons/event_log.hpp"
#include "etcons/graph.hpp"
#include "etcons/triggering.hpp"

namespace etcons {

/// Full description of one experiment.
struct SimConfig {
  WeightedGraph graph;
  std::vector<double> x0;
  LawKind law = LawKind::StaticContinuous;
  TriggerParams params;
  double t_final = 10.0;
  double dt = 1e-3;
  double event_tol = 1e-9;
  double zeno_floor = 1e-7;
  std::size_t sample_stride = 10;
  /// When set, x0 was drawn from `x0_range` with this seed.
  std::optional<std::uint64_t> seed;
  std::array<double, 2> x0_range{-10.0, 10.0};

  friend bool operator==(const SimConfig&, const SimConfig&) = default;
};

/// Throws Error(InvalidConfig) or the ParamError from validate_params.
void validate_config(const SimConfig& cfg);

/// Uniform draws on [lo, hi) from a 64-bit Mersenne twister. The mapping
/// from raw bits to doubles is done here so results do not depend on the
/// standard library's distribution implementation.
std::vector<double> random_initial_states(std::size_t n, std::uint64_t seed, double lo, double hi);

struct Sample {
  double t = 0.0;
  std::vector<double> x;
  /// Empty for static laws.
  std::vector<double> internal;
  double v = 0.0;
  /// W (dynamic continuous), F (dynamic broadcast) or V (static laws).
  double lyapunov = 0.0;

  friend bool operator==(const Sample&, const Sample&) = default;
};

struct RunSummary {
  double mean0 = 0.0;
  double final_error = 0.0;
  std::vector<std::size_t> event_counts;
  std::size_t total_events = 0;
  std::optional<double> min_gap;
  std::optional<double> mean_gap;
  double wall_seconds = 0.0;
};

struct SimResult {
  std::vector<Sample> samples;
  std::vector<EventRecord> events;
  RunSummary summary;
};

/// Snapshot of the coupled system between events.
struct SystemState {
  double t = 0.0;
  std::vector<double> x;
  std::vector<double> x_hat;
  std::vector<double> internal;
  /// Piecewise constant controls u = -L x_hat.
  std::vector<double> u;
};

struct LocalizedEvent {
  SystemState state;
  std::vector<std::size_t> agents;
};

/// RK4 substeps used for the internal variables never exceed this length.
inline constexpr double kMaxInternalSubstep = 1e-3;

inline constexpr int kMaxBisectionIterations = 60;

/// Consecutive sub-floor inter-event gaps tolerated before ZenoGuard.
inline constexpr int kZenoStreakLimit = 10;

/// Bisection for the first time in (t0, t1] at which `fired` becomes true,
/// assuming fired(t0) is false. Returns the right end of the final bracket,
/// or nullopt if fired(t1) is false.
std::optional<double> localize_first(const std::function<bool(double)>& fired, double t0,
                                     double t1, double tol,
                                     int max_iter = kMaxBisectionIterations);

/// Classical RK4 for a scalar ODE y' = f(t, y) over [t0, t0 + h], split into
/// equal substeps no longer than `max_substep`.
double rk4_integrate(const std::function<double(double, double)>& f, double t0, double y0,
                     double h, double max_substep = kMaxInternalSubstep);

/// Event-driven simulator for one configuration. States are integrated
/// exactly between events (controls are piecewise constant); internal
/// variables use RK4. Not thread-safe; independent instances are.
class Simulator {
 public:
  explicit Simulator(SimConfig cfg);

  const SimConfig& config() const noexcept { return cfg_; }
  const LaplacianMatrix& laplacian_matrix() const noexcept { return lap_; }
  double mean0() const noexcept { return mean0_; }

  /// t = 0 with every agent triggered once.
  void reset();
  const SystemState& state() const noexcept { return state_; }
  const SimResult& result() const noexcept { return result_; }

  /// Advances `s` by h assuming no event inside (s.t, s.t + h].
  SystemState integrate_step(const SystemState& s, double h) const;

  bool fires(const SystemState& s, std::size_t agent) const;
  std::vector<std::size_t> firing_agents(const SystemState& s) const;

  /// Looks for a trigger in (s.t, s.t + h]: the step end and the interior
  /// maxima of each agent's trigger margin are probed, then the earliest
  /// violation is bracketed and bisected to event_tol. Agents whose condition
  /// fires within event_tol of the localized time are reported together.
  std::optional<LocalizedEvent> detect_and_localize(const SystemState& s, double h) const;

  /// Broadcasts agent's current state at the current time and updates the
  /// controls it influences. Throws ZenoGuardError.
  void apply_event(std::size_t agent);

  /// Integrates to absolute time t_end, processing every event on the way.
  void advance_to(double t_end);

  /// Runs [0, t_final] from scratch.
  SimResult run();

 private:
  double signal(const SystemState& s, std::size_t i) const;
  std::vector<double> interior_probes(const SystemState& s, double h) const;
  void settle();
  void record_sample();
  void finalize_summary(double wall_seconds);

  SimConfig cfg_;
  LaplacianMatrix lap_;
  double mean0_ = 0.0;
  SystemState state_;
  SimResult result_;
  std::vector<std::size_t> sequence_;
  std::vector<double> last_trigger_;
  std::vector<int> short_gap_streak_;
};

SimResult run(const SimConfig& cfg);

}  // namespace etcons
