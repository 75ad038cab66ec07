#include "etcons/simulator.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <memory>
#include <random>
#include <sstream>

#include "etcons/dynamics.hpp"
#include "etcons/errors.hpp"
#include "etcons/metrics.hpp"

namespace etcons {

void validate_config(const SimConfig& cfg) {
  const std::size_t n = cfg.graph.size();
  auto fail = [](const std::string& msg) { throw Error(ErrorKind::InvalidConfig, msg); };
  if (cfg.x0.size() != n) fail("x0 length does not match the number of agents");
  for (double v : cfg.x0) {
    if (!std::isfinite(v)) fail("x0 entries must be finite");
  }
  if (cfg.params.size() != n) fail("parameter count does not match the number of agents");
  for (double v : {cfg.t_final, cfg.dt, cfg.event_tol, cfg.zeno_floor}) {
    if (!std::isfinite(v) || !(v > 0.0)) fail("t_final, dt, event_tol and zeno_floor must be positive");
  }
  if (cfg.dt > cfg.t_final) fail("dt must not exceed t_final");
  if (!(cfg.event_tol < cfg.dt)) fail("event_tol must be smaller than dt");
  if (!(cfg.zeno_floor < cfg.dt)) fail("zeno_floor must be smaller than dt");
  if (cfg.sample_stride < 1) fail("sample_stride must be at least 1");
  if (!(cfg.x0_range[0] < cfg.x0_range[1])) fail("x0 range must be increasing");
  validate_params(cfg.params, cfg.law);
}

std::vector<double> random_initial_states(std::size_t n, std::uint64_t seed, double lo, double hi) {
  std::mt19937_64 gen(seed);
  std::vector<double> out(n);
  for (auto& v : out) {
    const double unit = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    v = lo + (hi - lo) * unit;
  }
  return out;
}

std::optional<double> localize_first(const std::function<bool(double)>& fired, double t0,
                                     double t1, double tol, int max_iter) {
  if (!fired(t1)) return std::nullopt;
  double lo = t0;
  double hi = t1;
  for (int it = 0; it < max_iter && hi - lo > tol; ++it) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    if (fired(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

double rk4_integrate(const std::function<double(double, double)>& f, double t0, double y0,
                     double h, double max_substep) {
  if (h <= 0.0) return y0;
  const auto steps = static_cast<std::size_t>(std::ceil(h / max_substep));
  const double hs = h / static_cast<double>(steps);
  double y = y0;
  for (std::size_t k = 0; k < steps; ++k) {
    const double t = t0 + static_cast<double>(k) * hs;
    const double k1 = f(t, y);
    const double k2 = f(t + 0.5 * hs, y + 0.5 * hs * k1);
    const double k3 = f(t + 0.5 * hs, y + 0.5 * hs * k2);
    const double k4 = f(t + hs, y + hs * k3);
    y += hs / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return y;
}

Simulator::Simulator(SimConfig cfg) : cfg_(std::move(cfg)), lap_(laplacian(cfg_.graph)) {
  validate_config(cfg_);
  double s = 0.0;
  for (double v : cfg_.x0) s += v;
  mean0_ = s / static_cast<double>(cfg_.x0.size());
  reset();
}

void Simulator::reset() {
  const std::size_t n = cfg_.x0.size();
  state_ = SystemState{};
  state_.t = 0.0;
  state_.x = cfg_.x0;
  state_.x_hat = cfg_.x0;
  if (is_dynamic(cfg_.law)) {
    state_.internal.resize(n);
    for (std::size_t i = 0; i < n; ++i) state_.internal[i] = cfg_.params[i].internal0;
  }
  state_.u.resize(n);
  for (std::size_t i = 0; i < n; ++i) state_.u[i] = control_input(i, lap_, state_.x_hat);

  result_ = SimResult{};
  sequence_.assign(n, 1);
  last_trigger_.assign(n, 0.0);
  short_gap_streak_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    result_.events.push_back(EventRecord{i, 0.0, 1, state_.x_hat[i]});
  }
  record_sample();
}

double Simulator::signal(const SystemState& s, std::size_t i) const {
  return uses_broadcast_signal(cfg_.law) ? local_disagreement_q(i, lap_, s.x_hat)
                                         : local_disagreement_q(i, lap_, s.x);
}

SystemState Simulator::integrate_step(const SystemState& s, double h) const {
  const std::size_t n = s.x.size();
  SystemState next = s;
  next.t = s.t + h;
  for (std::size_t i = 0; i < n; ++i) next.x[i] = s.x[i] + h * s.u[i];

  if (is_dynamic(cfg_.law)) {
    const bool broadcast = uses_broadcast_signal(cfg_.law);
    for (std::size_t i = 0; i < n; ++i) {
      const AgentParams& p = cfg_.params[i];
      const double lii = lap_.diagonal(i);
      const double qhat = broadcast ? local_disagreement_q(i, lap_, s.x_hat) : 0.0;
      // tau is the offset from s.t; x(tau) = x + tau * u exactly.
      auto rhs = [&](double tau, double internal) {
        const double e = s.x_hat[i] - (s.x[i] + tau * s.u[i]);
        double q = qhat;
        if (!broadcast) {
          q = 0.0;
          for (std::size_t j = 0; j < n; ++j) {
            if (j == i || lap_(i, j) == 0.0) continue;
            const double d = (s.x[j] + tau * s.u[j]) - (s.x[i] + tau * s.u[i]);
            q -= 0.5 * lap_(i, j) * d * d;
          }
        }
        return internal_derivative(internal, q, e, p, lii);
      };
      next.internal[i] = rk4_integrate(rhs, 0.0, s.internal[i], h);
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(next.x[i]) || (!next.internal.empty() && !std::isfinite(next.internal[i]))) {
      std::ostringstream os;
      os.precision(17);
      os << "non-finite state for agent " << i + 1 << " at t=" << next.t;
      throw Error(ErrorKind::NumericalFailure, os.str());
    }
  }
  return next;
}

bool Simulator::fires(const SystemState& s, std::size_t i) const {
  const double e = s.x_hat[i] - s.x[i];
  const double q = signal(s, i);
  const double lii = lap_.diagonal(i);
  if (is_dynamic(cfg_.law)) return dynamic_check(e, q, s.internal[i], cfg_.params[i], lii);
  return static_check(e, q, cfg_.params[i].sigma, lii);
}

std::vector<std::size_t> Simulator::firing_agents(const SystemState& s) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < s.x.size(); ++i) {
    if (fires(s, i)) out.push_back(i);
  }
  return out;
}

std::vector<double> Simulator::interior_probes(const SystemState& s, double h) const {
  // Between events e_i is linear in tau and q_i quadratic (q̂_i constant), so
  // L_ii e_i^2 - sigma_i/2 q_i is a quadratic A tau^2 + B tau + C. When it is
  // concave its maximum can sit strictly inside the step while both ends are
  // unfired; those vertices are probed explicitly.
  const std::size_t n = s.x.size();
  const bool broadcast = uses_broadcast_signal(cfg_.law);
  std::vector<double> probes;
  for (std::size_t i = 0; i < n; ++i) {
    const double lii = lap_.diagonal(i);
    const double sigma = cfg_.params[i].sigma;
    const double e0 = s.x_hat[i] - s.x[i];
    double a = lii * s.u[i] * s.u[i];
    double b = -2.0 * lii * e0 * s.u[i];
    if (!broadcast) {
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || lap_(i, j) == 0.0) continue;
        const double w = -lap_(i, j);
        const double d = s.x[j] - s.x[i];
        const double dd = s.u[j] - s.u[i];
        a -= sigma / 2.0 * 0.5 * w * dd * dd;
        b -= sigma / 2.0 * w * d * dd;
      }
    }
    if (a < 0.0) {
      const double vertex = -b / (2.0 * a);
      if (vertex > 0.0 && vertex < h) probes.push_back(vertex);
    }
  }
  std::sort(probes.begin(), probes.end());
  return probes;
}

std::optional<LocalizedEvent> Simulator::detect_and_localize(const SystemState& s,
                                                             double h) const {
  auto any_fired = [&](double tau) { return !firing_agents(integrate_step(s, tau)).empty(); };

  // Bracket the first firing: the earliest probe (or the step end) at which
  // some condition is violated.
  double lo = 0.0;
  double hi = h;
  for (double probe : interior_probes(s, h)) {
    if (any_fired(probe)) {
      hi = probe;
      break;
    }
    lo = probe;
  }
  const auto tau = localize_first(any_fired, lo, hi, cfg_.event_tol);
  if (!tau) return std::nullopt;

  LocalizedEvent ev{integrate_step(s, *tau), {}};
  ev.agents = firing_agents(ev.state);
  if (*tau < h) {
    const auto ahead = firing_agents(integrate_step(s, std::min(*tau + cfg_.event_tol, h)));
    for (std::size_t a : ahead) {
      if (std::find(ev.agents.begin(), ev.agents.end(), a) == ev.agents.end()) {
        ev.agents.push_back(a);
      }
    }
    std::sort(ev.agents.begin(), ev.agents.end());
  }
  return ev;
}

void Simulator::apply_event(std::size_t agent) {
  const double t = state_.t;
  const double gap = t - last_trigger_[agent];

  state_.x_hat[agent] = state_.x[agent];
  for (std::size_t j = 0; j < lap_.size(); ++j) {
    if (j == agent || lap_(j, agent) != 0.0) state_.u[j] = control_input(j, lap_, state_.x_hat);
  }
  ++sequence_[agent];
  last_trigger_[agent] = t;
  result_.events.push_back(EventRecord{agent, t, sequence_[agent], state_.x_hat[agent]});

  short_gap_streak_[agent] = gap < cfg_.zeno_floor ? short_gap_streak_[agent] + 1 : 0;
  if (short_gap_streak_[agent] >= kZenoStreakLimit) {
    record_sample();
    finalize_summary(0.0);
    throw ZenoGuardError(agent, t, std::make_shared<const SimResult>(result_));
  }
}

void Simulator::settle() {
  // A broadcast changes neighbours' controls and (for broadcast laws) their
  // signal, so neighbours may have to fire at the same instant.
  for (auto fired = firing_agents(state_); !fired.empty(); fired = firing_agents(state_)) {
    for (std::size_t a : fired) apply_event(a);
  }
}

void Simulator::advance_to(double t_end) {
  while (state_.t < t_end) {
    const double h = t_end - state_.t;
    auto ev = detect_and_localize(state_, h);
    if (!ev) {
      state_ = integrate_step(state_, h);
      state_.t = t_end;
      return;
    }
    state_ = std::move(ev->state);
    if (t_end - state_.t <= 2.0 * std::numeric_limits<double>::epsilon() * t_end) {
      state_.t = t_end;
    }
    for (std::size_t a : ev->agents) apply_event(a);
    settle();
    record_sample();
  }
}

void Simulator::record_sample() {
  if (!result_.samples.empty() && !(state_.t > result_.samples.back().t)) return;
  Sample s;
  s.t = state_.t;
  s.x = state_.x;
  s.internal = state_.internal;
  s.v = lyapunov_v(s.x, mean0_);
  s.lyapunov = s.internal.empty() ? s.v : lyapunov_w(s.v, s.internal);
  result_.samples.push_back(std::move(s));
}

void Simulator::finalize_summary(double wall_seconds) {
  RunSummary& sum = result_.summary;
  sum.mean0 = mean0_;
  sum.final_error = 0.0;
  for (double v : state_.x) sum.final_error = std::max(sum.final_error, std::abs(v - mean0_));
  const auto stats = inter_event_stats(result_.events, cfg_.x0.size());
  sum.event_counts = stats.counts;
  sum.total_events = stats.total;
  sum.min_gap = stats.min_gap;
  sum.mean_gap = stats.mean_gap;
  sum.wall_seconds = wall_seconds;
}

SimResult Simulator::run() {
  const auto start = std::chrono::steady_clock::now();
  reset();
  const auto steps = static_cast<std::size_t>(std::ceil(cfg_.t_final / cfg_.dt - 1e-9));
  for (std::size_t k = 1; k <= steps; ++k) {
    const double t_end = k == steps ? cfg_.t_final : static_cast<double>(k) * cfg_.dt;
    advance_to(t_end);
    if (k % cfg_.sample_stride == 0 || k == steps) record_sample();
  }
  const std::chrono::duration<double> wall = std::chrono::steady_clock::now() - start;
  finalize_summary(wall.count());
  return result_;
}

SimResult run(const SimConfig& cfg) { return Simulator(cfg).run(); }

}  // namespace etcons
