#include "report.hpp"

#include <cstdio>
#include <fstream>

#include "etcons/errors.hpp"
#include "etcons/metrics.hpp"

namespace etcons::cli {

namespace {

std::ofstream open_for_write(const std::filesystem::path& p) {
  std::ofstream out(p);
  if (!out) throw Error(ErrorKind::InvalidConfig, "InvalidConfig: cannot write " + p.string());
  return out;
}

nlohmann::ordered_json optional_number(const std::optional<double>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

RunReport make_report(const SimConfig& cfg, const SimResult& result, bool aborted) {
  RunReport rep{.config = &cfg, .result = &result, .aborted = aborted};
  const LaplacianMatrix l = laplacian(cfg.graph);
  const SpectralSummary s = spectral_summary(l);
  rep.fiedler = s.fiedler;
  rep.spectral_norm = s.norm;
  rep.decay_rate = decay_rate(cfg.law, l, s, cfg.params);
  if (!result.samples.empty()) {
    std::vector<SeriesPoint> series;
    for (const Sample& smp : result.samples) series.push_back({smp.t, smp.lyapunov});
    const DecayEnvelope env{result.samples.front().lyapunov, rep.decay_rate, 1.0};
    rep.envelope_ok = check_envelope(series, env).ok;
  }
  return rep;
}

void write_trajectory(std::ostream& out, const SimConfig& cfg, const SimResult& r) {
  const std::size_t n = cfg.x0.size();
  const char* internal = uses_broadcast_signal(cfg.law) ? "chi_" : "eta_";
  out << "t";
  for (std::size_t i = 0; i < n; ++i) out << ",x_" << i + 1;
  if (is_dynamic(cfg.law)) {
    for (std::size_t i = 0; i < n; ++i) out << "," << internal << i + 1;
  }
  out << "\n";
  for (const Sample& s : r.samples) {
    out << format_double(s.t);
    for (double x : s.x) out << "," << format_double(x);
    for (double v : s.internal) out << "," << format_double(v);
    out << "\n";
  }
}

void write_events(std::ostream& out, const SimResult& r) {
  out << "agent,k,time,broadcast_value\n";
  for (const EventRecord& e : r.events) {
    out << e.agent + 1 << "," << e.sequence << "," << format_double(e.time) << ","
        << format_double(e.broadcast_value) << "\n";
  }
}

void write_metrics(std::ostream& out, const RunReport& rep) {
  const auto& samples = rep.result->samples;
  out << "t,V,W_or_F,envelope\n";
  if (samples.empty()) return;
  const DecayEnvelope env{samples.front().lyapunov, rep.decay_rate, 1.0};
  for (const Sample& s : samples) {
    out << format_double(s.t) << "," << format_double(s.v) << "," << format_double(s.lyapunov)
        << "," << format_double(env(s.t)) << "\n";
  }
}

nlohmann::ordered_json summary_json(const RunReport& rep) {
  const SimConfig& cfg = *rep.config;
  const SimResult& r = *rep.result;
  nlohmann::ordered_json j;
  j["law"] = std::string(law_name(cfg.law));
  j["status"] = rep.aborted ? "zeno-guard" : "ok";
  j["agents"] = cfg.x0.size();

  nlohmann::ordered_json sim;
  sim["t_final"] = cfg.t_final;
  sim["dt"] = cfg.dt;
  sim["event_tol"] = cfg.event_tol;
  sim["zeno_floor"] = cfg.zeno_floor;
  sim["sample_stride"] = cfg.sample_stride;
  j["sim"] = sim;
  nlohmann::ordered_json params = nlohmann::ordered_json::array();
  for (const AgentParams& p : cfg.params.agents) {
    params.push_back({{"sigma", p.sigma}, {"beta", p.beta}, {"xi", p.xi}, {"theta", p.theta},
                      {"internal0", p.internal0}});
  }
  j["params"] = params;
  j["x0"] = cfg.x0;
  if (cfg.seed) j["seed"] = *cfg.seed;

  j["mean0"] = r.summary.mean0;
  j["final_time"] = r.samples.empty() ? 0.0 : r.samples.back().t;
  j["final_states"] = r.samples.empty() ? std::vector<double>{} : r.samples.back().x;
  j["final_error"] = r.summary.final_error;
  j["event_counts"] = r.summary.event_counts;
  j["total_events"] = r.summary.total_events;
  j["min_gap"] = optional_number(r.summary.min_gap);
  j["mean_gap"] = optional_number(r.summary.mean_gap);
  j["samples"] = r.samples.size();
  j["fiedler"] = rep.fiedler;
  j["spectral_norm"] = rep.spectral_norm;
  j["decay_rate"] = rep.decay_rate;
  j["envelope_ok"] = rep.envelope_ok;
  j["wall_seconds"] = r.summary.wall_seconds;
  return j;
}

void write_run_artifacts(const std::filesystem::path& dir, const RunReport& rep) {
  std::filesystem::create_directories(dir);
  {
    auto out = open_for_write(dir / "trajectory.csv");
    write_trajectory(out, *rep.config, *rep.result);
  }
  {
    auto out = open_for_write(dir / "events.csv");
    write_events(out, *rep.result);
  }
  {
    auto out = open_for_write(dir / "metrics.csv");
    write_metrics(out, rep);
  }
  auto out = open_for_write(dir / "summary.json");
  out << summary_json(rep).dump(2) << "\n";
}

void write_comparison(std::ostream& out, std::size_t n, const std::vector<ComparisonRow>& rows) {
  out << "law";
  for (std::size_t i = 0; i < n; ++i) out << ",count_" << i + 1;
  out << ",total,min_gap,final_error,status\n";
  for (const ComparisonRow& row : rows) {
    const RunSummary& s = row.result.summary;
    out << law_name(row.law);
    for (std::size_t c : s.event_counts) out << "," << c;
    out << "," << s.total_events << "," << (s.min_gap ? format_double(*s.min_gap) : "")
        << "," << format_double(s.final_error) << "," << row.status << "\n";
  }
}

std::string verdict(const RunReport& rep) {
  const RunSummary& s = rep.result->summary;
  const double t_end = rep.result->samples.empty() ? 0.0 : rep.result->samples.back().t;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "%s: %s at t=%g, consensus error %.3e, %zu events, min gap %s, envelope %s",
                std::string(law_name(rep.config->law)).c_str(),
                rep.aborted ? "ABORTED (zeno guard)" : "completed", t_end, s.final_error,
                s.total_events, s.min_gap ? format_double(*s.min_gap).c_str() : "n/a",
                rep.envelope_ok ? "ok" : "violated");
  return buf;
}

}  // namespace etcons::cli
