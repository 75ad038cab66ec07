#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "etcons/simulator.hpp"

namespace etcons::cli {

/// Decay data attached to a finished run.
struct RunReport {
  const SimConfig* config = nullptr;
  const SimResult* result = nullptr;
  double fiedler = 0.0;
  double spectral_norm = 0.0;
  /// Envelope rate for the law's Lyapunov function (V for static laws).
  double decay_rate = 0.0;
  bool envelope_ok = true;
  bool aborted = false;
};

RunReport make_report(const SimConfig& cfg, const SimResult& result, bool aborted = false);

/// %.17g, the only float format used in any artifact.
std::string format_double(double v);

// Column orders:
//   trajectory.csv  t, x_1..x_n[, eta_1..eta_n | chi_1..chi_n]
//   events.csv      agent, k, time, broadcast_value   (agent is 1-based)
//   metrics.csv     t, V, W_or_F, envelope
//   comparison.csv  law, count_1..count_n, total, min_gap, final_error, status
void write_trajectory(std::ostream& out, const SimConfig& cfg, const SimResult& r);
void write_events(std::ostream& out, const SimResult& r);
void write_metrics(std::ostream& out, const RunReport& rep);
nlohmann::ordered_json summary_json(const RunReport& rep);

/// Writes trajectory.csv, events.csv, metrics.csv and summary.json to `dir`.
void write_run_artifacts(const std::filesystem::path& dir, const RunReport& rep);

struct ComparisonRow {
  LawKind law;
  SimResult result;
  std::string status;
};

void write_comparison(std::ostream& out, std::size_t n, const std::vector<ComparisonRow>& rows);

/// One line, e.g. "dynamic-continuous: consensus error 1.39e-03 at t=10, 69 events, ...".
std::string verdict(const RunReport& rep);

}  // namespace etcons::cli
