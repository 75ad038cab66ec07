#include "experiment.hpp"

#include <yaml-cpp/yaml.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace etcons::cli {

ConfigParseError::ConfigParseError(std::string field, int line, const std::string& detail)
    : Error(ErrorKind::ParseError,
            "ParseError: " + (line > 0 ? "line " + std::to_string(line) + ": " : std::string()) +
                "field '" + field + "': " + detail),
      field_(std::move(field)),
      line_(line) {}

namespace {

int line_of(const YAML::Node& n) { return n.Mark().is_null() ? 0 : n.Mark().line + 1; }

[[noreturn]] void fail(const std::string& field, const YAML::Node& at, const std::string& detail) {
  throw ConfigParseError(field, line_of(at), detail);
}

void reject_unknown(const YAML::Node& map, const std::string& where,
                    const std::set<std::string>& allowed) {
  if (!map.IsMap()) fail(where, map, "expected a mapping");
  for (const auto& kv : map) {
    const auto key = kv.first.as<std::string>();
    if (!allowed.count(key)) {
      fail(where.empty() ? key : where + "." + key, kv.first, "unknown key");
    }
  }
}

double scalar(const YAML::Node& n, const std::string& field) {
  if (!n.IsScalar()) fail(field, n, "expected a number");
  double v = 0.0;
  try {
    v = n.as<double>();
  } catch (const YAML::Exception&) {
    fail(field, n, "expected a number, got '" + n.Scalar() + "'");
  }
  if (!std::isfinite(v)) fail(field, n, "must be finite");
  return v;
}

std::vector<double> vector_of(const YAML::Node& n, const std::string& field) {
  if (!n.IsSequence()) fail(field, n, "expected a list of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < n.size(); ++i) {
    out.push_back(scalar(n[i], field + "[" + std::to_string(i + 1) + "]"));
  }
  return out;
}

std::uint64_t unsigned_of(const YAML::Node& n, const std::string& field) {
  if (!n.IsScalar()) fail(field, n, "expected a non-negative integer");
  try {
    return n.as<std::uint64_t>();
  } catch (const YAML::Exception&) {
    fail(field, n, "expected a non-negative integer, got '" + n.Scalar() + "'");
  }
}

WeightedGraph parse_graph(const YAML::Node& node) {
  reject_unknown(node, "graph", {"adjacency"});
  const YAML::Node rows = node["adjacency"];
  if (!rows) fail("graph.adjacency", node, "missing");
  if (!rows.IsSequence()) fail("graph.adjacency", rows, "expected a list of rows");
  std::vector<std::vector<double>> m;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    m.push_back(vector_of(rows[i], "graph.adjacency[" + std::to_string(i + 1) + "]"));
    if (m.back().size() != rows.size()) {
      fail("graph.adjacency[" + std::to_string(i + 1) + "]", rows[i], "row length differs from row count");
    }
  }
  return build_graph(m);
}

void parse_params(const YAML::Node& node, std::size_t n, TriggerParams& out) {
  reject_unknown(node, "params", {"sigma", "beta", "xi", "theta", "internal0"});
  auto field = [&](const char* key, double AgentParams::*member) {
    const YAML::Node v = node[key];
    if (!v) return;
    const std::string name = std::string("params.") + key;
    if (v.IsSequence()) {
      const auto values = vector_of(v, name);
      if (values.size() != n) fail(name, v, "expected " + std::to_string(n) + " entries");
      for (std::size_t i = 0; i < n; ++i) out.agents[i].*member = values[i];
    } else {
      const double s = scalar(v, name);
      for (auto& a : out.agents) a.*member = s;
    }
  };
  field("sigma", &AgentParams::sigma);
  field("beta", &AgentParams::beta);
  field("xi", &AgentParams::xi);
  field("theta", &AgentParams::theta);
  field("internal0", &AgentParams::internal0);
}

void parse_sim(const YAML::Node& node, SimConfig& cfg) {
  reject_unknown(node, "sim", {"t_final", "dt", "event_tol", "zeno_floor", "sample_stride"});
  if (node["t_final"]) cfg.t_final = scalar(node["t_final"], "sim.t_final");
  if (node["dt"]) cfg.dt = scalar(node["dt"], "sim.dt");
  if (node["event_tol"]) cfg.event_tol = scalar(node["event_tol"], "sim.event_tol");
  if (node["zeno_floor"]) cfg.zeno_floor = scalar(node["zeno_floor"], "sim.zeno_floor");
  if (node["sample_stride"]) {
    cfg.sample_stride = static_cast<std::size_t>(unsigned_of(node["sample_stride"], "sim.sample_stride"));
  }
}

void parse_x0(const YAML::Node& node, std::size_t n, SimConfig& cfg) {
  if (node.IsSequence()) {
    cfg.x0 = vector_of(node, "x0");
    if (cfg.x0.size() != n) fail("x0", node, "expected " + std::to_string(n) + " entries");
    return;
  }
  reject_unknown(node, "x0", {"seed", "range"});
  if (!node["seed"]) fail("x0.seed", node, "missing");
  cfg.seed = unsigned_of(node["seed"], "x0.seed");
  if (node["range"]) {
    const auto r = vector_of(node["range"], "x0.range");
    if (r.size() != 2 || !(r[0] < r[1])) fail("x0.range", node["range"], "expected [lo, hi] with lo < hi");
    cfg.x0_range = {r[0], r[1]};
  }
  cfg.x0 = random_initial_states(n, *cfg.seed, cfg.x0_range[0], cfg.x0_range[1]);
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string list(const std::vector<double>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + num(v[i]);
  return s + "]";
}

}  // namespace

SimConfig parse_config(std::string_view text) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::ParserException& e) {
    throw ConfigParseError("<document>", e.mark.line + 1, e.msg);
  }
  if (!root || root.IsNull()) throw ConfigParseError("<document>", 0, "empty document");
  reject_unknown(root, "", {"graph", "x0", "law", "params", "sim"});
  for (const char* key : {"graph", "x0", "law"}) {
    if (!root[key]) throw ConfigParseError(key, 0, "missing");
  }

  SimConfig cfg{.graph = parse_graph(root["graph"]), .x0 = {}, .params = {}, .seed = {}};
  const std::size_t n = cfg.graph.size();

  const YAML::Node law = root["law"];
  if (!law.IsScalar()) fail("law", law, "expected a law name");
  const auto kind = parse_law(law.Scalar());
  if (!kind) fail("law", law, "unknown law '" + law.Scalar() + "'");
  cfg.law = *kind;

  cfg.params = TriggerParams::uniform(n, AgentParams{});
  if (root["params"]) parse_params(root["params"], n, cfg.params);
  if (root["sim"]) parse_sim(root["sim"], cfg);
  parse_x0(root["x0"], n, cfg);

  validate_config(cfg);
  return cfg;
}

SimConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigParseError("<file>", 0, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string emit_config(const SimConfig& cfg) {
  const std::size_t n = cfg.graph.size();
  std::ostringstream out;
  out << "graph:\n  adjacency:\n";
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = cfg.graph.weights().row(i);
    out << "    - " << list({row.begin(), row.end()}) << "\n";
  }
  if (cfg.seed) {
    out << "x0:\n  seed: " << *cfg.seed << "\n  range: "
        << list({cfg.x0_range[0], cfg.x0_range[1]}) << "\n";
  } else {
    out << "x0: " << list(cfg.x0) << "\n";
  }
  out << "law: " << law_name(cfg.law) << "\nparams:\n";
  auto field = [&](const char* key, double AgentParams::*member) {
    std::vector<double> v;
    for (const auto& a : cfg.params.agents) v.push_back(a.*member);
    bool uniform = true;
    for (double x : v) uniform = uniform && x == v.front();
    out << "  " << key << ": " << (uniform ? num(v.front()) : list(v)) << "\n";
  };
  field("sigma", &AgentParams::sigma);
  field("beta", &AgentParams::beta);
  field("xi", &AgentParams::xi);
  field("theta", &AgentParams::theta);
  field("internal0", &AgentParams::internal0);
  out << "sim:\n"
      << "  t_final: " << num(cfg.t_final) << "\n"
      << "  dt: " << num(cfg.dt) << "\n"
      << "  event_tol: " << num(cfg.event_tol) << "\n"
      << "  zeno_floor: " << num(cfg.zeno_floor) << "\n"
      << "  sample_stride: " << cfg.sample_stride << "\n";
  return out.str();
}

SimConfig apply_overrides(SimConfig cfg, const Overrides& o) {
  if (o.law) cfg.law = *o.law;
  if (o.t_final) cfg.t_final = *o.t_final;
  if (o.seed) {
    cfg.seed = *o.seed;
    cfg.x0 = random_initial_states(cfg.x0.size(), *o.seed, cfg.x0_range[0], cfg.x0_range[1]);
  }
  validate_config(cfg);
  return cfg;
}

}  // namespace etcons::cli
