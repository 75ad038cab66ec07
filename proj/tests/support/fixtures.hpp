#pragma once

#include <vector>

#include "etcons/graph.hpp"
#include "etcons/simulator.hpp"
#include "etcons/triggering.hpp"

namespace etcons::testing {

/// Four-agent weighted reference network.
inline std::vector<std::vector<double>> network_adjacency() {
  return {{0.0, 3.4, 0.0, 0.0},
          {3.4, 0.0, 2.1, 4.3},
          {0.0, 2.1, 0.0, 1.1},
          {0.0, 4.3, 1.1, 0.0}};
}

inline std::vector<double> network_x0() { return {6.2945, 8.1158, -7.4603, 8.2675}; }

/// Reference average of network_x0(), rounded to four decimals.
inline constexpr double kPrintedMean = 3.8044;

inline AgentParams default_agent_params() {
  return AgentParams{.sigma = 0.5, .beta = 1.0, .xi = 1.0, .theta = 1.0, .internal0 = 10.0};
}

inline SimConfig network_config(LawKind law, double t_final = 10.0) {
  return SimConfig{
      .graph = build_graph(network_adjacency()),
      .x0 = network_x0(),
      .law = law,
      .params = TriggerParams::uniform(4, default_agent_params()),
      .t_final = t_final,
  };
}

inline std::vector<std::vector<double>> pair_adjacency() { return {{0.0, 1.0}, {1.0, 0.0}}; }

inline std::vector<std::vector<double>> path3_adjacency() {
  return {{0.0, 1.0, 0.0}, {1.0, 0.0, 1.0}, {0.0, 1.0, 0.0}};
}

/// Two agents, one unit edge, distinct sigmas so the agents do not trigger in
/// lockstep.
inline SimConfig pair_config(LawKind law, double t_final = 2.0) {
  TriggerParams p = TriggerParams::uniform(2, default_agent_params());
  p.agents[1].sigma = 0.3;
  return SimConfig{
      .graph = build_graph(pair_adjacency()),
      .x0 = {1.0, -2.0},
      .law = law,
      .params = p,
      .t_final = t_final,
  };
}

inline SimConfig path3_config(LawKind law, double t_final = 2.0) {
  return SimConfig{
      .graph = build_graph(path3_adjacency()),
      .x0 = {3.0, 0.5, -1.0},
      .law = law,
      .params = TriggerParams::uniform(3, default_agent_params()),
      .t_final = t_final,
  };
}

}  // namespace etcons::testing
