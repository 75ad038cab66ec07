// Prints the regression constants frozen into the test suites. Everything
// spectral comes from the characteristic-polynomial oracle, never from the
// library's Jacobi solver.

#include <cstdio>
#include <string>

#include "etcons/metrics.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace etcons;

int main() {
  const auto g = build_graph(testing::network_adjacency());
  const auto l = laplacian(g);
  const auto eig = oracle::polynomial_eigenvalues(l);
  std::printf("network eigenvalues:");
  for (double e : eig) std::printf(" %.17g", e);
  std::printf("\n");

  SpectralSummary s{eig[1], eig.back(), l.min_diagonal()};
  const auto params = TriggerParams::uniform(4, testing::default_agent_params());
  for (LawKind k : kAllLaws) {
    std::printf("rate %-20s %.17g\n", std::string(law_name(k)).c_str(), decay_rate(k, l, s, params));
  }

  for (LawKind k : kAllLaws) {
    const auto res = run(testing::network_config(k));
    std::printf("network %-20s total=%zu counts=", std::string(law_name(k)).c_str(),
                res.summary.total_events);
    for (auto c : res.summary.event_counts) std::printf("%zu ", c);
    std::printf("min_gap=%.6g final_error=%.6g wall=%.3fs\n", res.summary.min_gap.value_or(-1),
                res.summary.final_error, res.summary.wall_seconds);
  }

  for (LawKind k : kAllLaws) {
    for (bool pair : {true, false}) {
      const auto cfg = pair ? testing::pair_config(k) : testing::path3_config(k);
      const auto sim = run(cfg);
      const auto ref = oracle::reference_run({cfg, 1e-6});
      std::printf("%s %-20s sim=%zu oracle=%zu\n", pair ? "pair " : "path3",
                  std::string(law_name(k)).c_str(), sim.summary.total_events,
                  ref.summary.total_events);
    }
  }
  return 0;
}
