#pragma once

#include <cstddef>

namespace etcons {

/// One trigger of one agent. `sequence` is k in t^i_k, starting at 1 for the
/// t = 0 trigger every agent performs.
struct EventRecord {
  std::size_t agent = 0;
  double time = 0.0;
  std::size_t sequence = 1;
  double broadcast_value = 0.0;

  friend bool operator==(const EventRecord&, const EventRecord&) = default;
};

}  // namespace etcons
