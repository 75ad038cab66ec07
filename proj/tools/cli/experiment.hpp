#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "etcons/errors.hpp"
#include "etcons/simulator.hpp"

namespace etcons::cli {

/// Malformed or incomplete experiment file. `line` is 1-based, 0 when the
/// problem is not tied to a position (missing key, unreadable file).
class ConfigParseError : public Error {
 public:
  ConfigParseError(std::string field, int line, const std::string& detail);
  const std::string& field() const noexcept { return field_; }
  int line() const noexcept { return line_; }

 private:
  std::string field_;
  int line_;
};

/// Parses an experiment document and validates the result. Missing `params`
/// and `sim` entries take their defaults; `graph`, `x0` and `law` are
/// required.
SimConfig parse_config(std::string_view text);
SimConfig load_config(const std::filesystem::path& path);

/// Inverse of parse_config: parse_config(emit_config(c)) == c.
std::string emit_config(const SimConfig& cfg);

struct Overrides {
  std::optional<LawKind> law;
  std::optional<double> t_final;
  /// Redraws x0 from the configured range.
  std::optional<std::uint64_t> seed;
};

/// Applies command-line overrides and revalidates.
SimConfig apply_overrides(SimConfig cfg, const Overrides& o);

}  // namespace etcons::cli
