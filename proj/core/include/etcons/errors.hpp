#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace etcons {

enum class ErrorKind {
  // graph
  AsymmetricWeights,
  NegativeWeight,
  NonzeroDiagonal,
  DisconnectedGraph,
  InvalidDimensions,
  // triggering parameters
  SigmaOutOfRange,
  XiOutOfRange,
  ThetaTooSmall,
  NonpositiveBeta,
  NonpositiveInternal0,
  // runtime
  NonpositiveInternal,
  NumericalFailure,
  ZenoGuard,
  // configuration
  InvalidConfig,
  ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Base class for every error raised by the library. The kind is stable and
/// is what callers (the CLI in particular) dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Graph validation failure; `row`/`col` name the first violating pair
/// (zero-based).
class GraphError : public Error {
 public:
  GraphError(ErrorKind kind, std::size_t row, std::size_t col, const std::string& detail);

  std::size_t row() const noexcept { return row_; }
  std::size_t col() const noexcept { return col_; }

 private:
  std::size_t row_;
  std::size_t col_;
};

/// Trigger parameter validation failure for one agent (zero-based index).
/// For ThetaTooSmall, `bound()` holds (1 - xi) / beta.
class ParamError : public Error {
 public:
  ParamError(ErrorKind kind, std::size_t agent, const std::string& detail,
             std::optional<double> bound = std::nullopt);

  std::size_t agent() const noexcept { return agent_; }
  std::optional<double> bound() const noexcept { return bound_; }

 private:
  std::size_t agent_;
  std::optional<double> bound_;
};

struct SimResult;

/// Raised when an agent keeps triggering faster than the configured floor.
/// Carries the run up to and including the offending event.
class ZenoGuardError : public Error {
 public:
  ZenoGuardError(std::size_t agent, double time, std::shared_ptr<const SimResult> partial);

  std::size_t agent() const noexcept { return agent_; }
  double time() const noexcept { return time_; }
  const std::shared_ptr<const SimResult>& partial() const noexcept { return partial_; }

 private:
  std::size_t agent_;
  double time_;
  std::shared_ptr<const SimResult> partial_;
};

}  // namespace etcons
