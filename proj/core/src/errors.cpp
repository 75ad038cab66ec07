#include "etcons/errors.hpp"

#include <sstream>

namespace etcons {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::AsymmetricWeights: return "AsymmetricWeights";
    case ErrorKind::NegativeWeight: return "NegativeWeight";
    case ErrorKind::NonzeroDiagonal: return "NonzeroDiagonal";
    case ErrorKind::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorKind::InvalidDimensions: return "InvalidDimensions";
    case ErrorKind::SigmaOutOfRange: return "SigmaOutOfRange";
    case ErrorKind::XiOutOfRange: return "XiOutOfRange";
    case ErrorKind::ThetaTooSmall: return "ThetaTooSmall";
    case ErrorKind::NonpositiveBeta: return "NonpositiveBeta";
    case ErrorKind::NonpositiveInternal0: return "NonpositiveInternal0";
    case ErrorKind::NonpositiveInternal: return "NonpositiveInternal";
    case ErrorKind::NumericalFailure: return "NumericalFailure";
    case ErrorKind::ZenoGuard: return "ZenoGuard";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

std::string compose(ErrorKind kind, const std::string& message) {
  std::string out{to_string(kind)};
  out += ": ";
  out += message;
  return out;
}

std::string pair_message(std::size_t row, std::size_t col, const std::string& detail) {
  std::ostringstream os;
  os << "at (" << row + 1 << ", " << col + 1 << "): " << detail;
  return os.str();
}

std::string agent_message(std::size_t agent, const std::string& detail) {
  std::ostringstream os;
  os << "agent " << agent + 1 << ": " << detail;
  return os.str();
}

std::string zeno_message(std::size_t agent, double time) {
  std::ostringstream os;
  os.precision(17);
  os << "agent " << agent + 1 << " triggered repeatedly below the inter-event floor at t=" << time;
  return os.str();
}

}  // namespace

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(compose(kind, message)), kind_(kind) {}

GraphError::GraphError(ErrorKind kind, std::size_t row, std::size_t col, const std::string& detail)
    : Error(kind, pair_message(row, col, detail)), row_(row), col_(col) {}

ParamError::ParamError(ErrorKind kind, std::size_t agent, const std::string& detail,
                       std::optional<double> bound)
    : Error(kind, agent_message(agent, detail)), agent_(agent), bound_(bound) {}

ZenoGuardError::ZenoGuardError(std::size_t agent, double time,
                               std::shared_ptr<const SimResult> partial)
    : Error(ErrorKind::ZenoGuard, zeno_message(agent, time)),
      agent_(agent),
      time_(time),
      partial_(std::move(partial)) {}

}  // namespace etcons
