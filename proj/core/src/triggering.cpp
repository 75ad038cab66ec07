#include "etcons/triggering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "etcons/errors.hpp"

namespace etcons {

std::string_view law_name(LawKind k) noexcept {
  switch (k) {
    case LawKind::StaticContinuous: return "static-continuous";
    case LawKind::DynamicContinuous: return "dynamic-continuous";
    case LawKind::StaticBroadcast: return "static-broadcast";
    case LawKind::DynamicBroadcast: return "dynamic-broadcast";
  }
  return "unknown";
}

std::optional<LawKind> parse_law(std::string_view name) noexcept {
  for (LawKind k : kAllLaws) {
    if (law_name(k) == name) return k;
  }
  return std::nullopt;
}

double TriggerParams::sigma_max() const noexcept {
  double m = 0.0;
  for (const auto& a : agents) m = std::max(m, a.sigma);
  return m;
}

const TriggerParams& validate_params(const TriggerParams& p, LawKind kind) {
  const bool dynamic = is_dynamic(kind);
  for (std::size_t i = 0; i < p.size(); ++i) {
    const AgentParams& a = p[i];
    auto finite = [&](double v, ErrorKind kind, const char* field) {
      if (!std::isfinite(v)) throw ParamError(kind, i, std::string(field) + " is not finite");
    };
    finite(a.sigma, ErrorKind::SigmaOutOfRange, "sigma");
    if (dynamic) {
      if (!(a.sigma >= 0.0 && a.sigma < 1.0)) {
        throw ParamError(ErrorKind::SigmaOutOfRange, i, "sigma must lie in [0, 1)");
      }
      finite(a.beta, ErrorKind::NonpositiveBeta, "beta");
      finite(a.xi, ErrorKind::XiOutOfRange, "xi");
      finite(a.theta, ErrorKind::ThetaTooSmall, "theta");
      finite(a.internal0, ErrorKind::NonpositiveInternal0, "internal0");
      if (!(a.beta > 0.0)) throw ParamError(ErrorKind::NonpositiveBeta, i, "beta must be > 0");
      if (!(a.xi >= 0.0 && a.xi <= 1.0)) {
        throw ParamError(ErrorKind::XiOutOfRange, i, "xi must lie in [0, 1]");
      }
      if (!(a.internal0 > 0.0)) {
        throw ParamError(ErrorKind::NonpositiveInternal0, i, "initial internal value must be > 0");
      }
      const double bound = (1.0 - a.xi) / a.beta;
      if (!(a.theta > bound)) {
        std::ostringstream os;
        os.precision(17);
        os << "theta=" << a.theta << " must exceed (1 - xi)/beta = " << bound;
        throw ParamError(ErrorKind::ThetaTooSmall, i, os.str(), bound);
      }
    } else if (!(a.sigma > 0.0 && a.sigma < 1.0)) {
      throw ParamError(ErrorKind::SigmaOutOfRange, i, "sigma must lie in (0, 1) for static laws");
    }
  }
  return p;
}

double dynamic_margin(const TriggerParams& p) {
  double kd = std::numeric_limits<double>::infinity();
  for (const auto& a : p.agents) kd = std::min(kd, a.beta - (1.0 - a.xi) / a.theta);
  return kd;
}

bool static_check(double e, double q, double sigma, double l_ii) noexcept {
  return e * e > sigma / (2.0 * l_ii) * q;
}

double internal_derivative(double internal, double q, double e, const AgentParams& p,
                           double l_ii) noexcept {
  return -p.beta * internal + p.xi * (p.sigma / 2.0 * q - l_ii * e * e);
}

bool dynamic_check(double e, double q, double internal, const AgentParams& p, double l_ii) {
  if (!(internal > 0.0)) {
    std::ostringstream os;
    os.precision(17);
    os << "internal variable " << internal << " is not positive";
    throw Error(ErrorKind::NonpositiveInternal, os.str());
  }
  return p.theta * (l_ii * e * e - p.sigma / 2.0 * q) > internal;
}

double internal_lower_bound(double t, const AgentParams& p) noexcept {
  return p.internal0 * std::exp(-(p.beta + p.xi / p.theta) * t);
}

}  // namespace etcons
