#include "etcons/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>

#include "etcons/errors.hpp"

namespace etcons {

DenseMatrix::DenseMatrix(std::size_t n, std::vector<double> row_major)
    : n_(n), data_(std::move(row_major)) {
  if (data_.size() != n_ * n_) {
    throw Error(ErrorKind::InvalidDimensions, "row-major data does not match n*n");
  }
}

DenseMatrix DenseMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const std::size_t n = rows.size();
  DenseMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      std::ostringstream os;
      os << "row " << i + 1 << " has " << rows[i].size() << " entries, expected " << n;
      throw Error(ErrorKind::InvalidDimensions, os.str());
    }
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<std::size_t> WeightedGraph::neighbors(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < size(); ++j) {
    if (weights_(i, j) > 0.0) out.push_back(j);
  }
  return out;
}

double WeightedGraph::degree(std::size_t i) const noexcept {
  double d = 0.0;
  for (double w : weights_.row(i)) d += w;
  return d;
}

double LaplacianMatrix::min_diagonal() const noexcept {
  double m = entries_(0, 0);
  for (std::size_t i = 1; i < size(); ++i) m = std::min(m, entries_(i, i));
  return m;
}

namespace {

std::vector<bool> reachable_from_first(const DenseMatrix& weights) {
  const std::size_t n = weights.size();
  std::vector<bool> seen(n, false);
  if (n == 0) return seen;
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < n; ++j) {
      if (!seen[j] && weights(i, j) > 0.0) {
        seen[j] = true;
        queue.push_back(j);
      }
    }
  }
  return seen;
}

}  // namespace

bool is_connected(const DenseMatrix& weights) {
  const auto seen = reachable_from_first(weights);
  return !seen.empty() && std::find(seen.begin(), seen.end(), false) == seen.end();
}

WeightedGraph build_graph(DenseMatrix weights) {
  const std::size_t n = weights.size();
  if (n < 2) throw Error(ErrorKind::InvalidDimensions, "a graph needs at least two agents");

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double w = weights(i, j);
      if (!std::isfinite(w)) {
        throw GraphError(ErrorKind::NegativeWeight, i, j, "weight is not finite");
      }
      if (i == j) {
        if (w != 0.0) throw GraphError(ErrorKind::NonzeroDiagonal, i, j, "self-loop weight");
        continue;
      }
      if (w < 0.0) throw GraphError(ErrorKind::NegativeWeight, i, j, "negative weight");
      if (w > 0.0 && w < kMinEdgeWeight) {
        throw GraphError(ErrorKind::NegativeWeight, i, j, "weight below 1e-15 treated as noise");
      }
      if (w != weights(j, i)) {
        throw GraphError(ErrorKind::AsymmetricWeights, i, j, "a_ij != a_ji");
      }
    }
  }

  const auto seen = reachable_from_first(weights);
  if (const auto it = std::find(seen.begin(), seen.end(), false); it != seen.end()) {
    const auto missing = static_cast<std::size_t>(it - seen.begin());
    throw GraphError(ErrorKind::DisconnectedGraph, 0, missing, "no path between the agents");
  }
  return WeightedGraph(std::move(weights));
}

WeightedGraph build_graph(const std::vector<std::vector<double>>& rows) {
  return build_graph(DenseMatrix::from_rows(rows));
}

LaplacianMatrix laplacian(const WeightedGraph& g) {
  const std::size_t n = g.size();
  DenseMatrix l(n);
  for (std::size_t i = 0; i < n; ++i) {
    double deg = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      l(i, j) = -g.weight(i, j);
      deg += g.weight(i, j);
    }
    l(i, i) = deg;
  }
  return LaplacianMatrix(std::move(l));
}

std::vector<double> symmetric_eigenvalues(const DenseMatrix& input, int max_sweeps) {
  const std::size_t n = input.size();
  DenseMatrix a = input;
  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) s += a(p, q) * a(p, q);
    return std::sqrt(s);
  };
  double scale = 0.0;
  for (double v : a.data()) scale = std::max(scale, std::abs(v));

  bool converged = n <= 1 || off_norm() <= 1e-300;
  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double app = a(p, p);
        const double aqq = a(q, q);
        // Rotation annihilating a(p, q); t is the smaller root of
        // t^2 + 2 t theta - 1 = 0.
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
    }
    converged = off_norm() <= 1e-15 * std::max(scale, 1e-300);
  }
  if (!converged) {
    throw Error(ErrorKind::NumericalFailure, "Jacobi eigensolver did not converge");
  }
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i);
  std::sort(eig.begin(), eig.end());
  return eig;
}

SpectralSummary spectral_summary(const LaplacianMatrix& l) {
  const auto eig = symmetric_eigenvalues(l.matrix());
  SpectralSummary s;
  s.fiedler = eig.at(1);
  s.norm = eig.back();
  s.min_diagonal = l.min_diagonal();
  if (!(s.fiedler > 1e-12 * std::max(1.0, s.norm))) {
    throw Error(ErrorKind::NumericalFailure, "algebraic connectivity is not positive");
  }
  return s;
}

double fiedler_value(const LaplacianMatrix& l) { return spectral_summary(l).fiedler; }

double spectral_norm(const LaplacianMatrix& l) {
  return symmetric_eigenvalues(l.matrix()).back();
}

double quadratic_form(const LaplacianMatrix& l, std::span<const double> z) {
  const std::size_t n = l.size();
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) row += l(i, j) * z[j];
    total += z[i] * row;
  }
  return total;
}

double deviation_form(std::span<const double> z) {
  if (z.empty()) return 0.0;
  double mean = 0.0;
  for (double v : z) mean += v;
  mean /= static_cast<double>(z.size());
  double s = 0.0;
  for (double v : z) s += (v - mean) * (v - mean);
  return s;
}

}  // namespace etcons
