#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace etcons {

/// Square dense matrix, row-major.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t n, double fill = 0.0) : n_(n), data_(n * n, fill) {}
  DenseMatrix(std::size_t n, std::vector<double> row_major);
  static DenseMatrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * n_ + j]; }
  double& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * n_ + j]; }
  std::span<const double> row(std::size_t i) const noexcept {
    return {data_.data() + i * n_, n_};
  }
  std::span<const double> data() const noexcept { return data_; }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

/// Undirected weighted graph over agents 0..n-1. Only constructible through
/// build_graph, so every instance is symmetric, nonnegative, zero-diagonal
/// and connected.
class WeightedGraph {
 public:
  std::size_t size() const noexcept { return weights_.size(); }
  const DenseMatrix& weights() const noexcept { return weights_; }
  double weight(std::size_t i, std::size_t j) const noexcept { return weights_(i, j); }
  std::vector<std::size_t> neighbors(std::size_t i) const;
  double degree(std::size_t i) const noexcept;

  friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;

 private:
  friend WeightedGraph build_graph(DenseMatrix weights);
  explicit WeightedGraph(DenseMatrix w) : weights_(std::move(w)) {}
  DenseMatrix weights_;
};

/// L = D - A of a validated graph.
class LaplacianMatrix {
 public:
  std::size_t size() const noexcept { return entries_.size(); }
  double operator()(std::size_t i, std::size_t j) const noexcept { return entries_(i, j); }
  double diagonal(std::size_t i) const noexcept { return entries_(i, i); }
  double min_diagonal() const noexcept;
  const DenseMatrix& matrix() const noexcept { return entries_; }

 private:
  friend LaplacianMatrix laplacian(const WeightedGraph& g);
  explicit LaplacianMatrix(DenseMatrix e) : entries_(std::move(e)) {}
  DenseMatrix entries_;
};

/// Weights strictly below this (but nonzero) are rejected as noise.
inline constexpr double kMinEdgeWeight = 1e-15;

/// Validates `weights` and wraps it. Throws GraphError naming the first
/// violating (row, col) pair.
WeightedGraph build_graph(DenseMatrix weights);
WeightedGraph build_graph(const std::vector<std::vector<double>>& rows);

LaplacianMatrix laplacian(const WeightedGraph& g);

/// Breadth-first search over positive-weight edges from agent 0. Works on any
/// square matrix so it can be used before validation.
bool is_connected(const DenseMatrix& weights);
inline bool is_connected(const WeightedGraph& g) { return is_connected(g.weights()); }

/// All eigenvalues of a symmetric matrix in ascending order, by cyclic Jacobi
/// rotations. Throws NumericalFailure when the sweep budget runs out.
std::vector<double> symmetric_eigenvalues(const DenseMatrix& a, int max_sweeps = 100);

/// Second-smallest eigenvalue of L (algebraic connectivity).
double fiedler_value(const LaplacianMatrix& l);

/// Induced 2-norm of L, i.e. its largest eigenvalue.
double spectral_norm(const LaplacianMatrix& l);

struct SpectralSummary {
  double fiedler = 0.0;
  double norm = 0.0;
  double min_diagonal = 0.0;
};

/// One eigen-decomposition for all three quantities used by decay rates.
SpectralSummary spectral_summary(const LaplacianMatrix& l);

/// z' L z.
double quadratic_form(const LaplacianMatrix& l, std::span<const double> z);

/// z' K_n z = sum_i (z_i - mean(z))^2, with K_n = I - 11'/n.
double deviation_form(std::span<const double> z);

}  // namespace etcons
