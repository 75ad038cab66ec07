#pragma once

// Brute-force reference implementations. Test-only; shares data types with
// the library but none of its numerics.

#include <vector>

#include "etcons/graph.hpp"
#include "etcons/simulator.hpp"

namespace etcons::oracle {

struct OracleConfig {
  SimConfig base;
  double dense_dt = 1e-6;
};

/// Forward Euler at dense_dt with the raw trigger inequality evaluated at
/// every grid point; an agent fires at the first grid point where its
/// inequality is violated.
SimResult reference_run(const OracleConfig& cfg);

/// det(m) by Gaussian elimination with partial pivoting.
double determinant(DenseMatrix m);

/// Roots of det(L - lambda I) for n <= 5: sign-change scan with step 1e-4
/// over [-grid/2, 2 max L_ii + grid] and bisection to 1e-12. Roots at
/// extrema of the polynomial come from the sign of its derivative; each
/// root's multiplicity is the rank deficiency of L - rI. Trace and
/// trace-of-square deflation covers anything still missing.
std::vector<double> polynomial_eigenvalues(const DenseMatrix& l);
inline std::vector<double> polynomial_eigenvalues(const LaplacianMatrix& l) {
  return polynomial_eigenvalues(l.matrix());
}

}  // namespace etcons::oracle
