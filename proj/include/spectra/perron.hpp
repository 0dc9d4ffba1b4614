#pragma once

#include "spectra/hermitian_matrix.hpp"

namespace spectra {

struct PerronPair {
  double value = 0.0;       // spectral radius
  Eigen::VectorXd vector;   // unit, entrywise positive
  double residual = 0.0;    // ||A v - value v||_max
  int iterations = 0;       // matrix-vector products performed
};

// Perron root and vector of a nonnegative irreducible symmetric matrix
// (adjacency or signless Laplacian of a connected graph, n >= 2).
//
// Power iteration on A + I; the unit shift keeps -lambda_1 of bipartite
// graphs from tying with lambda_1. When progress stalls the shifted matrix
// is squared (entries stay nonnegative, so no cancellation) to raise the
// effective iteration count geometrically. Converged when the residual is
// at most 1e-12 * max(1, ||A||_max) * n.
//
// Throws PreconditionError for negative entries, reducible A or n < 2, and
// NumericalError when the iteration budget runs out.
PerronPair perron_vector(const SymMatrix& a);

}  // namespace spectra
