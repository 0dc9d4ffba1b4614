#include "spectra/graph_matrices.hpp"

#include <cmath>

#include "spectra/error.hpp"

namespace spectra {

std::string_view to_string(MatrixKind kind) {
  switch (kind) {
    case MatrixKind::adjacency: return "adjacency";
    case MatrixKind::laplacian: return "laplacian";
    case MatrixKind::signless: return "signless";
    case MatrixKind::normalized: return "normalized";
    case MatrixKind::degree: return "degree";
  }
  return "unknown";
}

std::optional<MatrixKind> parse_matrix_kind(std::string_view name) {
  for (auto kind : {MatrixKind::adjacency, MatrixKind::laplacian, MatrixKind::signless,
                    MatrixKind::normalized, MatrixKind::degree}) {
    if (name == to_string(kind)) return kind;
  }
  return std::nullopt;
}

IntSymMatrix build_matrix(const Graph& g, MatrixKind kind) {
  if (kind == MatrixKind::normalized) {
    throw PreconditionError("the normalized Laplacian has no integer form; use normalized_laplacian_float");
  }
  const int n = g.order();
  IntMatrix m(n);
  const long off_diagonal = kind == MatrixKind::laplacian ? -1 : (kind == MatrixKind::degree ? 0 : 1);
  const bool with_degrees = kind != MatrixKind::adjacency;
  for (int i = 0; i < n; ++i) {
    if (with_degrees) m(i, i) = g.degree(i);
    if (off_diagonal == 0) continue;
    for (int j : g.neighbors(i)) m(i, j) = off_diagonal;
  }
  return IntSymMatrix(std::move(m));
}

SymMatrix normalized_laplacian_float(const Graph& g) {
  const int n = g.order();
  std::vector<double> inv_sqrt(n);
  for (int i = 0; i < n; ++i) {
    const int d = g.degree(i);
    if (d == 0) {
      throw PreconditionError("normalized Laplacian undefined: vertex " + std::to_string(i) + " is isolated");
    }
    inv_sqrt[i] = 1.0 / std::sqrt(static_cast<double>(d));
  }
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n, n);
  for (int i = 0; i < n; ++i)
    for (int j : g.neighbors(i)) m(i, j) = -inv_sqrt[i] * inv_sqrt[j];
  return SymMatrix::from_dense(std::move(m));
}

}  // namespace spectra
