#include "spectra/perron.hpp"

#include <cmath>
#include <queue>
#include <vector>

#include "spectra/error.hpp"

namespace spectra {
namespace {

constexpr int kStepsPerRound = 200;
constexpr int kMaxSquarings = 40;

bool irreducible(const Eigen::MatrixXd& a) {
  const Eigen::Index n = a.rows();
  std::vector<bool> seen(n, false);
  std::queue<Eigen::Index> frontier;
  seen[0] = true;
  frontier.push(0);
  Eigen::Index reached = 1;
  while (!frontier.empty()) {
    const auto v = frontier.front();
    frontier.pop();
    for (Eigen::Index w = 0; w < n; ++w) {
      if (!seen[w] && a(v, w) != 0.0) {
        seen[w] = true;
        ++reached;
        frontier.push(w);
      }
    }
  }
  return reached == n;
}

}  // namespace

PerronPair perron_vector(const SymMatrix& a) {
  const auto& m = a.dense();
  const Eigen::Index n = m.rows();
  if (n < 2) throw PreconditionError("perron_vector: need n >= 2");
  if (!m.allFinite()) throw PreconditionError("perron_vector: non-finite entries");
  if ((m.array() < 0.0).any()) throw PreconditionError("perron_vector: matrix has negative entries");
  if (!irreducible(m)) throw PreconditionError("perron_vector: matrix is reducible (disconnected graph)");

  const double tolerance = 1e-12 * std::max(1.0, a.max_abs()) * static_cast<double>(n);
  Eigen::MatrixXd step = m + Eigen::MatrixXd::Identity(n, n);
  Eigen::VectorXd v = Eigen::VectorXd::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)));

  PerronPair out;
  auto converged = [&] {
    out.value = v.dot(m * v);
    out.residual = (m * v - out.value * v).cwiseAbs().maxCoeff();
    return out.residual <= tolerance;
  };

  for (int squarings = 0; squarings <= kMaxSquarings; ++squarings) {
    for (int s = 0; s < kStepsPerRound; ++s) {
      v = step * v;
      v.normalize();
      ++out.iterations;
      if (converged()) {
        if ((v.array() <= 0.0).any()) throw NumericalError("perron_vector: limit vector is not positive");
        out.vector = v;
        return out;
      }
    }
    step = step * step;
    step /= step.maxCoeff();
  }
  throw NumericalError("perron_vector: power iteration did not converge");
}

}  // namespace spectra
