// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "spectra/automorphisms.hpp"
#include "spectra/characterization.hpp"
#include "spectra/counterexample.hpp"
#include "spectra/eigen_decomposition.hpp"
#include "spectra/enumerate.hpp"
#include "spectra/exact_spectrum.hpp"
#include "spectra/graph_matrices.hpp"

namespace {

using namespace spectra;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string format(const char* fmt, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, fmt, args...);
  return buf;
}

// Connected labeled graphs on 2..max_n vertices, every labeling.
std::vector<Graph> exhaustive_connected(int max_n) {
  std::vector<Graph> out;
  for (int n = 2; n <= max_n; ++n)
    for_each_labeled_graph(n, true, [&](std::uint64_t, const Graph& g) { out.push_back(g); });
  return out;
}

// Uniform over connected labeled graphs on n vertices (rejection on masks).
std::vector<Graph> random_connected_labeled(int n, int count, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> mask(0, labeled_graph_count(n) - 1);
  std::vector<Graph> out;
  while (static_cast<int>(out.size()) < count) {
    Graph g = graph_from_mask(n, mask(rng));
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

Graph random_connected_graph(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> density(0.1, 0.9);
  const double p = density(rng);
  std::bernoulli_distribution edge(p);
  for (;;) {
    Graph g(n);
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i)
        if (edge(rng)) g.add_edge(i, j);
    if (is_connected(g)) return g;
  }
}

CharacterizationResult run_kind(const Graph& g, MatrixKind kind) {
  switch (kind) {
    case MatrixKind::adjacency: return check_adjacency_distinct(g);
    case MatrixKind::signless: return check_signless_laplacian_distinct(g);
    case MatrixKind::laplacian: return check_laplacian_distinct(g);
    default: return check_normalized_laplacian_distinct(g);
  }
}

constexpr MatrixKind kKinds[] = {MatrixKind::adjacency, MatrixKind::laplacian, MatrixKind::signless,
                                 MatrixKind::normalized};

Outcome criterion_1() {
  const auto start = Clock::now();
  const ConverseCounterexample demo = counterexample_demo();
  const double elapsed = seconds_since(start);
  const IntMatrix expected{{16, 5, 10}, {0, 6, 0}, {10, 0, 6}};
  const bool exact = demo.f_of_b == expected;
  const bool six_in = charpoly(demo.f_of_b).evaluate(mpz_class(6)) == 0;
  const bool zero_out = charpoly(demo.b).evaluate(mpz_class(0)) != 0;
  return {exact && six_in && zero_out && demo.reproduces() && elapsed < 1.0,
          format("f(B)=%s, charpoly(f(B))(6)=%s, charpoly(B)(0)=%s, %.3f s", demo.f_of_b.to_string().c_str(),
                 demo.charpoly_f_of_b_at_six.get_str().c_str(), demo.charpoly_b_at_zero.get_str().c_str(), elapsed)};
}

struct SweepStats {
  long checks = 0, failures = 0, disagreements = 0;
  double worst_i = 0.0, worst_ii = 0.0;  // residual / bound
};

void sweep(const std::vector<Graph>& graphs, SweepStats& s) {
  for (const Graph& g : graphs)
    for (MatrixKind kind : kKinds) {
      const auto r = run_kind(g, kind);
      ++s.checks;
      const double bound_i = 1e-7 * r.n, bound_ii = 1e-6 * r.product_scale;
      s.worst_i = std::max(s.worst_i, r.max_condition_i_residual() / bound_i);
      s.worst_ii = std::max(s.worst_ii, r.condition_ii_residual / bound_ii);
      if (!r.passed || r.max_condition_i_residual() > bound_i || r.condition_ii_residual > bound_ii) ++s.failures;
      if (!r.pipelines_agree()) ++s.disagreements;
    }
}

Outcome criterion_4_5(Outcome& involutions) {
  const auto start = Clock::now();
  long graphs = 0, diameter_violations = 0, distinct = 0, involution_violations = 0;
  for (int n = 2; n <= 7; ++n) {
    LabeledGraphEnumerator it(n, true);
    while (auto item = it.next()) {
      const Graph& g = item->second;
      ++graphs;
      const int k = classify_spectrum_exact(build_matrix(g, MatrixKind::adjacency)).distinct_count;
      if (diameter(g) > k - 1) ++diameter_violations;
      if (k == n) {
        ++distinct;
        if (!all_nonidentity_involutions(g)) ++involution_violations;
      }
    }
  }
  const double elapsed = seconds_since(start);
  involutions = {involution_violations == 0,
                 format("%ld distinct-spectrum graphs, %ld violations", distinct, involution_violations)};
  return {diameter_violations == 0,
          format("%ld connected labeled graphs n<=7, %ld violations, %.1f s", graphs, diameter_violations, elapsed)};
}

// m'(x) at x for a monic squarefree m: the product of (x - r) over the other roots.
double derivative_at(const IntPolynomial& m, double x) { return poly_derivative(m).evaluate(x); }

Outcome criterion_6(const std::vector<Graph>& corpus6, std::mt19937_64& rng) {
  long checked = 0, bad = 0;
  double worst = 0.0;
  auto compare = [&](double got, double want) {
    ++checked;
    const double rel = std::abs(got - want) / std::abs(want);
    worst = std::max(worst, rel);
    if (!(rel <= 1e-6)) ++bad;
  };
  for (int trial = 0; trial < 500; ++trial) {
    const Graph g = random_connected_graph(2 + trial % 9, rng);
    for (MatrixKind kind : {MatrixKind::adjacency, MatrixKind::signless}) {
      const auto r = run_kind(g, kind);
      compare(r.coefficient_b, derivative_at(minimal_polynomial(build_matrix(g, kind)), r.extreme_eigenvalue));
    }
  }
  long laplacian_checked = 0;
  for (const Graph& g : corpus6) {
    const auto r = check_laplacian_distinct(g);
    // m(x) = x prod (x - mu_i), so m'(0) = (-1)^(k-1) prod mu_i.
    const IntPolynomial m = minimal_polynomial(build_matrix(g, MatrixKind::laplacian));
    compare(r.coefficient_b, m.coeff(1).get_d() / g.order());
    ++laplacian_checked;
  }
  return {bad == 0, format("%ld coefficients (%ld Laplacian), worst relative error %.2e", checked,
                           laplacian_checked, worst)};
}

Outcome criterion_7(const std::vector<Graph>& corpus6, std::mt19937_64& rng) {
  std::normal_distribution<double> d;
  long matrices = 0, failures = 0;
  while (matrices < 500) {
    const int n = 2 + static_cast<int>(matrices % 14);
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = d(rng);
    const SymMatrix h = SymMatrix::symmetrized(m);
    const auto report = eigh(h);
    if (report.eigenvalues(0) - report.eigenvalues(1) <= 1e-6) continue;
    ++matrices;
    if (!check_eigenvector_converse(h)) ++failures;
  }
  long graphs = 0;
  for (const Graph& g : corpus6) {
    ++graphs;
    if (!check_eigenvector_converse(to_float(build_matrix(g, MatrixKind::adjacency)))) ++failures;
  }
  return {failures == 0, format("%ld random matrices n<=15, %ld graphs n<=6, %ld failures", matrices, graphs, failures)};
}

template <typename Scalar>
HermitianMatrix<Scalar> random_hermitian(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> d;
  DenseMatrix<Scalar> m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if constexpr (kIsComplex<Scalar>) m(i, j) = Scalar(d(rng), d(rng));
      else m(i, j) = d(rng);
    }
  return HermitianMatrix<Scalar>::symmetrized(m);
}

Outcome criterion_8(std::mt19937_64& rng) {
  long failures = 0;
  double worst = 0.0;
  auto check = [&](const auto& h) {
    const int n = h.dim();
    const auto report = eigh(h);
    const double bound = 1e-10 * n * std::max(1.0, h.max_abs());
    const double r = std::max(report.reconstruction_residual, report.orthogonality_residual);
    worst = std::max(worst, r / bound);
    if (r > bound) ++failures;
  };
  for (int i = 0; i < 200; ++i) check(random_hermitian<double>(1 + i % 20, rng));
  for (int i = 0; i < 200; ++i) check(random_hermitian<std::complex<double>>(1 + i % 20, rng));

  std::uniform_int_distribution<int> entry(-5, 5);
  long ch_failures = 0;
  for (int t = 0; t < 100; ++t) {
    const int n = 1 + t % 8;
    IntMatrix m(n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) m(i, j) = m(j, i) = entry(rng);
    if (!eval_poly_matrix_exact(charpoly(m), m).is_zero()) ++ch_failures;
  }
  return {failures == 0 && ch_failures == 0,
          format("400 eigh runs, worst residual/bound %.2e; Cayley-Hamilton failures %ld/100", worst, ch_failures)};
}

Outcome criterion_9(const std::vector<Graph>& pool, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  long tested = 0, rejected = 0, caught = 0;
  double weakest = INFINITY;
  while (tested < 100) {
    const Graph& g = pool[pick(rng)];
    const MatrixKind kind = kKinds[tested % 4];
    const auto good = run_kind(g, kind);
    if (good.k < 3) continue;  // need a non-extreme value other than the one being perturbed
    std::vector<double> values = good.distinct_eigenvalues;
    CharacterizationResult bad;
    if (kind == MatrixKind::adjacency || kind == MatrixKind::signless) {
      std::vector<double> others(values.begin() + 1, values.end());
      std::uniform_int_distribution<std::size_t> which(0, others.size() - 1);
      others[which(rng)] += 0.1;
      bad = verify_spectral_radius_identity(to_float(build_matrix(g, kind)), values.front(), others, kDefaultTol);
    } else {
      std::vector<double> others(values.begin(), values.end() - 1);
      std::uniform_int_distribution<std::size_t> which(0, others.size() - 1);
      others[which(rng)] += 0.1;
      const SymMatrix h = kind == MatrixKind::laplacian ? to_float(build_matrix(g, kind)) : normalized_laplacian_float(g);
      Eigen::VectorXd alpha(g.order());
      for (int i = 0; i < g.order(); ++i)
        alpha(i) = kind == MatrixKind::laplacian ? 1.0 : std::sqrt(static_cast<double>(g.degree(i)));
      bad = verify_least_eigenvalue_identity(h, others, 0.0, alpha, kDefaultTol);
    }
    ++tested;
    const double ratio = bad.condition_ii_residual / bad.condition_ii_threshold;
    weakest = std::min(weakest, ratio);
    if (!bad.condition_ii_ok) ++rejected;
    if (!bad.condition_ii_ok && ratio > 10.0) ++caught;
  }
  return {caught >= 50 && rejected == tested,
          format("%ld/%ld perturbed inputs fail condition (ii), %ld by more than 10x the threshold, "
                 "smallest residual/threshold %.2e",
                 rejected, tested, caught, weakest)};
}

}  // namespace

int main() {
  std::mt19937_64 rng(20261017);
  int failed = 0;
  auto report = [&](int id, const char* name, const Outcome& o) {
    std::printf("[%s] criterion %d: %s: %s\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  };

  report(1, "converse counterexample reproduces exactly", criterion_1());

  const std::vector<Graph> corpus6 = exhaustive_connected(6);
  const std::vector<Graph> random7 = random_connected_labeled(7, 10000, rng);
  SweepStats exhaustive, sampled;
  const auto start = Clock::now();
  sweep(corpus6, exhaustive);
  const double exhaustive_seconds = seconds_since(start);
  sweep(random7, sampled);
  report(2, "necessity sweep, four identities",
         {exhaustive.failures + sampled.failures == 0 && exhaustive_seconds < 120.0,
          format("%zu graphs n<=6 + %zu at n=7, %ld checks, %ld failures, worst res_i/bound %.2e, "
                 "res_ii/bound %.2e, n<=6 in %.1f s",
                 corpus6.size(), random7.size(), exhaustive.checks + sampled.checks,
                 exhaustive.failures + sampled.failures, std::max(exhaustive.worst_i, sampled.worst_i),
                 std::max(exhaustive.worst_ii, sampled.worst_ii), exhaustive_seconds)});
  const long disagreements = exhaustive.disagreements + sampled.disagreements;
  report(3, "exact and float distinct counts agree",
         {disagreements == 0, format("%ld comparisons, %ld disagreements", exhaustive.checks + sampled.checks,
                                     disagreements)});

  Outcome involutions;
  report(4, "diameter at most k-1", criterion_4_5(involutions));
  report(5, "distinct adjacency spectrum implies involutive automorphisms", involutions);
  report(6, "closed-form coefficients", criterion_6(corpus6, rng));
  report(7, "eigenvector converse", criterion_7(corpus6, rng));
  report(8, "numerical substrate", criterion_8(rng));

  std::vector<Graph> pool = corpus6;
  pool.insert(pool.end(), random7.begin(), random7.end());
  report(9, "perturbed eigenvalues are rejected", criterion_9(pool, rng));

  std::printf("%s: %d of 9 criteria failed\n", failed ? "FAILED" : "OK", failed);
  return failed ? 1 : 0;
}
