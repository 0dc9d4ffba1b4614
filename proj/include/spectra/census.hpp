#pragma once

#include <cstdint>
#include <functional>
#include <istream>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spectra/characterization.hpp"
#include "spectra/graph.hpp"
#include "spectra/graph_matrices.hpp"

namespace spectra {

/// One graph under one matrix kind.
struct CensusRecord {
  std::string graph6;
  int n = 0;
  int m = 0;
  MatrixKind kind = MatrixKind::adjacency;
  int k_exact = 0;
  int k_float = 0;
  bool is_distinct = false;
  int diam = 0;
  bool diameter_bound_ok = false;
  std::optional<bool> involution_ok;  // evaluated for adjacency-distinct graphs only
  double max_residual_i = 0.0;
  double residual_ii = 0.0;
  double min_eigen_gap = std::numeric_limits<double>::infinity();
  bool identities_ok = false;  // conditions (i) and (ii) verified
  std::string failure;

  bool pipelines_agree() const { return k_exact == k_float; }
  // is_distinct implies the diameter bound and, for adjacency, the involution condition.
  bool invariants_hold() const;
};

struct KindTotals {
  std::uint64_t checked = 0;
  std::uint64_t distinct = 0;
  std::uint64_t disagreements = 0;
  std::uint64_t identity_failures = 0;
  std::uint64_t invariant_violations = 0;
  double min_gap_distinct = std::numeric_limits<double>::infinity();
};

struct OrderTotals {
  std::uint64_t examined = 0;
  std::uint64_t connected = 0;
  std::uint64_t skipped = 0;  // connected but n < 2, no identity to check
  std::map<MatrixKind, KindTotals> kinds;
};

struct CensusSummary {
  std::map<int, OrderTotals> orders;
  double wall_seconds = 0.0;

  std::uint64_t total_examined() const;
  std::uint64_t total_violations() const;  // disagreements + identity failures + invariant violations
  bool ok() const { return total_violations() == 0; }
};

struct CensusOptions {
  std::vector<MatrixKind> kinds{MatrixKind::adjacency, MatrixKind::laplacian, MatrixKind::signless,
                                MatrixKind::normalized};
  int jobs = 1;
  CheckOptions check;
};

// Receives records in deterministic order (ascending mask or input order).
using RecordSink = std::function<void(const CensusRecord&)>;

// Records for one connected graph with n >= 2, one per requested kind.
std::vector<CensusRecord> census_records(const Graph& g, std::span<const MatrixKind> kinds,
                                         const CheckOptions& check);

// Every labeled graph on n vertices (n <= 7; n = 8 with allow_large).
CensusSummary run_enumeration_census(int n, const CensusOptions& options, const RecordSink& sink = {},
                                     bool allow_large = false);

// A corpus of graphs, e.g. read from a graph6 file.
CensusSummary run_corpus_census(std::span<const Graph> graphs, const CensusOptions& options,
                                const RecordSink& sink = {});

// One graph6 string per line; blank lines and lines starting with '#' are
// ignored. Throws ParseError naming the offending line.
std::vector<Graph> read_graph6_corpus(std::istream& in);

}  // namespace spectra
