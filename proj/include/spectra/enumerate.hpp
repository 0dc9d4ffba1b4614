#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "spectra/graph.hpp"

namespace spectra {

inline constexpr int kMaxCensusOrder = 7;

// Number of labeled graphs on n vertices, 2^(n(n-1)/2). Requires n <= 11.
std::uint64_t labeled_graph_count(int n);

// Graph whose edge set is the bitmask over vertex pairs in graph6 order:
// bit 0 is (0,1), then (0,2), (1,2), (0,3), ... (column-major upper triangle).
Graph graph_from_mask(int n, std::uint64_t mask);

/// Stream over labeled graphs on n vertices in ascending bitmask order.
///
/// A [first, last) mask range allows sharding a census across workers; the
/// default covers every mask. With connected_only, disconnected graphs are
/// skipped. Orders above kMaxCensusOrder need allow_large (n <= 8).
class LabeledGraphEnumerator {
 public:
  LabeledGraphEnumerator(int n, bool connected_only, bool allow_large = false);
  LabeledGraphEnumerator(int n, bool connected_only, std::uint64_t first, std::uint64_t last,
                         bool allow_large = false);

  // Next graph with its mask, or nullopt when the range is exhausted.
  std::optional<std::pair<std::uint64_t, Graph>> next();

 private:
  int n_;
  bool connected_only_;
  std::uint64_t mask_;
  std::uint64_t last_;
};

// All labeled graphs on n vertices, filtered by connectivity if requested.
void for_each_labeled_graph(int n, bool connected_only,
                            const std::function<void(std::uint64_t, const Graph&)>& visit);

}  // namespace spectra
