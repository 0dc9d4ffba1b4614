#include "spectra/enumerate.hpp"

#include <string>

#include "spectra/error.hpp"

namespace spectra {
namespace {

void check_order(int n, bool allow_large) {
  const int cap = allow_large ? kMaxCensusOrder + 1 : kMaxCensusOrder;
  if (n < 1 || n > cap) {
    throw PreconditionError("labeled enumeration supports 1 <= n <= " + std::to_string(cap) +
                            " (got n=" + std::to_string(n) + ")");
  }
}

}  // namespace

std::uint64_t labeled_graph_count(int n) {
  if (n < 0 || n > 11) throw PreconditionError("labeled_graph_count: n out of range");
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

Graph graph_from_mask(int n, std::uint64_t mask) {
  Graph g(n);
  int bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if ((mask >> bit) & 1u) g.add_edge(i, j);
  return g;
}

LabeledGraphEnumerator::LabeledGraphEnumerator(int n, bool connected_only, bool allow_large)
    : LabeledGraphEnumerator(n, connected_only, 0, (check_order(n, allow_large), labeled_graph_count(n)),
                             allow_large) {}

LabeledGraphEnumerator::LabeledGraphEnumerator(int n, bool connected_only, std::uint64_t first,
                                               std::uint64_t last, bool allow_large)
    : n_(n), connected_only_(connected_only), mask_(first), last_(last) {
  check_order(n, allow_large);
  if (last_ > labeled_graph_count(n) || first > last_) throw PreconditionError("enumeration mask range out of bounds");
}

std::optional<std::pair<std::uint64_t, Graph>> LabeledGraphEnumerator::next() {
  while (mask_ < last_) {
    const std::uint64_t mask = mask_++;
    Graph g = graph_from_mask(n_, mask);
    if (connected_only_ && !is_connected(g)) continue;
    return std::make_pair(mask, std::move(g));
  }
  return std::nullopt;
}

void for_each_labeled_graph(int n, bool connected_only,
                            const std::function<void(std::uint64_t, const Graph&)>& visit) {
  LabeledGraphEnumerator it(n, connected_only);
  while (auto item = it.next()) visit(item->first, item->second);
}

}  // namespace spectra
