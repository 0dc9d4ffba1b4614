#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace spectra {

/// Undirected simple graph on vertices 0..n-1, adjacency stored as bit rows.
///
/// Loops are rejected; every edge is stored in both rows so that
/// adjacent(i, j) == adjacent(j, i) always holds.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);

  int order() const { return n_; }
  // Number of edges (half the total bit count).
  int size() const;

  bool adjacent(int i, int j) const {
    return (row(i)[j >> 6] >> (j & 63)) & 1u;
  }
  void add_edge(int i, int j);
  void remove_edge(int i, int j);

  int degree(int v) const;
  std::vector<int> degrees() const;
  std::vector<int> neighbors(int v) const;
  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::span<const std::uint64_t> row(int i) const {
    return {bits_.data() + static_cast<std::size_t>(i) * words_,
            static_cast<std::size_t>(words_)};
  }
  void check_vertex(int v) const;

  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
};

bool is_connected(const Graph& g);

// BFS distances from `source`; unreachable vertices get -1.
std::vector<int> bfs_distances(const Graph& g, int source);

// Largest shortest-path distance. Throws PreconditionError when g is
// disconnected (infinite diameter).
int diameter(const Graph& g);

/// A bijection of {0..n-1}; image[i] is where vertex i is sent.
struct Permutation {
  std::vector<int> image;

  static Permutation identity(int n);
  int size() const { return static_cast<int>(image.size()); }
  bool is_identity() const;
  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
};

// (a ∘ b)(i) = a(b(i)).
Permutation compose(const Permutation& a, const Permutation& b);

// Small named families, used by tests and examples.
namespace families {
Graph complete(int n);
Graph path(int n);
Graph cycle(int n);
Graph star(int leaves);
Graph petersen();
}  // namespace families

}  // namespace spectra
