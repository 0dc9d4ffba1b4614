#include "spectra/automorphisms.hpp"

#include <string>

#include "spectra/error.hpp"

namespace spectra {
namespace {

class AutomorphismSearch {
 public:
  AutomorphismSearch(const Graph& g, const std::function<bool(const Permutation&)>& visit)
      : g_(g), visit_(visit), degree_(g.degrees()), used_(g.order(), false) {
    current_.image.assign(g.order(), -1);
  }

  void run() { extend(0); }

 private:
  // Returns false once the visitor asked to stop.
  bool extend(int v) {
    const int n = g_.order();
    if (v == n) return visit_(current_);
    for (int w = 0; w < n; ++w) {
      if (used_[w] || degree_[w] != degree_[v] || !consistent(v, w)) continue;
      current_.image[v] = w;
      used_[w] = true;
      const bool keep_going = extend(v + 1);
      used_[w] = false;
      current_.image[v] = -1;
      if (!keep_going) return false;
    }
    return true;
  }

  // Mapping v -> w must preserve adjacency with every vertex already placed.
  bool consistent(int v, int w) const {
    for (int u = 0; u < v; ++u) {
      if (g_.adjacent(v, u) != g_.adjacent(w, current_.image[u])) return false;
    }
    return true;
  }

  const Graph& g_;
  const std::function<bool(const Permutation&)>& visit_;
  std::vector<int> degree_;
  std::vector<bool> used_;
  Permutation current_;
};

void check_cap(const Graph& g) {
  if (g.order() > kMaxAutomorphismOrder) {
    throw PreconditionError("automorphism search is capped at n <= " +
                            std::to_string(kMaxAutomorphismOrder) + " (got n=" +
                            std::to_string(g.order()) + ")");
  }
}

}  // namespace

void for_each_automorphism(const Graph& g,
                           const std::function<bool(const Permutation&)>& visit) {
  check_cap(g);
  AutomorphismSearch(g, visit).run();
}

std::vector<Permutation> automorphisms(const Graph& g) {
  std::vector<Permutation> group;
  for_each_automorphism(g, [&](const Permutation& p) {
    group.push_back(p);
    return true;
  });
  return group;
}

bool all_nonidentity_involutions(const Graph& g) {
  bool ok = true;
  for_each_automorphism(g, [&](const Permutation& p) {
    for (int i = 0; i < p.size(); ++i) {
      if (p.image[p.image[i]] != i) {
        ok = false;
        return false;
      }
    }
    return true;
  });
  return ok;
}

}  // namespace spectra
