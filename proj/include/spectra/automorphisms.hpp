#pragma once

#include <functional>
#include <vector>

#include "spectra/graph.hpp"

namespace spectra {

// Brute-force search is exponential on vertex-transitive graphs; orders
// above this are rejected with PreconditionError.
inline constexpr int kMaxAutomorphismOrder = 10;

// Calls `visit` for every automorphism in lexicographic order of images.
// Stops early when `visit` returns false.
void for_each_automorphism(const Graph& g,
                           const std::function<bool(const Permutation&)>& visit);

// The full automorphism group, identity first.
std::vector<Permutation> automorphisms(const Graph& g);

// True iff every nonidentity automorphism is an involution (p∘p = id).
bool all_nonidentity_involutions(const Graph& g);

}  // namespace spectra
