#pragma once

#include <optional>
#include <string_view>

#include "spectra/graph.hpp"
#include "spectra/hermitian_matrix.hpp"
#include "spectra/int_matrix.hpp"

namespace spectra {

enum class MatrixKind { adjacency, laplacian, signless, normalized, degree };

std::string_view to_string(MatrixKind kind);
std::optional<MatrixKind> parse_matrix_kind(std::string_view name);

// Exact integer A, L = D - A, Q = D + A or D. The normalized Laplacian is
// not integral; asking for it throws PreconditionError.
IntSymMatrix build_matrix(const Graph& g, MatrixKind kind);

// D^-1/2 L D^-1/2: unit diagonal, -1/sqrt(d_i d_j) on edges. Throws
// PreconditionError if some vertex is isolated.
SymMatrix normalized_laplacian_float(const Graph& g);

}  // namespace spectra
