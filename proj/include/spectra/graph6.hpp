#pragma once

#include <string>
#include <string_view>

#include "spectra/graph.hpp"

namespace spectra {

// Largest order expressible with the short (1 byte) and medium (4 byte)
// graph6 size headers. The 8-byte long form is not supported.
inline constexpr int kMaxGraph6Order = 258047;

// Decodes one graph6 line. A trailing "\n" or "\r\n" and an optional
// ">>graph6<<" prefix are accepted. Throws ParseError on malformed input.
Graph parse_graph6(std::string_view text);

// Canonical graph6 encoding, without a trailing newline.
std::string write_graph6(const Graph& g);

}  // namespace spectra
