#include "spectra/graph6.hpp"

#include <string>

#include "spectra/error.hpp"

namespace spectra {
namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int decode_byte(char c, std::size_t pos) {
  auto v = static_cast<unsigned char>(c);
  if (v < 63 || v > 126) {
    throw ParseError("graph6: byte " + std::to_string(static_cast<int>(v)) +
                     " at offset " + std::to_string(pos) + " is outside [63,126]");
  }
  return v - 63;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError("graph6: empty input");
  if (text.front() == ':' || text.front() == ';') throw ParseError("graph6: sparse6 input is not supported");
  if (text.front() == '&') throw ParseError("graph6: digraph6 input is not supported");

  std::size_t pos = 0;
  long n = decode_byte(text[pos++], 0);
  if (n == 63) {
    if (text.size() < 4) throw ParseError("graph6: truncated 4-byte size header");
    if (static_cast<unsigned char>(text[1]) == 126) {
      throw ParseError("graph6: 8-byte size header (n > 258047) is not supported");
    }
    n = 0;
    for (int k = 0; k < 3; ++k, ++pos) n = (n << 6) | decode_byte(text[pos], pos);
    if (n < 63) throw ParseError("graph6: non-canonical 4-byte size header for n < 63");
  }

  const long pairs = n * (n - 1) / 2;
  const long data_bytes = (pairs + 5) / 6;
  if (static_cast<long>(text.size() - pos) != data_bytes) {
    throw ParseError("graph6: expected " + std::to_string(data_bytes) + " data bytes for n=" +
                     std::to_string(n) + ", found " + std::to_string(text.size() - pos));
  }

  Graph g(static_cast<int>(n));
  long bit = 0;
  int i = 0, j = 1;
  for (long b = 0; b < data_bytes; ++b, ++pos) {
    const int value = decode_byte(text[pos], pos);
    for (int shift = 5; shift >= 0; --shift, ++bit) {
      const bool set = (value >> shift) & 1;
      if (bit >= pairs) {
        if (set) throw ParseError("graph6: nonzero padding bit in final data byte");
        continue;
      }
      if (set) g.add_edge(i, j);
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return g;
}

std::string write_graph6(const Graph& g) {
  const long n = g.order();
  if (n > kMaxGraph6Order) {
    throw PreconditionError("graph6: order " + std::to_string(n) +
                            " exceeds the supported maximum of 258047");
  }
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }

  int acc = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

}  // namespace spectra
