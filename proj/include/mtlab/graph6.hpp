#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "graph.hpp"

namespace mtlab {

class Graph6Error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/**
 * graph6 encoding.
 *
 * Header is one byte 63+n for n <= 62, otherwise 126 followed by n as 18 bits
 * in three 6-bit groups.  The payload lists x(0,1), x(0,2), x(1,2), x(0,3), ...
 * (column j, rows 0..j-1) packed big-endian six bits per byte, zero padded.
 */
inline auto encode_graph6(const Graph& g) -> std::string {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return out;
}

inline auto decode_graph6(std::string_view text) -> Graph {
  // Optional ">>graph6<<" header as written by nauty tools.
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw Graph6Error("graph6: empty input");
  for (char c : text)
    if (c < 63 || c > 126) throw Graph6Error("graph6: byte outside 63..126");

  std::size_t pos = 0;
  long n = 0;
  if (text[0] != 126) {
    n = text[0] - 63;
    pos = 1;
  } else {
    if (text.size() < 4) throw Graph6Error("graph6: truncated long header");
    if (text[1] == 126) throw Graph6Error("graph6: order beyond 18-bit header is out of capacity");
    n = ((text[1] - 63L) << 12) | ((text[2] - 63L) << 6) | (text[3] - 63L);
    pos = 4;
  }
  if (n > Graph::kCapacity) throw CapacityError("graph6: order " + std::to_string(n) + " exceeds capacity 64");

  const long pairs = n * (n - 1) / 2;
  const long want = (pairs + 5) / 6;
  if (static_cast<long>(text.size() - pos) != want)
    throw Graph6Error("graph6: payload length " + std::to_string(text.size() - pos) + ", expected " +
                      std::to_string(want));

  Graph g(static_cast<int>(n));
  long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = text[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (pairs % 6 != 0) {
    const int last = text.back() - 63;
    if (last & ((1 << (6 - pairs % 6)) - 1)) throw Graph6Error("graph6: nonzero padding bits");
  }
  return g;
}

}  // namespace mtlab
