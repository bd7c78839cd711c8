#include <stdexcept>
#include <string>

#include "cag/graph.hpp"

namespace cag {

Graph parse_graph6(const std::string& text) {
  std::string s = text;
  if (!s.empty() && s.back() == '\n') s.pop_back();
  if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
  if (s.empty()) throw std::invalid_argument("graph6: empty input");
  if (s[0] == '~') throw std::invalid_argument("graph6: long-form orders are not supported");
  int n = s[0] - 63;
  if (n < 0 || n > 62) throw std::invalid_argument("graph6: bad order byte");
  size_t nbits = static_cast<size_t>(n) * static_cast<size_t>(n - 1) / 2;
  size_t nbytes = (nbits + 5) / 6;
  if (s.size() != 1 + nbytes) throw std::invalid_argument("graph6: wrong length");
  Graph g(n);
  size_t bit = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++bit) {
      char c = s[1 + bit / 6];
      if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte out of range");
      if ((c - 63) >> (5 - bit % 6) & 1) g.add_edge(u, v);
    }
  // Padding bits must be zero.
  for (size_t b = nbits; b < nbytes * 6; ++b) {
    char c = s[1 + b / 6];
    if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte out of range");
    if ((c - 63) >> (5 - b % 6) & 1) throw std::invalid_argument("graph6: nonzero padding");
  }
  return g;
}

std::string emit_graph6(const Graph& g) {
  int n = g.n();
  if (n > 62) throw std::invalid_argument("graph6: order above 62 unsupported");
  size_t nbits = static_cast<size_t>(n) * static_cast<size_t>(n - 1) / 2;
  std::string out(1 + (nbits + 5) / 6, static_cast<char>(63));
  out[0] = static_cast<char>(63 + n);
  size_t bit = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++bit)
      if (g.adjacent(u, v)) out[1 + bit / 6] += static_cast<char>(1 << (5 - bit % 6));
  return out;
}

}  // namespace cag
