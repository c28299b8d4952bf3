#include "longcycle/graph6.hpp"

namespace longcycle {

namespace {

constexpr int kBias = 63;

int decode_byte(std::string_view s, std::size_t at) {
  if (at >= s.size()) throw ParseError(at, "graph6: unexpected end of line");
  const int c = static_cast<unsigned char>(s[at]);
  if (c < kBias || c > kBias + 63) throw ParseError(at, "graph6: byte out of range");
  return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  constexpr std::string_view kHeader = ">>graph6<<";
  std::size_t base = 0;
  if (line.substr(0, kHeader.size()) == kHeader) base = kHeader.size();
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  std::string_view s = line.substr(base);

  std::size_t pos = 0;
  long long n = 0;
  if (s.empty()) throw ParseError(base, "graph6: empty line");
  if (s[0] != '~') {
    n = decode_byte(s, 0);
    pos = 1;
  } else if (s.size() > 1 && s[1] == '~') {
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | decode_byte(s, i);
    pos = 8;
  } else {
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | decode_byte(s, i);
    pos = 4;
  }
  if (n > kMaxVertices) {
    throw Error(ErrorCode::Capacity, "graph6: " + std::to_string(n) +
                                         " vertices exceeds capacity " +
                                         std::to_string(kMaxVertices));
  }

  const long long bits = n * (n - 1) / 2;
  const std::size_t expected = pos + static_cast<std::size_t>((bits + 5) / 6);
  if (s.size() != expected) {
    throw ParseError(base + std::min(s.size(), expected),
                     "graph6: expected " + std::to_string(expected) +
                         " bytes, found " + std::to_string(s.size()));
  }

  GraphBuilder b(static_cast<int>(n));
  long long k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const std::size_t at = pos + static_cast<std::size_t>(k / 6);
      int value = 0;
      try {
        value = decode_byte(s, at);
      } catch (const ParseError& e) {
        throw ParseError(base + e.offset(), "graph6: byte out of range");
      }
      if (value & (1 << (5 - k % 6))) b.add_edge(i, j);
    }
  }
  // Padding bits must be zero in the canonical encoding.
  if (bits % 6 != 0) {
    const std::size_t last = expected - 1;
    const int value = decode_byte(s, last);
    if ((value & ((1 << (6 - bits % 6)) - 1)) != 0)
      throw ParseError(base + last, "graph6: non-zero padding bits");
  }
  return b.build();
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(kBias + n));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(kBias + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(kBias + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(kBias + (n & 63)));
  }
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(kBias + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(kBias + (acc << (6 - filled))));
  return out;
}

}  // namespace longcycle
