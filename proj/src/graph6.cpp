#include "toughlab/graph6.hpp"

#include "toughlab/error.hpp"

namespace toughlab {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

bool printable(unsigned char c) { return c >= 63 && c <= 126; }

}  // namespace

Graph parse_graph6(std::string_view line) {
  std::size_t pos = 0;
  if (line.starts_with(kHeader)) pos = kHeader.size();
  if (line.ends_with('\n')) line.remove_suffix(1);
  if (line.ends_with('\r')) line.remove_suffix(1);
  if (pos >= line.size()) throw ParseError("empty graph6 record", pos);

  auto byte_at = [&](std::size_t i) -> int {
    if (i >= line.size()) throw ParseError("truncated length field", i);
    const auto c = static_cast<unsigned char>(line[i]);
    if (!printable(c)) throw ParseError("non-printable byte in graph6 record", i);
    return c - kBias;
  };

  long long n = 0;
  const int head = byte_at(pos);
  if (head < 63) {
    n = head;
    pos += 1;
  } else if (byte_at(pos + 1) < 63) {
    n = (static_cast<long long>(byte_at(pos + 1)) << 12) | (byte_at(pos + 2) << 6) | byte_at(pos + 3);
    if (n < 63) throw ParseError("non-canonical length field", pos);
    pos += 4;
  } else {
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | byte_at(pos + i);
    pos += 8;
  }
  if (n > kMaxVertices) {
    throw ParseError("order " + std::to_string(n) + " exceeds cap " + std::to_string(kMaxVertices),
                     pos - 1);
  }

  const int order = static_cast<int>(n);
  const std::size_t pairs = static_cast<std::size_t>(order) * (order > 0 ? order - 1 : 0) / 2;
  const std::size_t body = (pairs + 5) / 6;
  if (line.size() < pos + body) throw ParseError("truncated adjacency body", line.size());
  if (line.size() > pos + body) throw ParseError("trailing garbage after graph6 record", pos + body);

  GraphBuilder b(order);
  std::size_t k = 0;
  for (int j = 1; j < order; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int chunk = byte_at(pos + k / 6);
      if ((chunk >> (5 - k % 6)) & 1) b.add_edge(i, j);
    }
  }
  if (body > 0) {
    const std::size_t last = pos + body - 1;
    const int pad = static_cast<int>(body * 6 - pairs);
    if (byte_at(last) & ((1 << pad) - 1)) throw ParseError("nonzero padding bits", last);
  }
  return b.build();
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  }
  int chunk = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + kBias));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kBias));
  return out;
}

}  // namespace toughlab
