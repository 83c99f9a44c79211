#include "seidel/graph6.hpp"

#include <vector>

namespace seidel {

namespace {

constexpr int kBias = 63;
constexpr unsigned char kMaxByte = 126;
constexpr std::string_view kHeader = ">>graph6<<";

std::size_t payload_bytes(std::size_t n) {
  const std::size_t bits = n * (n - 1) / 2;
  return (bits + 5) / 6;
}

// Reads one 6-bit chunk at `pos`, or throws with the precise reason.
int chunk_at(std::string_view s, std::size_t pos, std::size_t base) {
  const auto c = static_cast<unsigned char>(s[pos]);
  if (c > 127) {
    throw Graph6Error(Graph6ErrorKind::kNonAsciiByte, base + pos, "non-ASCII byte");
  }
  if (c < kBias || c > kMaxByte) {
    throw Graph6Error(Graph6ErrorKind::kInvalidByte, base + pos,
                      "byte " + std::to_string(c) + " outside the graph6 range 63..126");
  }
  return c - kBias;
}

}  // namespace

const char* to_string(Graph6ErrorKind kind) {
  switch (kind) {
    case Graph6ErrorKind::kEmptyInput: return "empty input";
    case Graph6ErrorKind::kMalformedHeader: return "malformed header";
    case Graph6ErrorKind::kUnsupportedFormat: return "unsupported format";
    case Graph6ErrorKind::kNonAsciiByte: return "non-ASCII byte";
    case Graph6ErrorKind::kInvalidByte: return "invalid byte";
    case Graph6ErrorKind::kTruncatedPayload: return "truncated payload";
    case Graph6ErrorKind::kTrailingGarbage: return "trailing garbage";
    case Graph6ErrorKind::kNonzeroPadding: return "nonzero padding bits";
  }
  return "unknown";
}

Graph6Error::Graph6Error(Graph6ErrorKind kind, std::size_t offset, const std::string& detail)
    : Error(std::string("graph6 ") + to_string(kind) + " at byte " + std::to_string(offset) + ": " +
            detail),
      kind_(kind),
      offset_(offset) {}

Graph graph_from_graph6(std::string_view text) {
  if (text.ends_with('\n')) text.remove_suffix(1);
  if (text.ends_with('\r')) text.remove_suffix(1);

  std::size_t base = 0;
  if (text.starts_with(kHeader)) {
    text.remove_prefix(kHeader.size());
    base = kHeader.size();
  }
  if (text.empty()) throw Graph6Error(Graph6ErrorKind::kEmptyInput, base, "no graph data");

  const auto first = static_cast<unsigned char>(text[0]);
  if (first == ':' || first == ';') {
    throw Graph6Error(Graph6ErrorKind::kUnsupportedFormat, base, "sparse6 input is not supported");
  }
  if (first == '&') {
    throw Graph6Error(Graph6ErrorKind::kUnsupportedFormat, base, "digraph6 input is not supported");
  }

  std::size_t n = 0;
  std::size_t pos = 0;
  if (first == kMaxByte) {
    if (text.size() >= 2 && static_cast<unsigned char>(text[1]) == kMaxByte) {
      throw Graph6Error(Graph6ErrorKind::kUnsupportedFormat, base,
                        "8-byte size form (n >= 2^18) is not supported");
    }
    if (text.size() < 4) {
      throw Graph6Error(Graph6ErrorKind::kMalformedHeader, base + text.size(),
                        "long size form needs 3 bytes after '~'");
    }
    for (pos = 1; pos < 4; ++pos) {
      const auto c = static_cast<unsigned char>(text[pos]);
      if (c > 127) throw Graph6Error(Graph6ErrorKind::kNonAsciiByte, base + pos, "non-ASCII byte");
      // The leading 6-bit group is at most 62, so only it excludes 126.
      const unsigned char hi = pos == 1 ? kMaxByte - 1 : kMaxByte;
      if (c < kBias || c > hi) {
        throw Graph6Error(Graph6ErrorKind::kMalformedHeader, base + pos,
                          "size byte " + std::to_string(c) + " outside 63.." + std::to_string(hi));
      }
      n = (n << 6) | static_cast<std::size_t>(c - kBias);
    }
  } else {
    if (first > 127) throw Graph6Error(Graph6ErrorKind::kNonAsciiByte, base, "non-ASCII byte");
    if (first < kBias) {
      throw Graph6Error(Graph6ErrorKind::kMalformedHeader, base,
                        "size byte " + std::to_string(first) + " below 63");
    }
    n = first - kBias;
    pos = 1;
  }
  if (n == 0) throw Graph6Error(Graph6ErrorKind::kMalformedHeader, base, "graph with zero vertices");

  const std::size_t need = payload_bytes(n);
  const std::string_view payload = text.substr(pos);
  if (payload.size() < need) {
    // Report the first bad byte if there is one, else the truncation point.
    for (std::size_t k = 0; k < payload.size(); ++k) chunk_at(text, pos + k, base);
    throw Graph6Error(Graph6ErrorKind::kTruncatedPayload, base + text.size(),
                      "expected " + std::to_string(need) + " payload bytes for n=" + std::to_string(n) +
                          ", got " + std::to_string(payload.size()));
  }
  if (payload.size() > need) {
    const std::size_t at = pos + need;
    if (static_cast<unsigned char>(text[at]) > 127) {
      throw Graph6Error(Graph6ErrorKind::kNonAsciiByte, base + at, "non-ASCII byte");
    }
    throw Graph6Error(Graph6ErrorKind::kTrailingGarbage, base + at,
                      std::to_string(payload.size() - need) + " unexpected byte(s) after the payload");
  }

  std::vector<int> chunks(need);
  for (std::size_t k = 0; k < need; ++k) chunks[k] = chunk_at(text, pos + k, base);

  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::size_t bit = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++bit) {
      if ((chunks[bit / 6] >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (bit % 6 != 0) {
    const int mask = (1 << (6 - bit % 6)) - 1;
    if (chunks.back() & mask) {
      throw Graph6Error(Graph6ErrorKind::kNonzeroPadding, base + pos + need - 1,
                        "unused low bits of the last byte must be zero");
    }
  }
  return Graph(n, edges);
}

std::string graph_to_graph6(const Graph& g) {
  if (g.has_loops()) throw InvalidArgument("graph6 cannot represent loops");
  const std::size_t n = g.order();
  if (n > kGraph6MaxOrder) {
    throw InvalidArgument("graph order " + std::to_string(n) + " exceeds the graph6 4-byte size form");
  }

  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back(static_cast<char>(kMaxByte));
    out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kBias));
    out.push_back(static_cast<char>((n & 0x3f) + kBias));
  }

  int chunk = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
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

}  // namespace seidel
