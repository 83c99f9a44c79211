#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "seidel/errors.hpp"
#include "seidel/graph.hpp"

namespace seidel {

enum class Graph6ErrorKind {
  kEmptyInput,
  kMalformedHeader,
  kUnsupportedFormat,  // sparse6, digraph6, 8-byte size form
  kNonAsciiByte,
  kInvalidByte,        // ASCII but outside the 63..126 range
  kTruncatedPayload,
  kTrailingGarbage,
  kNonzeroPadding,
};

const char* to_string(Graph6ErrorKind kind);

class Graph6Error : public Error {
 public:
  Graph6Error(Graph6ErrorKind kind, std::size_t offset, const std::string& detail);

  Graph6ErrorKind kind() const { return kind_; }
  /// Byte offset into the input line where the problem was detected.
  std::size_t offset() const { return offset_; }

 private:
  Graph6ErrorKind kind_;
  std::size_t offset_;
};

/// Largest order representable by the 4-byte size form.
inline constexpr std::size_t kGraph6MaxOrder = 258'047;

/// Decodes one graph6 line. An optional ">>graph6<<" prefix and a single
/// trailing "\n" or "\r\n" are accepted.
Graph graph_from_graph6(std::string_view text);

/// Canonical graph6 encoding (short size form for n <= 62). Throws
/// InvalidArgument if g has loops.
std::string graph_to_graph6(const Graph& g);

}  // namespace seidel
