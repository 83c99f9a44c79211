#include <doctest.h>

#include <random>
#include <set>

#include "seidel/graph6.hpp"
#include "support.hpp"

using namespace seidel;

namespace {

Graph6ErrorKind kind_of(std::string_view s) {
  try {
    graph_from_graph6(s);
  } catch (const Graph6Error& e) {
    return e.kind();
  }
  FAIL("expected a Graph6Error for '" << std::string(s) << "'");
  return Graph6ErrorKind::kEmptyInput;
}

std::size_t offset_of(std::string_view s) {
  try {
    graph_from_graph6(s);
  } catch (const Graph6Error& e) {
    return e.offset();
  }
  return static_cast<std::size_t>(-1);
}

}  // namespace

TEST_CASE("fixed graph6 vectors") {
  CHECK(graph_from_graph6("@") == Graph::complete(1));
  CHECK(graph_to_graph6(Graph::complete(1)) == "@");

  // K_4: n = 4 -> 'C'; all six upper-triangle bits set -> 63 + 63 = '~'.
  CHECK(graph_from_graph6("C~") == Graph::complete(4));
  CHECK(graph_to_graph6(Graph::complete(4)) == "C~");

  // K_2: one bit, 100000b = 32 -> '_'.
  CHECK(graph_from_graph6("A_") == Graph::complete(2));

  // "DQc": Q = 010010, c = 100100; bits (0,1)(0,2)(1,2)(0,3)(1,3)(2,3)(0,4)(1,4)(2,4)(3,4)
  // = 0100101001 -> edges 02, 13, 04, 34: the path 2-0-4-3-1.
  const auto g = graph_from_graph6("DQc");
  CHECK(g == Graph(5, {{0, 2}, {1, 3}, {0, 4}, {3, 4}}));
  CHECK(graph_to_graph6(g) == "DQc");
}

TEST_CASE("graph6 accepts a header prefix and a trailing newline") {
  CHECK(graph_from_graph6(">>graph6<<C~") == Graph::complete(4));
  CHECK(graph_from_graph6("C~\n") == Graph::complete(4));
  CHECK(graph_from_graph6("C~\r\n") == Graph::complete(4));
}

TEST_CASE("graph6 round trip on random graphs") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> order(1, 62);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  for (int t = 0; t < 500; ++t) {
    const auto g = testing::random_graph(rng, order(rng), density(rng));
    const auto text = graph_to_graph6(g);
    CHECK(text.size() == 1 + (g.order() * (g.order() - 1) / 2 + 5) / 6);
    CHECK(graph_from_graph6(text) == g);
  }
}

TEST_CASE("graph6 long form") {
  std::mt19937_64 rng(99);
  for (std::size_t n : {63u, 64u, 100u, 130u}) {
    const auto g = testing::random_graph(rng, n, 0.3);
    const auto text = graph_to_graph6(g);
    CHECK(text[0] == '~');
    CHECK(graph_from_graph6(text) == g);
  }
  // n = 63 encodes as ~ ? @ ~ (0, 0, 63 in 6-bit groups, each + 63).
  CHECK(graph_to_graph6(Graph(63)).substr(0, 4) == "~??~");
}

TEST_CASE("graph6 parse errors are distinct and carry offsets") {
  CHECK(kind_of("") == Graph6ErrorKind::kEmptyInput);
  CHECK(kind_of("\n") == Graph6ErrorKind::kEmptyInput);
  CHECK(kind_of("?") == Graph6ErrorKind::kMalformedHeader);  // n = 0
  CHECK(kind_of(" ") == Graph6ErrorKind::kMalformedHeader);
  CHECK(kind_of("~?") == Graph6ErrorKind::kMalformedHeader);
  CHECK(kind_of("~?!?") == Graph6ErrorKind::kMalformedHeader);
  CHECK(kind_of("~??~") == Graph6ErrorKind::kTruncatedPayload);  // n = 63, no payload
  CHECK(kind_of(":Fa@x^") == Graph6ErrorKind::kUnsupportedFormat);
  CHECK(kind_of("&C~") == Graph6ErrorKind::kUnsupportedFormat);
  CHECK(kind_of("~~??????") == Graph6ErrorKind::kUnsupportedFormat);

  CHECK(kind_of("C") == Graph6ErrorKind::kTruncatedPayload);
  CHECK(offset_of("C") == 1);
  CHECK(kind_of("DQ") == Graph6ErrorKind::kTruncatedPayload);
  CHECK(offset_of("DQ") == 2);

  CHECK(kind_of("C~~") == Graph6ErrorKind::kTrailingGarbage);
  CHECK(offset_of("C~~") == 2);
  CHECK(kind_of("@ ") == Graph6ErrorKind::kTrailingGarbage);

  CHECK(kind_of("C\xc3") == Graph6ErrorKind::kNonAsciiByte);
  CHECK(offset_of("C\xc3") == 1);
  CHECK(kind_of("\xc3") == Graph6ErrorKind::kNonAsciiByte);
  CHECK(kind_of("C!") == Graph6ErrorKind::kInvalidByte);

  // K_2 with a stray low bit in the padding.
  CHECK(kind_of("A`") == Graph6ErrorKind::kNonzeroPadding);
  CHECK(offset_of(">>graph6<<A`") == 11);
}

TEST_CASE("graph6 cannot encode loops") {
  CHECK_THROWS_AS(graph_to_graph6(add_loops(Graph::complete(3))), InvalidArgument);
}

TEST_CASE("test catalog holds every graph on up to 6 vertices exactly once") {
  const auto graphs = testing::catalog();
  std::vector<std::size_t> per_order(7, 0);
  std::set<std::pair<std::size_t, std::vector<bool>>> seen;
  for (const auto& g : graphs) {
    ++per_order[g.order()];
    CHECK(seen.insert({g.order(), testing::canonical_form(g)}).second);
  }
  CHECK(per_order == std::vector<std::size_t>{0, 1, 2, 4, 11, 34, 156});
}
