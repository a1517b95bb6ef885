#include "doctest.h"

#include "oracles.hpp"
#include "sepgraph/error.hpp"
#include "sepgraph/generators.hpp"
#include "sepgraph/graph6.hpp"

#include <sstream>

using namespace sepgraph;

TEST_CASE("fixed graph6 vectors") {
  CHECK(parse_graph6("C~") == complete_graph(4));
  CHECK(parse_graph6("Bw") == complete_graph(3));
  CHECK(parse_graph6(">>graph6<<C~\r\n") == complete_graph(4));
  CHECK(write_graph6(complete_graph(4)) == "C~");
  CHECK(write_graph6(Graph(0)) == "?");
  CHECK(write_graph6(petersen_graph()) == oracle::graph6_encode(petersen_graph()));
}

TEST_CASE("graph6 agrees with the reference encoder") {
  Xoshiro256 rng(3);
  for (int n : {0, 1, 2, 5, 20, 62, 63, 64, 100}) {
    const Graph g = gen_gnp(n, 0.3, rng);
    const auto text = write_graph6(g);
    CHECK(text == oracle::graph6_encode(g));
    CHECK(parse_graph6(text) == g);
  }
}

TEST_CASE("graph6 rejects malformed input with offsets") {
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6("C"), ParseError);   // truncated
  CHECK_THROWS_AS(parse_graph6("C~~"), ParseError); // trailing byte
  CHECK_THROWS_AS(parse_graph6("Bx"), ParseError);  // padding bit set
  try {
    parse_graph6("C~ ");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 2);
  }
  std::istringstream in("C~\n\nBw\nC!\n");
  try {
    read_graph6_stream(in);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(std::string(e.what()).find("line 4") != std::string::npos);
  }
}
