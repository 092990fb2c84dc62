#include <gtest/gtest.h>

#include "parklot/error.hpp"
#include "parklot/graph_io.hpp"

using namespace parklot;

TEST(GraphIo, RoundTrip) {
  for (const char* name : {"ex13.pg", "ex20.pg", "ex22.pg", "star9.pg", "star4sink.pg"}) {
    const DiGraph d = load_graph(std::string(PARKLOT_TEST_DATA) + "/" + name);
    EXPECT_EQ(parse_graph(format_graph(d)), d) << name;
  }
}

TEST(GraphIo, CanonicalText) {
  const DiGraph d = parse_graph("# comment\n\nn 3 root 1 orient sink\n3 1\n2 1\n");
  EXPECT_EQ(format_graph(d), "n 3 root 1 orient sink\n2 1\n3 1\n");
  EXPECT_EQ(graph_hash(d).size(), 16u);
  EXPECT_EQ(graph_hash(d), graph_hash(parse_graph(format_graph(d))));
  EXPECT_NE(graph_hash(d), graph_hash(parse_graph("n 3 root 1 orient source\n1 2\n1 3\n")));
}

TEST(GraphIo, GeneralDigraph) {
  const DiGraph d = parse_graph("n 3 root 0 orient general\n1 2\n2 3\n3 1\n");
  EXPECT_FALSE(d.root());
  EXPECT_FALSE(d.is_acyclic());
  EXPECT_EQ(format_graph(d), "n 3 root 0 orient general\n1 2\n2 3\n3 1\n");
}

TEST(GraphIo, ErrorsCarryLineNumbers) {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse_graph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("n 3 root 1\n"), 1u);
  EXPECT_EQ(line_of("n 3 root 1 orient sink\n2 1\n3 x\n"), 3u);
  EXPECT_EQ(line_of("# c\nn 3 root 1 orient sink\n2 1\n4 1\n"), 4u);
  EXPECT_EQ(line_of("n 3 root 1 orient diagonal\n"), 1u);
  EXPECT_EQ(line_of("\n# c\nn 3 root 1 orient sink\n1 2\n1 3\n"), 3u);
  EXPECT_EQ(line_of(""), 0u);
  EXPECT_THROW(parse_graph(""), ParseError);
  EXPECT_THROW(load_graph("/nonexistent/graph.pg"), Error);
}
