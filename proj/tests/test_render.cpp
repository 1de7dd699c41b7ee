#include <doctest.h>

#include <string>

#include "treebij/render.hpp"
#include "treebij/text.hpp"

using namespace treebij;

TEST_SUITE_BEGIN("render");

TEST_CASE("port dot output") {
  CHECK(render_port_dot(parse_port("1")) ==
        "digraph port {\n"
        "  graph [ordering=out];\n"
        "  node [shape=circle];\n"
        "  1;\n"
        "}\n");
  CHECK(render_port_dot(parse_port("1(2)")) ==
        "digraph port {\n"
        "  graph [ordering=out];\n"
        "  node [shape=circle];\n"
        "  1 -> 2;\n"
        "}\n");
  CHECK(render_port_dot(parse_port("1(3(4),2(5))")) ==
        "digraph port {\n"
        "  graph [ordering=out];\n"
        "  node [shape=circle];\n"
        "  1 -> 3;\n"
        "  1 -> 2;\n"
        "  3 -> 4;\n"
        "  2 -> 5;\n"
        "}\n");
}

TEST_CASE("port ascii output") {
  CHECK(render_port_ascii(parse_port("1")) == "1\n");
  CHECK(render_port_ascii(parse_port("1(3(4),2(5))")) ==
        "1\n"
        "|-- 3\n"
        "|   `-- 4\n"
        "`-- 2\n"
        "    `-- 5\n");
}

TEST_CASE("phylo dot output") {
  CHECK(render_phylo_dot(parse_phylo("1"), false) ==
        "digraph phylo {\n"
        "  node [shape=circle];\n"
        "  n0 [label=\"1\"];\n"
        "}\n");
  CHECK(render_phylo_dot(parse_phylo("((1,3),2)"), true) ==
        "digraph phylo {\n"
        "  node [shape=circle];\n"
        "  n0 [label=\"\"];\n"
        "  n1 [label=\"4\"];\n"
        "  n2 [label=\"1\"];\n"
        "  n1 -> n2;\n"
        "  n3 [label=\"3\"];\n"
        "  n1 -> n3;\n"
        "  n0 -> n1;\n"
        "  n4 [label=\"2\"];\n"
        "  n0 -> n4;\n"
        "}\n");
  // Without the flag every internal node is anonymous.
  CHECK(render_phylo_dot(parse_phylo("((1,3),2)"), false) ==
        "digraph phylo {\n"
        "  node [shape=circle];\n"
        "  n0 [label=\"\"];\n"
        "  n1 [label=\"\"];\n"
        "  n2 [label=\"1\"];\n"
        "  n1 -> n2;\n"
        "  n3 [label=\"3\"];\n"
        "  n1 -> n3;\n"
        "  n0 -> n1;\n"
        "  n4 [label=\"2\"];\n"
        "  n0 -> n4;\n"
        "}\n");
}

TEST_CASE("phylo dot shows every construction label of the six-leaf tree") {
  const std::string dot =
      render_phylo_dot(parse_phylo("(((1,4),6),((2,(5,7)),3))"), true);
  for (int label = 8; label <= 12; ++label) {
    CHECK(dot.find("[label=\"" + std::to_string(label) + "\"]") !=
          std::string::npos);
  }
  // The root stays blank; only five of the eleven non-leaf lines carry text.
  CHECK(dot.find("n0 [label=\"\"];") != std::string::npos);
}

TEST_CASE("phylo ascii output") {
  CHECK(render_phylo_ascii(parse_phylo("1"), false) == "1\n");
  CHECK(render_phylo_ascii(parse_phylo("(1,2)"), false) ==
        "*\n"
        "|-- 1\n"
        "`-- 2\n");
  const PhyloTree seven = parse_phylo("(((1,4),6),((2,(5,7)),3))");
  CHECK(render_phylo_ascii(seven, false) ==
        "*\n"
        "|-- *\n"
        "|   |-- *\n"
        "|   |   |-- 1\n"
        "|   |   `-- 4\n"
        "|   `-- 6\n"
        "`-- *\n"
        "    |-- *\n"
        "    |   |-- 2\n"
        "    |   `-- *\n"
        "    |       |-- 5\n"
        "    |       `-- 7\n"
        "    `-- 3\n");
  CHECK(render_phylo_ascii(seven, true) ==
        "*\n"
        "|-- 12\n"
        "|   |-- 8\n"
        "|   |   |-- 1\n"
        "|   |   `-- 4\n"
        "|   `-- 6\n"
        "`-- 11\n"
        "    |-- 10\n"
        "    |   |-- 2\n"
        "    |   `-- 9\n"
        "    |       |-- 5\n"
        "    |       `-- 7\n"
        "    `-- 3\n");
}

TEST_SUITE_END();
