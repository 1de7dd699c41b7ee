#include <doctest.h>

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "treebij/enumeration.hpp"
#include "treebij/port_codec.hpp"
#include "treebij/text.hpp"

using namespace treebij;

TEST_SUITE_BEGIN("port_codec");

TEST_CASE("gap_positions reproduces the nine positions of the 5-node tree") {
  const std::vector<GapSlot> expected{{1, 0}, {3, 0}, {4, 0}, {3, 1}, {1, 1},
                                      {2, 0}, {5, 0}, {2, 1}, {1, 2}};
  CHECK(gap_positions(parse_port("1(3(4),2(5))")) == expected);
}

TEST_CASE("gap_positions on tiny trees") {
  CHECK(gap_positions(Port{}) == std::vector<GapSlot>{{1, 0}});
  CHECK(gap_positions(parse_port("1(2)")) ==
        std::vector<GapSlot>{{1, 0}, {2, 0}, {1, 1}});
}

TEST_CASE("insert_node attaches the next label at the indexed slot") {
  CHECK(format_port(insert_node(parse_port("1(2(3),5,4)"), 2)) ==
        "1(2(6,3),5,4)");
  CHECK(format_port(insert_node(Port{}, 1)) == "1(2)");
  CHECK(format_port(insert_node(parse_port("1(2(6,3),5,4)"), 4)) ==
        "1(2(6,7,3),5,4)");
}

TEST_CASE("insert_node rejects out-of-range slots") {
  CHECK_THROWS_AS(insert_node(Port{}, 0), ValidationError);
  CHECK_THROWS_AS(insert_node(Port{}, 2), ValidationError);
  CHECK_THROWS_AS(insert_node(parse_port("1(2)"), 4), ValidationError);
}

TEST_CASE("the tree growth sequence of the worked example") {
  const std::vector<int> digits{1, 2, 5, 5, 2, 4};
  const std::vector<std::string> stages{
      "1(2)",        "1(2(3))",      "1(2(3),4)",
      "1(2(3),5,4)", "1(2(6,3),5,4)", "1(2(6,7,3),5,4)",
  };
  Port t;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    t = insert_node(t, digits[i]);
    CHECK(format_port(t) == stages[i]);
  }
}

TEST_CASE("remove_max undoes the insertion") {
  auto [t1, x1] = remove_max(parse_port("1(2)"));
  CHECK(format_port(t1) == "1");
  CHECK(x1 == 1);

  auto [t2, x2] = remove_max(parse_port("1(2(6,7,3),5,4)"));
  CHECK(format_port(t2) == "1(2(6,3),5,4)");
  CHECK(x2 == 4);

  auto [t3, x3] = remove_max(parse_port("1(2(3),4)"));
  CHECK(format_port(t3) == "1(2(3))");
  CHECK(x3 == 5);

  CHECK_THROWS_AS(remove_max(Port{}), ValidationError);
}

TEST_CASE("word_to_port") {
  CHECK(format_port(word_to_port(parse_word("1,2,5,5,2,4"))) ==
        "1(2(6,7,3),5,4)");
  CHECK(format_port(word_to_port(TrapezoidalWord{})) == "1");
  CHECK(format_port(word_to_port(parse_word("1,2,5"))) == "1(2(3),4)");
}

TEST_CASE("port_to_word") {
  CHECK(format_word(port_to_word(parse_port("1(2(6,7,3),5,4)"))) ==
        "1,2,5,5,2,4");
  CHECK(port_to_word(parse_port("1")).empty());
}

TEST_CASE("the unique word encoding the 5-node example tree") {
  // Brute-force search over all 105 words of length 4 for the preimage.
  const Port five = parse_port("1(3(4),2(5))");
  std::optional<TrapezoidalWord> preimage;
  for (const TrapezoidalWord& w : all_words(4)) {
    if (word_to_port(w) == five) {
      REQUIRE(!preimage.has_value());  // uniqueness
      preimage = w;
    }
  }
  REQUIRE(preimage.has_value());
  CHECK(format_word(*preimage) == "1,1,2,6");
  CHECK(port_to_word(five) == *preimage);
}

TEST_CASE("slot count is 2m-1, exhaustive m <= 7") {
  for (int n = 0; n <= 6; ++n) {
    for (const TrapezoidalWord& w : all_words(n)) {
      const Port t = word_to_port(w);
      CHECK(gap_positions(t).size() ==
            2 * static_cast<std::size_t>(t.node_count()) - 1);
    }
  }
}

TEST_CASE("insert/remove invert each other element-wise") {
  for (int n = 0; n <= 5; ++n) {
    for (const TrapezoidalWord& w : all_words(n)) {
      const Port t = word_to_port(w);
      for (int x = 1; x <= 2 * t.node_count() - 1; ++x) {
        const Port grown = insert_node(t, x);
        CHECK(grown.node_count() == t.node_count() + 1);
        const auto [back, slot] = remove_max(grown);
        CHECK(back == t);
        CHECK(slot == x);
      }
      if (t.node_count() >= 2) {
        const auto [reduced, x] = remove_max(t);
        CHECK(insert_node(reduced, x) == t);
      }
    }
  }
}

TEST_CASE("word<->port is a bijection, exhaustive n <= 6") {
  for (int n = 0; n <= 6; ++n) {
    std::set<std::string> images;
    for (const TrapezoidalWord& w : all_words(n)) {
      const Port t = word_to_port(w);
      REQUIRE(port_to_word(t) == w);
      images.insert(format_port(t));
    }
    CHECK(BigInt(images.size()) == double_factorial(2LL * n - 1));
  }
}

TEST_SUITE_END();
