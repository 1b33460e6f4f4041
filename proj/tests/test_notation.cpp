#include <doctest.h>

#include "commgraph/notation.hpp"
#include "support.hpp"

using namespace commgraph;
using namespace test_support;

TEST_CASE("tabular") {
  CHECK(images_of(parse_tabular("2 3 4 1")) == std::vector<int>{1, 2, 3, 0});
  CHECK(is_idempotent(parse_tabular("3 4 3 4")));
  PTrans t = parse_tabular("2 - 4 1");
  CHECK(dom(t) == PointSet{0, 2, 3});
  CHECK(format_tabular(empty(3)) == "- - -");
  CHECK_THROWS_AS(parse_tabular("2 x 1"), ParseError);
  CHECK_THROWS_AS(parse_tabular("2 5 1"), ParseError);
  CHECK_THROWS_AS(parse_tabular("1 2", 3), ParseError);
  CHECK_THROWS_AS(parse_tabular(""), ParseError);
}

TEST_CASE("chain and cycle") {
  CHECK(parse_chain_cycle("[1 2 3](3 4)", 4) == parse_tabular("2 3 4 3"));
  // 6->4, 4->1, 1->2, 2->3, 3->5, 5->2
  CHECK(parse_chain_cycle("[6 4 1 2](2 3 5)", 6) == parse_tabular("2 3 5 1 2 4"));
  PTrans c8 = parse_chain_cycle("(1 2 3 4 5 6 7 8)");
  CHECK(c8.degree() == 8);
  CHECK(is_full_cycle(c8));
  CHECK(is_permutation(parse_chain_cycle("(1 3)(2 4)")));
  // labels not mentioned stay undefined
  CHECK_FALSE(is_full(parse_chain_cycle("[1 2 3](3 4)", 5)));
  CHECK(is_full(parse_chain_cycle("[1 2 3](3 4)", 4)));
}

TEST_CASE("chain and cycle errors carry positions") {
  try {
    parse_chain_cycle("(1 2)(2 3)");
    FAIL("expected an error");
  } catch (ParseError const& e) {
    CHECK(e.position() == 5);
  }
  try {
    parse_chain_cycle("[1 2 3](4 5)");
    FAIL("expected an error");
  } catch (ParseError const& e) {
    CHECK(e.position() == 0);
  }
  CHECK_THROWS_AS(parse_chain_cycle("[1 2"), ParseError);
  CHECK_THROWS_AS(parse_chain_cycle("(1 2) junk"), ParseError);
  CHECK_THROWS_AS(parse_chain_cycle("(1 9)", 4), ParseError);
  CHECK_THROWS_AS(parse_chain_cycle("[1]"), ParseError);
}

TEST_CASE("idempotent blocks") {
  PTrans e6 = parse_idempotent("{2 6 -> 2}{3 4 -> 3}{5 1 -> 5}");
  CHECK(images_of(e6) == std::vector<int>{4, 1, 2, 2, 4, 1});
  PTrans e8 = parse_idempotent("{1 8 -> 1}{2 5 7 -> 2}{3 4 6 -> 3}");
  CHECK(is_idempotent(e8));
  CHECK(im(e8) == PointSet{0, 1, 2});
  CHECK(parse_idempotent("{1 -> 1}", 1) == identity(1));
  CHECK_THROWS_AS(parse_idempotent("{1 2 -> 3}"), ParseError);
  CHECK_THROWS_AS(parse_idempotent("{1 2 -> 1}{2 3 -> 3}"), ParseError);
  CHECK_THROWS_AS(parse_idempotent("{1 2 1}"), ParseError);
}

TEST_CASE("parse_element dispatch and powers") {
  PTrans a = parse_element("(1 2 3 4 5 6)^3");
  CHECK(a == power(parse_element("(1 2 3 4 5 6)"), 3));
  CHECK(parse_element("2 3 4 1^2") == parse_tabular("3 4 1 2"));
  CHECK(parse_element("{1 2 -> 1}") == parse_tabular("1 1"));
  CHECK_THROWS_AS(parse_element("(1 2)^0"), ParseError);
}

TEST_CASE("formatting round trips") {
  PTrans sq = power(parse_element("(1 2 3 4)"), 2);
  CHECK(format_cycles(sq) == "(1 3)(2 4)");
  CHECK(format_cycles(identity(2)) == "(1)(2)");
  CHECK(parse_element(format_cycles(identity(3)), 3) == identity(3));
  CHECK(format_idempotent(parse_element("3 4 3 4")) == "{1 3 -> 3}{2 4 -> 4}");
  CHECK_THROWS_AS(format_cycles(parse_tabular("1 1")), PreconditionError);

  std::mt19937_64 rng(21);
  for (int i = 0; i < 500; ++i) {
    std::size_t n = 1 + rng() % 9;
    PTrans      t = random_partial(rng, n);
    CHECK(parse_tabular(format_tabular(t), n) == t);
    PTrans p = random_permutation(rng, n);
    CHECK(parse_chain_cycle(format_cycles(p), n) == p);
    PTrans e = idempotent_power(random_full(rng, n)).element;
    PTrans back = parse_idempotent(format_idempotent(e), n);
    CHECK(back == e);
    CHECK(is_idempotent(back));
  }
}
