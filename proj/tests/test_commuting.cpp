#include <doctest.h>

#include <algorithm>
#include <random>

#include "commgraph/commuting.hpp"
#include "commgraph/notation.hpp"
#include "commgraph/reference.hpp"
#include "support.hpp"

using namespace commgraph;

namespace {

  bool same_set(std::vector<PTrans> a, std::vector<PTrans> b) {
    auto by_id = [](PTrans const& x, PTrans const& y) { return encode(x) < encode(y); };
    std::sort(a.begin(), a.end(), by_id);
    std::sort(b.begin(), b.end(), by_id);
    return a == b;
  }

  bool sorted_by_id(std::vector<PTrans> const& v) {
    return std::is_sorted(v.begin(), v.end(), [](auto const& x, auto const& y) {
      return encode(x) < encode(y);
    });
  }

}  // namespace

TEST_CASE("center brute force matches the analytic answer") {
  for (std::size_t n = 2; n <= 4; ++n) {
    for (auto s : {Semigroup::all_partial, Semigroup::full}) {
      auto brute    = center(n, s, CenterMode::brute);
      auto analytic = center(n, s, CenterMode::analytic);
      CHECK(brute == analytic);
    }
    CHECK(same_set(center(n, Semigroup::all_partial), {empty(n), identity(n)}));
    CHECK(center(n, Semigroup::full) == std::vector{identity(n)});
  }
}

TEST_CASE("brute center respects the budget") {
  Budget b;
  b.brute_center_elems = 10;
  CHECK_THROWS_AS(center(3, Semigroup::full, CenterMode::brute, b), BudgetExceeded);
}

TEST_CASE("vertex membership") {
  CommGraph p(4, Semigroup::all_partial);
  CommGraph t(4, Semigroup::full);
  CHECK_FALSE(p.is_vertex(empty(4)));
  CHECK_FALSE(p.is_vertex(identity(4)));
  CHECK(p.is_vertex(point_map(4, 0, 1)));
  CHECK_FALSE(t.is_vertex(identity(4)));
  CHECK(t.is_vertex(parse_element("1 1 1 1")));
  CHECK_THROWS_AS(t.is_vertex(point_map(4, 0, 1)), PreconditionError);
  CHECK_THROWS_AS(p.is_vertex(identity(3)), SizeMismatch);
  CHECK(p.vertex_count() == 623);
  CHECK(t.vertex_count() == 255);
  CHECK_THROWS_AS(CommGraph(1, Semigroup::full), PreconditionError);
  CHECK_THROWS_AS(CommGraph(16, Semigroup::full), PreconditionError);
}

TEST_CASE("centralizer of a full cycle is the empty map and its powers") {
  for (std::size_t n = 4; n <= 6; ++n) {
    std::string text = "(";
    for (std::size_t i = 1; i <= n; ++i) {
      text += std::to_string(i) + (i < n ? " " : ")");
    }
    PTrans const        a = parse_element(text);
    std::vector<PTrans> expected{empty(n)};
    for (std::size_t k = 1; k <= n; ++k) {
      expected.push_back(power(a, k));
    }
    auto got = centralizer(a, Universe::all_partial, Strategy::backtrack);
    CHECK(got.size() == n + 1);
    CHECK(same_set(got, expected));
    CHECK(sorted_by_id(got));
    if (n <= 5) {
      CHECK(centralizer(a, Universe::all_partial, Strategy::scan) == got);
    }
  }
}

TEST_CASE("scan, backtrack and reference centralizers agree") {
  std::mt19937_64 rng(20261014);
  for (std::size_t n : {3u, 4u, 5u}) {
    for (int trial = 0; trial < (n == 5 ? 20 : 100); ++trial) {
      PTrans a = trial % 3 == 0 ? test_support::random_full(rng, n)
                                : test_support::random_partial(rng, n);
      for (auto u : {Universe::all_partial, Universe::full, Universe::permutations,
                     Universe::strictly_partial}) {
        auto ref  = reference::centralizer(a, u);
        auto scan = centralizer(a, u, Strategy::scan);
        auto back = centralizer(a, u, Strategy::backtrack);
        REQUIRE(scan == ref);
        REQUIRE(back == ref);
      }
    }
  }
}

TEST_CASE("centralizers are closed under composition") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    PTrans a  = test_support::random_partial(rng, 4);
    auto   cz = centralizer(a, Universe::all_partial);
    for (auto const& u : cz) {
      CHECK(test_support::commute_by_definition(a, u));
    }
    for (auto const& u : cz) {
      for (auto const& v : cz) {
        REQUIRE(std::find(cz.begin(), cz.end(), u * v) != cz.end());
      }
    }
  }
}

TEST_CASE("common centralizer is the intersection") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    PTrans a = test_support::random_full(rng, 4);
    PTrans b = test_support::random_partial(rng, 4);
    auto   ca = centralizer(a, Universe::all_partial);
    auto   cb = centralizer(b, Universe::all_partial);
    std::vector<PTrans> both;
    for (auto const& u : ca) {
      if (std::find(cb.begin(), cb.end(), u) != cb.end()) {
        both.push_back(u);
      }
    }
    std::vector<PTrans> gens{a, b};
    CHECK(common_centralizer(gens, Universe::all_partial, Strategy::scan) == both);
    CHECK(common_centralizer(gens, Universe::all_partial, Strategy::backtrack) == both);
  }
  CHECK_THROWS_AS(common_centralizer({}, Universe::all_partial), PreconditionError);
  std::vector<PTrans> mixed{identity(3), identity(4)};
  CHECK_THROWS_AS(common_centralizer(mixed, Universe::all_partial), SizeMismatch);
}

TEST_CASE("neighbours of the 4-cycle") {
  CommGraph const g(4, Semigroup::all_partial);
  PTrans const    a = parse_element("(1 2 3 4)");
  auto            nb = neighbors(g, a);
  CHECK(same_set(nb, {power(a, 2), power(a, 3)}));
  CHECK_THROWS_AS(neighbors(g, identity(4)), PreconditionError);
}

TEST_CASE("chain and cycle maps have trivial unit and partial centralizers") {
  for (char const* text : {"[1 2 3](3 4)", "[5 1](1 2 3 4)", "[6 4 1 2](2 3 5)"}) {
    PTrans const a = parse_element(text);
    std::size_t  n = a.degree();
    CAPTURE(text);
    CHECK(centralizer(a, Universe::permutations, Strategy::scan)
          == std::vector{identity(n)});
    CHECK(centralizer(a, Universe::strictly_partial, Strategy::scan)
          == std::vector{empty(n)});
  }
}

TEST_CASE("backtracking refuses large ground sets") {
  CHECK_THROWS_AS(centralizer(identity(13), Universe::permutations, Strategy::backtrack),
                  BudgetExceeded);
  Budget b;
  b.scan_elems = 100;
  CHECK_THROWS_AS(centralizer(identity(4), Universe::full, Strategy::scan, b),
                  BudgetExceeded);
}

TEST_CASE("strategy names round-trip") {
  for (auto s : {Strategy::automatic, Strategy::scan, Strategy::backtrack}) {
    CHECK(strategy_from_string(to_string(s)) == s);
  }
  CHECK(resolve(Strategy::automatic, 5) == Strategy::scan);
  CHECK(resolve(Strategy::automatic, 6) == Strategy::backtrack);
  CHECK_THROWS_AS(universe_from_string("Q"), PreconditionError);
}
