#include <doctest.h>

#include <random>

#include "commgraph/notation.hpp"
#include "commgraph/witness.hpp"
#include "support.hpp"

using namespace commgraph;

namespace {

  bool is_chain_cycle(PTrans const& t) {
    try {
      chain_cycle_labeling(t);
      return true;
    } catch (PreconditionError const&) {
      return false;
    }
  }

}  // namespace

TEST_CASE("witness pairs have the advertised shape") {
  for (std::size_t n : {4u, 6u, 8u, 9u, 10u, 12u, 15u}) {
    CAPTURE(n);
    auto c = witness_pair(n);
    CHECK(c.n == n);
    CHECK(c.alpha.degree() == n);
    CHECK(c.beta.degree() == n);
    CHECK(is_full(c.alpha));
    CHECK(is_full(c.beta));
    CHECK_FALSE(commutes(c.alpha, c.beta));
    CHECK(c.labels.size() == n);
    CHECK(c.expected_lower_bound == (n == 4 ? 4u : 5u));
    CHECK(is_chain_cycle(c.beta));
    REQUIRE(c.forced_e);
    CHECK(is_idempotent(*c.forced_e));
    if (n == 4 || n == 6 || n == 8) {
      CHECK(is_full_cycle(c.alpha));
      CHECK(commutes(*c.forced_e, c.beta));
    } else {
      CHECK(is_chain_cycle(c.alpha));
      CHECK(commutes(*c.forced_e, c.alpha));
      CHECK(c.forced_f);
    }
    if (c.forced_f) {
      CHECK(is_idempotent(*c.forced_f));
      CHECK(commutes(*c.forced_f, c.beta));
    }
  }
  CHECK(witness_pair(9).family == Family::odd_composite);
  CHECK(witness_pair(10).family == Family::even_composite);
  CHECK(witness_pair(9).labels.front() == "x1");
  CHECK_THROWS_AS(witness_pair(7), PreconditionError);
  CHECK_THROWS_AS(witness_pair(2), PreconditionError);
}

TEST_CASE("displayed idempotents of the small witnesses") {
  CHECK(witness_pair(4).forced_e == parse_element("3 4 3 4"));
  CHECK(witness_pair(6).forced_e == parse_element("{2 6 -> 2}{3 4 -> 3}{5 1 -> 5}"));
  CHECK(witness_pair(8).forced_e
        == parse_element("{1 8 -> 1}{2 5 7 -> 2}{3 4 6 -> 3}"));
}

TEST_CASE("chain/cycle labeling round-trips") {
  for (char const* text : {"[1 2 3](3 4)", "[5 1](1 2 3 4)", "[6 4 1 2](2 3 5)"}) {
    PTrans const a = parse_element(text);
    auto         l = chain_cycle_labeling(a);
    CHECK(l.cycle.size() + l.chain.size() == a.degree());
    CHECK(chain_cycle_map(a.degree(), l) == a);
  }
  CHECK_THROWS_AS(chain_cycle_labeling(identity(4)), PreconditionError);
  CHECK_THROWS_AS(chain_cycle_labeling(parse_element("(1 2 3 4)")), PreconditionError);
  CHECK_THROWS_AS(chain_cycle_labeling(parse_element("1 1 1 1")),
                  PreconditionError);
}

TEST_CASE("the forced idempotent is the only non-identity full idempotent") {
  std::mt19937_64 rng(29);
  for (std::size_t n : {4u, 5u, 6u}) {
    for (std::size_t m = 2; m < n; ++m) {
      std::vector<Point> pts;
      for (std::size_t i = 0; i < n; ++i) {
        pts.push_back(static_cast<Point>(i));
      }
      std::shuffle(pts.begin(), pts.end(), rng);
      ChainCycleLabeling l;
      l.cycle.assign(pts.begin(), pts.begin() + m);
      l.chain.assign(pts.begin() + m, pts.end());
      PTrans const a = chain_cycle_map(n, l);
      PTrans const e = forced_idempotent(m, n - m, l);
      CAPTURE(format_tabular(a));
      std::vector<PTrans> idem;
      for (auto const& u : centralizer(a, Universe::full, Strategy::scan)) {
        if (is_idempotent(u)) {
          idem.push_back(u);
        }
      }
      bool const trivial = e == identity(n);
      CHECK(idem.size() == (trivial ? 1u : 2u));
      CHECK(std::find(idem.begin(), idem.end(), e) != idem.end());
      CHECK(std::find(idem.begin(), idem.end(), identity(n)) != idem.end());
    }
  }
}

TEST_CASE("upper-bound paths on random pairs") {
  std::mt19937_64 rng(31);
  for (std::size_t n : {4u, 6u}) {
    CommGraph const g(n, Semigroup::all_partial);
    for (int trial = 0; trial < 200; ++trial) {
      PTrans a = trial % 2 ? test_support::random_full(rng, n)
                           : test_support::random_partial(rng, n);
      if (trial % 5 == 0) {
        a = test_support::random_permutation(rng, n);
      }
      PTrans b = test_support::random_partial(rng, n);
      if (is_full(b) || !g.is_vertex(a) || !g.is_vertex(b) || a == b) {
        continue;
      }
      BoundedPath p = upper_bound_path(g, a, b);
      CHECK(verify_path(g, p.certificate));
      CHECK(p.certificate.vertices.front() == a);
      CHECK(p.certificate.vertices.back() == b);
      CHECK(p.certificate.claimed_length <= p.bound);
      CHECK(p.bound <= (n == 4 ? 4u : 5u));
      if (a.degree() == 4 && trial % 4 == 0) {
        CHECK(bfs_distance(g, a, b).value <= p.certificate.claimed_length);
      }
    }
  }
}

TEST_CASE("upper-bound path preconditions") {
  CommGraph const g(4, Semigroup::all_partial);
  PTrans const    a = parse_element("(1 2 3 4)");
  CHECK_THROWS_AS(upper_bound_path(g, a, parse_element("[1 2 3](3 4)")),
                  PreconditionError);
  CHECK_THROWS_AS(upper_bound_path(CommGraph(5, Semigroup::all_partial),
                                   parse_element("(1 2 3 4 5)"), point_map(5, 0, 1)),
                  PreconditionError);
  CHECK_THROWS_AS(upper_bound_path(CommGraph(4, Semigroup::full), a, a), PreconditionError);
  auto p = upper_bound_path(g, a, point_map(4, 0, 1));
  CHECK(p.construction == PathConstruction::four_cycle_refined);
  CHECK(p.bound == 4);
}

TEST_CASE("small replays pass") {
  for (std::size_t n : {4u, 6u, 9u}) {
    auto report = replay_lower_bound(witness_pair(n));
    CAPTURE(n);
    CHECK(report.passed);
    CHECK(report.steps.size() == 6);
    CHECK(report.bound == witness_pair(n).expected_lower_bound);
    for (auto const& s : report.steps) {
      CHECK(s.verdict == StepVerdict::pass);
      CHECK_FALSE(s.counterexample);
    }
  }
}
