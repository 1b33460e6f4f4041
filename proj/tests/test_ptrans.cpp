#include <doctest.h>

#include <set>

#include "commgraph/ptrans.hpp"
#include "support.hpp"

using namespace commgraph;
using namespace test_support;

namespace {
  PTrans L(std::initializer_list<int> one_based) {
    std::vector<int> zero;
    for (int v : one_based) {
      zero.push_back(v < 0 ? -1 : v - 1);
    }
    std::vector<Point> pts;
    for (int v : zero) {
      pts.push_back(v < 0 ? kUndef : static_cast<Point>(v));
    }
    return PTrans::from_images(pts);
  }
}  // namespace

TEST_CASE("composition applies the left factor first") {
  PTrans a = L({2, 3, 4, 1});
  PTrans b = L({2, 3, 4, 3});
  CHECK(a * b == L({3, 4, 3, 2}));
  // 3(ab) = 3 but 3(ba) = 1
  CHECK((a * b)[2] == 2);
  CHECK((b * a)[2] == 0);
  CHECK(a * empty(4) == empty(4));
  CHECK(empty(4) * a == empty(4));

  PTrans y = partial_identity(4, PointSet{0, 2});
  PTrans r = y * a;
  CHECK(dom(r) == PointSet{0, 2});
  CHECK(r[0] == 1);
  CHECK(r[2] == 3);
}

TEST_CASE("compose matches the pointwise definition") {
  std::mt19937_64 rng(11);
  for (std::size_t n = 1; n <= 8; ++n) {
    for (int i = 0; i < 300; ++i) {
      PTrans a = random_partial(rng, n), b = random_partial(rng, n);
      CHECK(images_of(a * b) == compose_by_definition(a, b));
      CHECK(commutes(a, b) == commute_by_definition(a, b));
    }
  }
}

TEST_CASE("composition is associative") {
  std::mt19937_64 rng(12);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (int i = 0; i < 500; ++i) {
      PTrans a = random_partial(rng, n), b = random_partial(rng, n),
             c = random_partial(rng, n);
      CHECK((a * b) * c == a * (b * c));
    }
  }
}

TEST_CASE("domain of a product") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 500; ++i) {
    PTrans   a = random_partial(rng, 6), b = random_partial(rng, 6);
    PointSet expected;
    for (std::size_t x = 0; x < 6; ++x) {
      if (a.defined_at(x) && b.defined_at(a[x])) {
        expected.insert(x);
      }
    }
    CHECK(dom(a * b) == expected);
    // dom(ab) = (im a & dom b) a^-1
    PointSet via_preimage;
    for (std::size_t y : (im(a) & dom(b)).to_vector()) {
      via_preimage = via_preimage | preimage(a, y);
    }
    CHECK(dom(a * b) == via_preimage);
  }
}

TEST_CASE("constructors") {
  CHECK(images_of(point_map(4, 0, 2)) == std::vector<int>{2, -1, -1, -1});
  CHECK(images_of(partial_identity(4, PointSet{1, 3})) == std::vector<int>{-1, 1, -1, 3});
  CHECK(identity(3) * L({2, -1, 1}) == L({2, -1, 1}));
  CHECK(is_empty(empty(5)));
  CHECK(is_identity(identity(5)));
  CHECK_THROWS_AS(point_map(4, 4, 0), OutOfRange);
  CHECK_THROWS_AS(partial_identity(3, PointSet{3}), OutOfRange);
  CHECK_THROWS_AS(L({1, 2}) * L({1, 2, 3}), SizeMismatch);
  CHECK_THROWS_AS(PTrans::from_images({0, 3, 1}), OutOfRange);
}

TEST_CASE("domain, image, rank, preimage") {
  PTrans t = L({2, 3, 4, 3});
  CHECK(im(t) == PointSet{1, 2, 3});
  CHECK(rank(t) == 3);
  CHECK(preimage(t, 2) == PointSet{1, 3});
  CHECK(dom(empty(5)).empty());
  CHECK(rank(empty(5)) == 0);
}

TEST_CASE("predicates") {
  CHECK(is_idempotent(L({3, 4, 3, 4})));
  CHECK(is_permutation(L({2, 3, 4, 1})));
  CHECK(is_idempotent(empty(4)));
  CHECK_FALSE(is_full(empty(4)));
  CHECK(is_full(L({1, 1, 1})));
  CHECK_FALSE(is_permutation(L({1, 1, 1})));
  CHECK_FALSE(is_permutation(L({2, 1, -1})));
}

TEST_CASE("powers and idempotent powers") {
  PTrans b = L({2, 3, 4, 3});
  CHECK(idempotent_power(b).element == L({3, 4, 3, 4}));
  PTrans e = L({3, 4, 3, 4});
  CHECK(idempotent_power(e).exponent == 1);
  PTrans c   = L({2, 3, 4, 1});
  auto   ipc = idempotent_power(c);
  CHECK(ipc.element == identity(4));
  CHECK(ipc.exponent == 4);
  CHECK(power(c, 1) == c);
  CHECK(power(c, 6) == power(c, 2));
  CHECK_THROWS_AS(power(c, 0), PreconditionError);

  std::mt19937_64 rng(14);
  for (int i = 0; i < 500; ++i) {
    PTrans t  = random_partial(rng, 6);
    auto   ip = idempotent_power(t);
    CHECK(is_idempotent(ip.element));
    PTrans naive = t;
    for (std::size_t k = 1; k < ip.exponent; ++k) {
      naive = naive * t;
    }
    CHECK(naive == ip.element);
    // no smaller power is idempotent
    PTrans p = t;
    for (std::size_t k = 1; k < ip.exponent; ++k, p = p * t) {
      CHECK_FALSE(is_idempotent(p));
    }
  }
}

TEST_CASE("cycle decomposition") {
  auto cyc = cycle_decomposition(L({2, 3, 4, 1}));
  REQUIRE(cyc.size() == 1);
  CHECK(cyc[0] == Cycle{0, 1, 2, 3});
  CHECK(is_full_cycle(L({2, 3, 4, 1})));

  auto sq = cycle_decomposition(L({3, 4, 1, 2}));
  REQUIRE(sq.size() == 2);
  CHECK(sq[0] == Cycle{0, 2});
  CHECK(sq[1] == Cycle{1, 3});

  CHECK(cycle_decomposition(identity(4)).size() == 4);
  CHECK_FALSE(is_full_cycle(identity(4)));
  CHECK_THROWS_AS(cycle_decomposition(L({1, 1})), PreconditionError);

  std::mt19937_64 rng(15);
  for (int i = 0; i < 300; ++i) {
    PTrans p = random_permutation(rng, 7);
    PTrans rebuilt = identity(7);
    for (auto const& c : cycle_decomposition(p)) {
      std::vector<Point> img(7);
      for (std::size_t x = 0; x < 7; ++x) {
        img[x] = static_cast<Point>(x);
      }
      for (std::size_t k = 0; k < c.size(); ++k) {
        img[c[k]] = c[(k + 1) % c.size()];
      }
      rebuilt = rebuilt * PTrans::from_images(img);
    }
    CHECK(rebuilt == p);
  }
}

TEST_CASE("encode and decode") {
  CHECK(encode(empty(2)).value == 8);
  CHECK(encode(identity(2)).value == 3);
  CHECK(universe_size(4) == 625);
  CHECK_THROWS_AS(decode(ElementId{9}, 2), OutOfRange);

  std::mt19937_64 rng(16);
  for (int i = 0; i < 1000; ++i) {
    std::size_t n = 1 + rng() % 10;
    PTrans      t = random_partial(rng, n);
    CHECK(encode(t).value == encode_by_arithmetic(t));
    CHECK(decode(encode(t), n) == t);
  }

  // Bijection, and advance() walks ids in order.
  for (std::size_t n = 1; n <= 4; ++n) {
    std::set<std::uint64_t> seen;
    PTrans                  t = decode(ElementId{0}, n);
    for (std::uint64_t id = 0; id < universe_size(n); ++id) {
      CHECK(encode(t).value == id);
      CHECK(decode(ElementId{id}, n) == t);
      seen.insert(encode(t).value);
      bool more = advance(t);
      CHECK(more == (id + 1 < universe_size(n)));
    }
    CHECK(seen.size() == universe_size(n));
  }
}

TEST_CASE("point sets") {
  PointSet s{1, 4};
  CHECK(s.contains(4));
  CHECK_FALSE(s.contains(0));
  CHECK(s.min() == 1);
  CHECK((PointSet::all(5) - s).to_vector() == std::vector<std::size_t>{0, 2, 3});
}
