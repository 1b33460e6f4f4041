#pragma once

// Shared helpers for the test binaries: a seeded generator of random
// elements and definition-level oracles that avoid the library's kernels.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "commgraph/ptrans.hpp"

namespace test_support {

  using commgraph::kUndef;
  using commgraph::Point;
  using commgraph::PTrans;

  inline PTrans random_partial(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<int> d(0, static_cast<int>(n));
    std::vector<Point>                 img(n);
    for (auto& v : img) {
      int x = d(rng);
      v     = x == static_cast<int>(n) ? kUndef : static_cast<Point>(x);
    }
    return PTrans::from_images(img);
  }

  inline PTrans random_full(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<int> d(0, static_cast<int>(n) - 1);
    std::vector<Point>                 img(n);
    for (auto& v : img) {
      v = static_cast<Point>(d(rng));
    }
    return PTrans::from_images(img);
  }

  inline PTrans random_permutation(std::mt19937_64& rng, std::size_t n) {
    std::vector<Point> img(n);
    for (std::size_t i = 0; i < n; ++i) {
      img[i] = static_cast<Point>(i);
    }
    std::shuffle(img.begin(), img.end(), rng);
    return PTrans::from_images(img);
  }

  // x(ab) = (xa)b, straight from the definition.
  inline std::vector<int> compose_by_definition(PTrans const& a, PTrans const& b) {
    std::vector<int> out(a.degree(), -1);
    for (std::size_t x = 0; x < a.degree(); ++x) {
      if (a[x] == kUndef) {
        continue;
      }
      Point y = a[x];
      if (b[y] == kUndef) {
        continue;
      }
      out[x] = b[y];
    }
    return out;
  }

  inline std::vector<int> images_of(PTrans const& t) {
    std::vector<int> out;
    for (std::size_t x = 0; x < t.degree(); ++x) {
      out.push_back(t[x] == kUndef ? -1 : t[x]);
    }
    return out;
  }

  inline bool commute_by_definition(PTrans const& a, PTrans const& b) {
    return compose_by_definition(a, b) == compose_by_definition(b, a);
  }

  inline std::uint64_t encode_by_arithmetic(PTrans const& t) {
    std::uint64_t value = 0, place = 1;
    std::size_t   n     = t.degree();
    for (std::size_t x = 0; x < n; ++x) {
      std::uint64_t digit = t[x] == kUndef ? n : t[x];
      value += digit * place;
      place *= n + 1;
    }
    return value;
  }

}  // namespace test_support
