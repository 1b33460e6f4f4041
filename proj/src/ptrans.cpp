#include "commgraph/ptrans.hpp"

#include <utility>
#include <string>

namespace commgraph {

  namespace {
    void check_degree(std::size_t n) {
      if (n == 0 || n > kMaxPoints) {
        throw OutOfRange("ground-set size must be in [1, "
                         + std::to_string(kMaxPoints)
                         + "], got " + std::to_string(n));
      }
    }

    void check_point(std::size_t n, std::size_t x) {
      if (x >= n) {
        throw OutOfRange("point " + std::to_string(x)
                         + " out of range for ground set of size "
                         + std::to_string(n));
      }
    }
  }  // namespace

  PointSet::PointSet(std::initializer_list<std::size_t> points) {
    for (auto x : points) {
      if (x >= 16) {
        throw OutOfRange("point " + std::to_string(x) + " out of range");
      }
      insert(x);
    }
  }

  std::vector<std::size_t> PointSet::to_vector() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for (std::uint16_t m = mask_; m != 0; m &= static_cast<std::uint16_t>(m - 1)) {
      out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    }
    return out;
  }

  std::uint64_t universe_size(std::size_t n) {
    check_degree(n);
    std::uint64_t result = 1;
    for (std::size_t i = 0; i < n; ++i) {
      result *= n + 1;
    }
    return result;
  }

  PTrans::PTrans(std::size_t n) : n_(static_cast<std::uint8_t>(n)) {
    check_degree(n);
    img_.fill(kUndef);
  }

  PTrans PTrans::from_images(std::span<Point const> images) {
    PTrans result(images.size());
    for (std::size_t x = 0; x < images.size(); ++x) {
      if (images[x] != kUndef) {
        check_point(images.size(), images[x]);
      }
      result.img_[x] = images[x];
    }
    return result;
  }

  PTrans PTrans::from_images(std::initializer_list<int> images) {
    std::vector<Point> v;
    v.reserve(images.size());
    for (int y : images) {
      if (y < 0) {
        v.push_back(kUndef);
      } else if (static_cast<std::size_t>(y) >= images.size()) {
        throw OutOfRange("image " + std::to_string(y) + " out of range");
      } else {
        v.push_back(static_cast<Point>(y));
      }
    }
    return from_images(std::span<Point const>(v));
  }

  PTrans compose(PTrans const& a, PTrans const& b) {
    if (a.degree() != b.degree()) {
      throw SizeMismatch(a.degree(), b.degree());
    }
    return detail::compose_unchecked(a, b);
  }

  PTrans identity(std::size_t n) {
    PTrans t(n);
    for (std::size_t x = 0; x < n; ++x) {
      t.set_unchecked(x, static_cast<Point>(x));
    }
    return t;
  }

  PTrans empty(std::size_t n) {
    return PTrans(n);
  }

  PTrans point_map(std::size_t n, std::size_t x, std::size_t y) {
    PTrans t(n);
    check_point(n, x);
    check_point(n, y);
    t.set_unchecked(x, static_cast<Point>(y));
    return t;
  }

  PTrans partial_identity(std::size_t n, PointSet fixed) {
    PTrans t(n);
    if (fixed.mask() >> n) {
      throw OutOfRange("partial identity set exceeds ground set");
    }
    for (auto x : fixed.to_vector()) {
      t.set_unchecked(x, static_cast<Point>(x));
    }
    return t;
  }

  PointSet dom(PTrans const& t) {
    PointSet result;
    for (std::size_t x = 0; x < t.degree(); ++x) {
      if (t.defined_at(x)) {
        result.insert(x);
      }
    }
    return result;
  }

  PointSet im(PTrans const& t) {
    PointSet result;
    for (std::size_t x = 0; x < t.degree(); ++x) {
      if (t.defined_at(x)) {
        result.insert(t[x]);
      }
    }
    return result;
  }

  std::size_t rank(PTrans const& t) {
    return im(t).size();
  }

  PointSet preimage(PTrans const& t, std::size_t y) {
    check_point(t.degree(), y);
    PointSet result;
    for (std::size_t x = 0; x < t.degree(); ++x) {
      if (t[x] == y) {
        result.insert(x);
      }
    }
    return result;
  }

  bool is_full(PTrans const& t) {
    return dom(t).size() == t.degree();
  }

  bool is_permutation(PTrans const& t) {
    return is_full(t) && rank(t) == t.degree();
  }

  bool is_idempotent(PTrans const& t) {
    return detail::compose_unchecked(t, t) == t;
  }

  bool is_empty(PTrans const& t) {
    return dom(t).empty();
  }

  bool is_identity(PTrans const& t) {
    return t == identity(t.degree());
  }

  PTrans power(PTrans const& t, std::size_t k) {
    if (k == 0) {
      throw PreconditionError("power exponent must be positive");
    }
    // Square-and-multiply; all powers of t commute so order is irrelevant.
    PTrans result = t;
    PTrans base   = t;
    --k;
    while (k > 0) {
      if (k & 1u) {
        result = detail::compose_unchecked(result, base);
      }
      base = detail::compose_unchecked(base, base);
      k >>= 1u;
    }
    return result;
  }

  IdempotentPower idempotent_power(PTrans const& t) {
    // Powers of an element of a finite semigroup are eventually periodic and
    // the cycle contains exactly one idempotent, so this terminates.
    PTrans      current  = t;
    std::size_t exponent = 1;
    while (!is_idempotent(current)) {
      current = detail::compose_unchecked(current, t);
      ++exponent;
    }
    return {current, exponent};
  }

  std::vector<Cycle> cycle_decomposition(PTrans const& t) {
    if (!is_permutation(t)) {
      throw PreconditionError("cycle decomposition requires a permutation");
    }
    std::vector<Cycle> cycles;
    PointSet           seen;
    for (std::size_t x = 0; x < t.degree(); ++x) {
      if (seen.contains(x)) {
        continue;
      }
      Cycle       cycle;
      std::size_t y = x;
      do {
        cycle.push_back(static_cast<Point>(y));
        seen.insert(y);
        y = t[y];
      } while (y != x);
      cycles.push_back(std::move(cycle));
    }
    return cycles;
  }

  bool is_full_cycle(PTrans const& t) {
    return is_permutation(t) && cycle_decomposition(t).size() == 1;
  }

  ElementId encode(PTrans const& t) {
    std::uint64_t const base   = t.degree() + 1;
    std::uint64_t       value  = 0;
    std::uint64_t       weight = 1;
    for (std::size_t x = 0; x < t.degree(); ++x) {
      std::uint64_t digit = t.defined_at(x) ? t[x] : t.degree();
      value += digit * weight;
      weight *= base;
    }
    return ElementId{value};
  }

  PTrans decode(ElementId id, std::size_t n) {
    if (id.value >= universe_size(n)) {
      throw OutOfRange("element id " + std::to_string(id.value)
                       + " out of range for n = " + std::to_string(n));
    }
    PTrans        t(n);
    std::uint64_t v = id.value;
    for (std::size_t x = 0; x < n; ++x) {
      auto digit = static_cast<std::size_t>(v % (n + 1));
      v /= n + 1;
      t.set_unchecked(x, digit == n ? kUndef : static_cast<Point>(digit));
    }
    return t;
  }

}  // namespace commgraph
