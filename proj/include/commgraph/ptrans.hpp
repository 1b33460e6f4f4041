#pragma once

// Partial transformations of the ground set {0, ..., n-1}.
//
// Composition is a right action, matching the usual semigroup convention:
// the product a * b first applies a, then b, so x(ab) = (xa)b.

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#if defined(__SSSE3__)
#include <tmmintrin.h>
#endif

#include "commgraph/error.hpp"

namespace commgraph {

  using Point = std::uint8_t;

  // Largest supported ground set. Image slot 15 is a sink that always holds
  // kUndef, which makes composition a plain table lookup.
  inline constexpr std::size_t kMaxPoints = 15;
  inline constexpr Point       kUndef     = 15;

  // Subset of the ground set as a 16-bit mask.
  class PointSet {
   public:
    constexpr PointSet() = default;
    constexpr explicit PointSet(std::uint16_t mask) : mask_(mask) {}
    PointSet(std::initializer_list<std::size_t> points);

    static constexpr PointSet all(std::size_t n) {
      return PointSet(static_cast<std::uint16_t>((1u << n) - 1));
    }

    constexpr bool contains(std::size_t x) const {
      return x < 16 && ((mask_ >> x) & 1u);
    }
    constexpr void insert(std::size_t x) {
      mask_ |= static_cast<std::uint16_t>(1u << x);
    }
    constexpr void erase(std::size_t x) {
      mask_ &= static_cast<std::uint16_t>(~(1u << x));
    }
    constexpr std::size_t size() const {
      return static_cast<std::size_t>(std::popcount(mask_));
    }
    constexpr bool empty() const {
      return mask_ == 0;
    }
    constexpr std::uint16_t mask() const {
      return mask_;
    }
    // Smallest element, or 16 if empty.
    constexpr std::size_t min() const {
      return static_cast<std::size_t>(std::countr_zero(mask_));
    }
    std::vector<std::size_t> to_vector() const;

    constexpr PointSet operator|(PointSet other) const {
      return PointSet(static_cast<std::uint16_t>(mask_ | other.mask_));
    }
    constexpr PointSet operator&(PointSet other) const {
      return PointSet(static_cast<std::uint16_t>(mask_ & other.mask_));
    }
    // Relative complement.
    constexpr PointSet operator-(PointSet other) const {
      return PointSet(static_cast<std::uint16_t>(mask_ & ~other.mask_));
    }
    constexpr bool operator==(PointSet const&) const = default;

   private:
    std::uint16_t mask_ = 0;
  };

  // Dense index of a partial transformation: base (n+1) digits, digit x is
  // the image of x, with the undefined image written as digit n.
  struct ElementId {
    std::uint64_t value = 0;
    constexpr auto operator<=>(ElementId const&) const = default;
  };

  // Number of partial transformations on n points, (n+1)^n.
  std::uint64_t universe_size(std::size_t n);

  class PTrans {
   public:
    // The empty map on n points.
    explicit PTrans(std::size_t n = 1);

    // images[x] is the image of x, or kUndef.
    static PTrans from_images(std::span<Point const> images);
    static PTrans from_images(std::initializer_list<int> images);

    std::size_t degree() const noexcept {
      return n_;
    }
    Point operator[](std::size_t x) const noexcept {
      return img_[x];
    }
    bool defined_at(std::size_t x) const noexcept {
      return img_[x] != kUndef;
    }
    std::span<Point const> images() const noexcept {
      return {img_.data(), n_};
    }

    // Raw 16-lane table including the sink slots; used by fast kernels.
    std::array<Point, 16> const& table() const noexcept {
      return img_;
    }

    bool operator==(PTrans const& other) const noexcept {
      return n_ == other.n_ && img_ == other.img_;
    }

    // Unchecked mutation for enumeration kernels; x < degree().
    void set_unchecked(std::size_t x, Point y) noexcept {
      img_[x] = y;
    }

   private:
    std::array<Point, 16> img_;
    std::uint8_t          n_;
  };

  namespace detail {
    // compose without the size check.
    inline PTrans compose_unchecked(PTrans const& a, PTrans const& b) noexcept {
      PTrans result(a.degree());
      auto const& ta = a.table();
      auto const& tb = b.table();
#if defined(__SSSE3__)
      __m128i va = _mm_loadu_si128(reinterpret_cast<__m128i const*>(ta.data()));
      __m128i vb = _mm_loadu_si128(reinterpret_cast<__m128i const*>(tb.data()));
      alignas(16) std::array<Point, 16> out;
      _mm_store_si128(reinterpret_cast<__m128i*>(out.data()),
                      _mm_shuffle_epi8(vb, va));
      for (std::size_t x = 0; x < a.degree(); ++x) {
        result.set_unchecked(x, out[x]);
      }
#else
      for (std::size_t x = 0; x < a.degree(); ++x) {
        result.set_unchecked(x, tb[ta[x]]);
      }
#endif
      return result;
    }

    inline bool commutes_unchecked(PTrans const& a, PTrans const& b) noexcept {
      auto const& ta = a.table();
      auto const& tb = b.table();
#if defined(__SSSE3__)
      __m128i va = _mm_loadu_si128(reinterpret_cast<__m128i const*>(ta.data()));
      __m128i vb = _mm_loadu_si128(reinterpret_cast<__m128i const*>(tb.data()));
      __m128i ab = _mm_shuffle_epi8(vb, va);
      __m128i ba = _mm_shuffle_epi8(va, vb);
      return _mm_movemask_epi8(_mm_cmpeq_epi8(ab, ba)) == 0xFFFF;
#else
      for (std::size_t x = 0; x < a.degree(); ++x) {
        if (tb[ta[x]] != ta[tb[x]]) {
          return false;
        }
      }
      return true;
#endif
    }
  }  // namespace detail

  PTrans compose(PTrans const& a, PTrans const& b);

  inline PTrans operator*(PTrans const& a, PTrans const& b) {
    return compose(a, b);
  }

  PTrans identity(std::size_t n);
  PTrans empty(std::size_t n);
  // The map with domain {x} sending x to y.
  PTrans point_map(std::size_t n, std::size_t x, std::size_t y);
  PTrans partial_identity(std::size_t n, PointSet fixed);

  PointSet    dom(PTrans const& t);
  PointSet    im(PTrans const& t);
  std::size_t rank(PTrans const& t);
  PointSet    preimage(PTrans const& t, std::size_t y);

  bool is_full(PTrans const& t);
  bool is_permutation(PTrans const& t);
  bool is_idempotent(PTrans const& t);
  bool is_empty(PTrans const& t);
  bool is_identity(PTrans const& t);

  PTrans power(PTrans const& t, std::size_t k);

  struct IdempotentPower {
    PTrans      element;
    std::size_t exponent;
  };

  // The least power t^m (m >= 1) that is idempotent.
  IdempotentPower idempotent_power(PTrans const& t);

  using Cycle = std::vector<Point>;

  // Disjoint cycles of a permutation, fixed points included as 1-cycles,
  // each starting at its least point and sorted by that point.
  std::vector<Cycle> cycle_decomposition(PTrans const& t);
  bool               is_full_cycle(PTrans const& t);

  ElementId encode(PTrans const& t);
  PTrans    decode(ElementId id, std::size_t n);

  // Step t to the element with the next ElementId; returns false after
  // wrapping around from the last element.
  inline bool advance(PTrans& t) noexcept {
    auto const n = t.degree();
    for (std::size_t x = 0; x < n; ++x) {
      Point v = t[x];
      if (v == kUndef) {
        t.set_unchecked(x, 0);
      } else if (v + 1u == n) {
        t.set_unchecked(x, kUndef);
        return true;
      } else {
        t.set_unchecked(x, static_cast<Point>(v + 1));
        return true;
      }
    }
    return false;
  }

  inline bool commutes(PTrans const& a, PTrans const& b) {
    if (a.degree() != b.degree()) {
      throw SizeMismatch(a.degree(), b.degree());
    }
    return detail::commutes_unchecked(a, b);
  }

  struct PTransHash {
    std::size_t operator()(PTrans const& t) const noexcept {
      std::uint64_t lo, hi;
      std::memcpy(&lo, t.table().data(), 8);
      std::memcpy(&hi, t.table().data() + 8, 8);
      return std::hash<std::uint64_t>{}(lo * 0x9E3779B97F4A7C15ull ^ hi
                                        ^ t.degree());
    }
  };

}  // namespace commgraph
