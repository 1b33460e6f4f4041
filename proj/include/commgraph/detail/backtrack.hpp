#pragma once

// Backtracking enumeration of common centralizers in P(X).
//
// Each point x carries a candidate set D(x) of images, a 16-bit mask whose
// bit 15 stands for "undefined". For a generator a and a point y the
// commutation a*g = g*a at y reads g(a(y)) = a(g(y)), with a(undef) = undef.
// That is a functional constraint between the variables g(y) and g(a(y)),
// which is kept arc consistent:
//   D(a(y)) <- D(a(y)) & a(D(y))      D(y) <- D(y) & a^-1(D(a(y)))
// When a(y) is undefined the constraint is unary: g(y) must be undefined or
// leave the domain of a.

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "commgraph/error.hpp"
#include "commgraph/ptrans.hpp"

namespace commgraph {
  enum class Universe;
}

namespace commgraph::detail {

  inline constexpr std::uint16_t kUndefBit = 1u << kUndef;

  class CentralizerSearch {
   public:
    CentralizerSearch(std::span<PTrans const> gens,
                      std::size_t             n,
                      bool                    allow_undef,
                      bool                    injective,
                      bool                    require_undef,
                      std::uint64_t           node_budget)
        : gens_(gens.begin(), gens.end()),
          n_(n),
          injective_(injective),
          require_undef_(require_undef),
          node_budget_(node_budget) {
      std::uint16_t points = static_cast<std::uint16_t>((1u << n) - 1);
      all_values_          = static_cast<std::uint16_t>(points | kUndefBit);
      root_.fill(0);
      for (std::size_t x = 0; x < n; ++x) {
        root_[x] = allow_undef ? all_values_ : points;
      }
      for (auto const& a : gens_) {
        for (std::size_t y = 0; y < n; ++y) {
          Point t = a[y];
          if (t == kUndef) {
            root_[y] &= preimage(a, kUndefBit);
          } else if (t == y) {
            std::uint16_t fixed = 0;
            for (std::size_t v = 0; v < 16; ++v) {
              if ((all_values_ >> v) & 1u) {
                if (a.table()[v] == v) {
                  fixed |= static_cast<std::uint16_t>(1u << v);
                }
              }
            }
            root_[y] &= fixed;
          }
        }
      }
    }

    template <typename Visit>
    std::uint64_t run(Visit&& visit) {
      stopped_ = false;
      nodes_   = 0;
      Domains d = root_;
      search(d, visit);
      return nodes_;
    }

   private:
    using Domains = std::array<std::uint16_t, 16>;

    std::uint16_t image(PTrans const& a, std::uint16_t m) const {
      std::uint16_t r = 0;
      for (; m != 0; m &= static_cast<std::uint16_t>(m - 1)) {
        r |= static_cast<std::uint16_t>(1u << a.table()[std::countr_zero(m)]);
      }
      return r;
    }

    std::uint16_t preimage(PTrans const& a, std::uint16_t m) const {
      std::uint16_t r = 0;
      for (std::uint16_t c = all_values_; c != 0;
           c &= static_cast<std::uint16_t>(c - 1)) {
        int v = std::countr_zero(c);
        if ((m >> a.table()[v]) & 1u) {
          r |= static_cast<std::uint16_t>(1u << v);
        }
      }
      return r;
    }

    bool propagate(Domains& d) const {
      bool changed = true;
      while (changed) {
        changed = false;
        for (auto const& a : gens_) {
          for (std::size_t y = 0; y < n_; ++y) {
            Point t = a[y];
            if (t == kUndef || t == y) {
              continue;  // unary, applied at the root
            }
            std::uint16_t nt = d[t] & image(a, d[y]);
            if (nt != d[t]) {
              if (nt == 0) {
                return false;
              }
              d[t]    = nt;
              changed = true;
            }
            std::uint16_t ny = d[y] & preimage(a, d[t]);
            if (ny != d[y]) {
              if (ny == 0) {
                return false;
              }
              d[y]    = ny;
              changed = true;
            }
          }
        }
        if (injective_) {
          for (std::size_t x = 0; x < n_; ++x) {
            if (std::has_single_bit(d[x])) {
              for (std::size_t z = 0; z < n_; ++z) {
                if (z != x && (d[z] & d[x])) {
                  d[z] &= static_cast<std::uint16_t>(~d[x]);
                  if (d[z] == 0) {
                    return false;
                  }
                  changed = true;
                }
              }
            }
          }
        }
      }
      return true;
    }

    template <typename Visit>
    void search(Domains& d, Visit& visit) {
      if (stopped_) {
        return;
      }
      if (++nodes_ > node_budget_) {
        throw BudgetExceeded("backtracking centralizer exceeded "
                             + std::to_string(node_budget_) + " nodes");
      }
      if (!propagate(d)) {
        return;
      }
      std::size_t best      = n_;
      int         best_size = 17;
      bool        any_undef = false;
      for (std::size_t x = 0; x < n_; ++x) {
        int s = std::popcount(d[x]);
        any_undef |= (d[x] & kUndefBit) != 0;
        if (s > 1 && s < best_size) {
          best      = x;
          best_size = s;
        }
      }
      if (require_undef_ && !any_undef) {
        return;
      }
      if (best == n_) {
        leaf(d, visit);
        return;
      }
      for (std::uint16_t c = d[best]; c != 0;
           c &= static_cast<std::uint16_t>(c - 1)) {
        Domains child = d;
        child[best]   = static_cast<std::uint16_t>(c & -c);
        search(child, visit);
        if (stopped_) {
          return;
        }
      }
    }

    template <typename Visit>
    void leaf(Domains const& d, Visit& visit) {
      PTrans g(n_);
      for (std::size_t x = 0; x < n_; ++x) {
        g.set_unchecked(x, static_cast<Point>(std::countr_zero(d[x])));
      }
      for (auto const& a : gens_) {
        if (!commutes_unchecked(a, g)) {
          return;
        }
      }
      if (!visit(g)) {
        stopped_ = true;
      }
    }

    std::vector<PTrans> gens_;
    std::size_t         n_;
    bool                injective_;
    bool                require_undef_;
    std::uint64_t       node_budget_;
    std::uint16_t       all_values_;
    Domains             root_;
    std::uint64_t       nodes_   = 0;
    bool                stopped_ = false;
  };

}  // namespace commgraph::detail
