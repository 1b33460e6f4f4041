#pragma once

// The commuting graph C(S) of S = P(X) or T(X) as an implicit graph.
// Vertices are S minus its center; distinct vertices are adjacent when they
// commute.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "commgraph/budget.hpp"
#include "commgraph/detail/backtrack.hpp"
#include "commgraph/ptrans.hpp"

namespace commgraph {

  enum class Universe { all_partial, full, permutations, strictly_partial };
  enum class Semigroup { all_partial, full };
  enum class CenterMode { analytic, brute };
  enum class Strategy { automatic, scan, backtrack };

  bool in_universe(PTrans const& t, Universe u);

  std::string_view to_string(Universe u);
  std::string_view to_string(Semigroup s);
  std::string_view to_string(Strategy s);
  Universe         universe_from_string(std::string_view s);
  Semigroup        semigroup_from_string(std::string_view s);
  Strategy         strategy_from_string(std::string_view s);

  class CommGraph {
   public:
    CommGraph(std::size_t n, Semigroup semigroup);

    std::size_t degree() const noexcept {
      return n_;
    }
    Semigroup semigroup() const noexcept {
      return semigroup_;
    }
    Universe universe() const noexcept {
      return semigroup_ == Semigroup::full ? Universe::full
                                           : Universe::all_partial;
    }

    bool in_ambient(PTrans const& t) const;
    // Throws PreconditionError if t is not in the ambient semigroup.
    bool is_vertex(PTrans const& t) const;
    // Same test without the ambient check, for kernels that already know.
    bool is_vertex_unchecked(PTrans const& t) const noexcept;

    std::uint64_t vertex_count() const;

   private:
    std::size_t n_;
    Semigroup   semigroup_;
  };

  std::vector<PTrans> center(std::size_t n,
                             Semigroup   semigroup,
                             CenterMode  mode   = CenterMode::analytic,
                             Budget const& budget = Budget::from_env(),
                             Parallelism par    = {});

  // Every u in the universe commuting with a, sorted by ElementId.
  std::vector<PTrans> centralizer(PTrans const& a,
                                  Universe      universe,
                                  Strategy      strategy = Strategy::automatic,
                                  Budget const& budget   = Budget::from_env(),
                                  Parallelism   par      = {});

  // Every u in the universe commuting with all of gens, sorted by ElementId.
  std::vector<PTrans> common_centralizer(std::span<PTrans const> gens,
                                         Universe universe,
                                         Strategy strategy = Strategy::automatic,
                                         Budget const& budget = Budget::from_env(),
                                         Parallelism par = {});

  // Vertices adjacent to the vertex a, sorted by ElementId.
  std::vector<PTrans> neighbors(CommGraph const& g,
                                PTrans const&    a,
                                Strategy         strategy = Strategy::automatic,
                                Budget const&    budget   = Budget::from_env(),
                                Parallelism      par      = {});

  // Strategy::automatic resolves to scan below n = 6 and backtrack above.
  Strategy resolve(Strategy strategy, std::size_t n);


}  // namespace commgraph

