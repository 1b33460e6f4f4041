#include "commgraph/commuting.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "commgraph/detail/scan.hpp"

namespace commgraph {

  Budget Budget::from_env() {
    Budget b;
    if (char const* env = std::getenv("COMMGRAPH_BUDGET_ELEMS")) {
      char*              end   = nullptr;
      unsigned long long value = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0') {
        b.brute_center_elems         = value;
        b.scan_elems                 = value;
        b.materialize_elems          = value;
        b.exact_diameter_elems       = value;
        b.implicit_bfs_elems         = value;
        b.bruteforce_connector_elems = value;
      }
    }
    return b;
  }

  bool in_universe(PTrans const& t, Universe u) {
    switch (u) {
      case Universe::all_partial:
        return true;
      case Universe::full:
        return is_full(t);
      case Universe::permutations:
        return is_permutation(t);
      case Universe::strictly_partial:
        return !is_full(t);
    }
    return false;
  }

  std::string_view to_string(Universe u) {
    switch (u) {
      case Universe::all_partial:
        return "all_partial";
      case Universe::full:
        return "full";
      case Universe::permutations:
        return "permutations";
      case Universe::strictly_partial:
        return "strictly_partial";
    }
    return "?";
  }

  std::string_view to_string(Semigroup s) {
    return s == Semigroup::full ? "full" : "all_partial";
  }

  std::string_view to_string(Strategy s) {
    switch (s) {
      case Strategy::automatic:
        return "automatic";
      case Strategy::scan:
        return "scan";
      case Strategy::backtrack:
        return "backtrack";
    }
    return "?";
  }

  Universe universe_from_string(std::string_view s) {
    if (s == "all_partial" || s == "partial" || s == "P") {
      return Universe::all_partial;
    }
    if (s == "full" || s == "T") {
      return Universe::full;
    }
    if (s == "permutations" || s == "S") {
      return Universe::permutations;
    }
    if (s == "strictly_partial") {
      return Universe::strictly_partial;
    }
    throw PreconditionError("unknown universe '" + std::string(s) + "'");
  }

  Semigroup semigroup_from_string(std::string_view s) {
    if (s == "all_partial" || s == "partial" || s == "P") {
      return Semigroup::all_partial;
    }
    if (s == "full" || s == "T") {
      return Semigroup::full;
    }
    throw PreconditionError("unknown semigroup '" + std::string(s) + "'");
  }

  Strategy strategy_from_string(std::string_view s) {
    if (s == "auto" || s == "automatic") {
      return Strategy::automatic;
    }
    if (s == "scan") {
      return Strategy::scan;
    }
    if (s == "backtrack") {
      return Strategy::backtrack;
    }
    throw PreconditionError("unknown strategy '" + std::string(s) + "'");
  }

  Strategy resolve(Strategy strategy, std::size_t n) {
    if (strategy != Strategy::automatic) {
      return strategy;
    }
    return n < 6 ? Strategy::scan : Strategy::backtrack;
  }

  CommGraph::CommGraph(std::size_t n, Semigroup semigroup)
      : n_(n), semigroup_(semigroup) {
    if (n < 2 || n > kMaxPoints) {
      throw PreconditionError("the commuting graph needs 2 <= n <= "
                              + std::to_string(kMaxPoints) + ", got n = "
                              + std::to_string(n));
    }
  }

  bool CommGraph::in_ambient(PTrans const& t) const {
    return t.degree() == n_ && (semigroup_ == Semigroup::all_partial || is_full(t));
  }

  bool CommGraph::is_vertex_unchecked(PTrans const& t) const noexcept {
    if (is_identity(t)) {
      return false;
    }
    return semigroup_ == Semigroup::full || !is_empty(t);
  }

  bool CommGraph::is_vertex(PTrans const& t) const {
    if (t.degree() != n_) {
      throw SizeMismatch(t.degree(), n_);
    }
    if (!in_ambient(t)) {
      throw PreconditionError("element is not in the ambient semigroup");
    }
    return is_vertex_unchecked(t);
  }

  std::uint64_t CommGraph::vertex_count() const {
    if (semigroup_ == Semigroup::full) {
      std::uint64_t full = 1;
      for (std::size_t i = 0; i < n_; ++i) {
        full *= n_;
      }
      return full - 1;
    }
    return universe_size(n_) - 2;
  }

  std::vector<PTrans> center(std::size_t   n,
                             Semigroup     semigroup,
                             CenterMode    mode,
                             Budget const& budget,
                             Parallelism   par) {
    Universe u = semigroup == Semigroup::full ? Universe::full
                                              : Universe::all_partial;
    if (mode == CenterMode::analytic) {
      std::vector<PTrans> result;
      if (n == 1) {
        // Commutative: everything is central.
        result.push_back(empty(1));
        result.push_back(identity(1));
        if (semigroup == Semigroup::full) {
          result.erase(result.begin());
        }
        return result;
      }
      if (semigroup == Semigroup::all_partial) {
        result.push_back(empty(n));
      }
      result.push_back(identity(n));
      std::sort(result.begin(), result.end(),
                [](auto const& a, auto const& b) { return encode(a) < encode(b); });
      return result;
    }
    if (universe_size(n) > budget.brute_center_elems) {
      throw BudgetExceeded("brute-force center needs (n+1)^n <= "
                           + std::to_string(budget.brute_center_elems));
    }
    std::vector<PTrans> members = detail::parallel_collect(
        n, [u](PTrans const& t) { return in_universe(t, u); }, par);
    return detail::parallel_collect(
        n,
        [&](PTrans const& t) {
          if (!in_universe(t, u)) {
            return false;
          }
          for (auto const& s : members) {
            if (!detail::commutes_unchecked(t, s)) {
              return false;
            }
          }
          return true;
        },
        par);
  }

  std::vector<PTrans> common_centralizer(std::span<PTrans const> gens,
                                         Universe                universe,
                                         Strategy                strategy,
                                         Budget const&           budget,
                                         Parallelism             par) {
    if (gens.empty()) {
      throw PreconditionError("common centralizer needs at least one element");
    }
    std::size_t const n = gens.front().degree();
    for (auto const& g : gens) {
      if (g.degree() != n) {
        throw SizeMismatch(g.degree(), n);
      }
    }
    if (resolve(strategy, n) == Strategy::scan) {
      if (universe_size(n) > budget.scan_elems) {
        throw BudgetExceeded("scan centralizer needs (n+1)^n <= "
                             + std::to_string(budget.scan_elems)
                             + "; use the backtrack strategy");
      }
      return detail::parallel_collect(
          n,
          [&](PTrans const& t) {
            if (!in_universe(t, universe)) {
              return false;
            }
            for (auto const& g : gens) {
              if (!detail::commutes_unchecked(g, t)) {
                return false;
              }
            }
            return true;
          },
          par);
    }
    if (n > 12) {
      throw BudgetExceeded("backtrack centralizer supports n <= 12");
    }
    bool const allow_undef = universe == Universe::all_partial
                             || universe == Universe::strictly_partial;
    detail::CentralizerSearch search(gens,
                                     n,
                                     allow_undef,
                                     universe == Universe::permutations,
                                     universe == Universe::strictly_partial,
                                     budget.backtrack_nodes);
    std::vector<std::pair<ElementId, PTrans>> found;
    search.run([&](PTrans const& t) {
      found.emplace_back(encode(t), t);
      return true;
    });
    std::sort(found.begin(), found.end(),
              [](auto const& x, auto const& y) { return x.first < y.first; });
    std::vector<PTrans> result;
    result.reserve(found.size());
    for (auto& [id, t] : found) {
      result.push_back(t);
    }
    return result;
  }

  std::vector<PTrans> centralizer(PTrans const& a,
                                  Universe      universe,
                                  Strategy      strategy,
                                  Budget const& budget,
                                  Parallelism   par) {
    return common_centralizer(std::span<PTrans const>(&a, 1), universe,
                              strategy, budget, par);
  }

  std::vector<PTrans> neighbors(CommGraph const& g,
                                PTrans const&    a,
                                Strategy         strategy,
                                Budget const&    budget,
                                Parallelism      par) {
    if (!g.is_vertex(a)) {
      throw PreconditionError("neighbors: element is not a vertex");
    }
    auto result = centralizer(a, g.universe(), strategy, budget, par);
    std::erase_if(result, [&](PTrans const& t) {
      return t == a || !g.is_vertex_unchecked(t);
    });
    return result;
  }

}  // namespace commgraph
