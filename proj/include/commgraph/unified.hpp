#pragma once

// The unified graph of two full transformations a, b on X: vertex set X,
// with {x, y} an edge when one of a, b moves x to y or y to x. When it is
// connected, the empty map is the only strictly partial map commuting with
// both a and b.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "commgraph/budget.hpp"
#include "commgraph/ptrans.hpp"

namespace commgraph {

  class UnifiedGraph {
   public:
    using Edge = std::pair<Point, Point>;  // first < second

    UnifiedGraph(std::size_t n, std::vector<Edge> edges);

    std::size_t degree() const noexcept {
      return n_;
    }
    std::vector<Edge> const& edges() const noexcept {
      return edges_;
    }
    bool has_edge(std::size_t x, std::size_t y) const;

   private:
    std::size_t       n_;
    std::vector<Edge> edges_;
  };

  UnifiedGraph build_unified(PTrans const& a, PTrans const& b);

  bool is_connected(UnifiedGraph const& u);

  enum class ConnectorVerdict { proven_empty_only, inconclusive };

  struct ConnectorCertificate {
    ConnectorVerdict verdict         = ConnectorVerdict::inconclusive;
    bool             gamma_connected = false;
  };

  char const* to_string(ConnectorVerdict v);

  ConnectorCertificate certify_no_partial_connector(PTrans const& a,
                                                    PTrans const& b);

  // Every strictly partial map commuting with both a and b, by exhaustive
  // scan. Guarded by Budget::bruteforce_connector_elems.
  std::vector<PTrans> partial_connector_bruteforce(
      PTrans const& a,
      PTrans const& b,
      Budget const& budget = Budget::from_env(),
      Parallelism   par    = {});

  // True if for every edge {x, y} of u, x is in dom(gamma) exactly when y is.
  bool domain_respects_edges(UnifiedGraph const& u, PTrans const& gamma);

  // Undirected DOT. Nodes are named 1..n; labels, if given, must have n
  // entries and become the node labels.
  std::string export_dot(UnifiedGraph const&                            u,
                         std::optional<std::vector<std::string>> const& labels
                         = std::nullopt);

}  // namespace commgraph
