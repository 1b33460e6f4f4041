#include "commgraph/unified.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "commgraph/detail/scan.hpp"

namespace commgraph {

  UnifiedGraph::UnifiedGraph(std::size_t n, std::vector<Edge> edges)
      : n_(n), edges_(std::move(edges)) {
    for (auto& [x, y] : edges_) {
      if (x >= n_ || y >= n_ || x == y) {
        throw OutOfRange("unified graph edge out of range");
      }
      if (x > y) {
        std::swap(x, y);
      }
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  }

  bool UnifiedGraph::has_edge(std::size_t x, std::size_t y) const {
    if (x > y) {
      std::swap(x, y);
    }
    Edge e{static_cast<Point>(x), static_cast<Point>(y)};
    return std::binary_search(edges_.begin(), edges_.end(), e);
  }

  UnifiedGraph build_unified(PTrans const& a, PTrans const& b) {
    if (a.degree() != b.degree()) {
      throw SizeMismatch(a.degree(), b.degree());
    }
    if (!is_full(a) || !is_full(b)) {
      throw PreconditionError("the unified graph needs two full transformations");
    }
    std::vector<UnifiedGraph::Edge> edges;
    for (PTrans const* t : {&a, &b}) {
      for (std::size_t x = 0; x < t->degree(); ++x) {
        Point y = (*t)[x];
        if (y != x) {
          edges.emplace_back(static_cast<Point>(x), y);
        }
      }
    }
    return UnifiedGraph(a.degree(), std::move(edges));
  }

  bool is_connected(UnifiedGraph const& u) {
    std::size_t const        n = u.degree();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x         = parent[x];
      }
      return x;
    };
    std::size_t components = n;
    for (auto [x, y] : u.edges()) {
      std::size_t rx = find(x), ry = find(y);
      if (rx != ry) {
        parent[std::max(rx, ry)] = std::min(rx, ry);
        --components;
      }
    }
    return components <= 1;
  }

  char const* to_string(ConnectorVerdict v) {
    return v == ConnectorVerdict::proven_empty_only ? "proven_empty_only"
                                                    : "inconclusive";
  }

  ConnectorCertificate certify_no_partial_connector(PTrans const& a,
                                                    PTrans const& b) {
    ConnectorCertificate c;
    c.gamma_connected = is_connected(build_unified(a, b));
    c.verdict         = c.gamma_connected ? ConnectorVerdict::proven_empty_only
                                          : ConnectorVerdict::inconclusive;
    return c;
  }

  std::vector<PTrans> partial_connector_bruteforce(PTrans const& a,
                                                   PTrans const& b,
                                                   Budget const& budget,
                                                   Parallelism   par) {
    if (a.degree() != b.degree()) {
      throw SizeMismatch(a.degree(), b.degree());
    }
    std::size_t const n = a.degree();
    if (universe_size(n) > budget.bruteforce_connector_elems) {
      throw BudgetExceeded("connector brute force needs (n+1)^n <= "
                           + std::to_string(budget.bruteforce_connector_elems));
    }
    return detail::parallel_collect(
        n,
        [&](PTrans const& t) {
          return !is_full(t) && detail::commutes_unchecked(a, t)
                 && detail::commutes_unchecked(b, t);
        },
        par);
  }

  bool domain_respects_edges(UnifiedGraph const& u, PTrans const& gamma) {
    for (auto [x, y] : u.edges()) {
      if (gamma.defined_at(x) != gamma.defined_at(y)) {
        return false;
      }
    }
    return true;
  }

  std::string export_dot(UnifiedGraph const&                            u,
                         std::optional<std::vector<std::string>> const& labels) {
    if (labels && labels->size() != u.degree()) {
      throw PreconditionError("export_dot: need one label per point");
    }
    std::ostringstream out;
    out << "graph G {\n";
    for (std::size_t x = 0; x < u.degree(); ++x) {
      out << "  " << x + 1;
      if (labels) {
        out << " [label=\"" << (*labels)[x] << "\"]";
      }
      out << ";\n";
    }
    for (auto [x, y] : u.edges()) {
      out << "  " << x + 1 << " -- " << y + 1 << ";\n";
    }
    out << "}\n";
    return out.str();
  }

}  // namespace commgraph
