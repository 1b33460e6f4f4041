#pragma once

// Distances, components and diameters of commuting graphs.
//
// Two engines are provided. The implicit engine runs BFS with a visited
// bitset over all (n+1)^n element ids and generates neighbours on demand
// from centralizers; it handles single-source questions up to n = 8. The
// materialized engine builds the whole vertex graph in CSR form once and
// runs all-sources BFS in parallel; it backs exact diameters and component
// counts for small n.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "commgraph/budget.hpp"
#include "commgraph/commuting.hpp"
#include "commgraph/ptrans.hpp"

namespace commgraph {

  struct PathCertificate {
    std::vector<PTrans> vertices;
    std::size_t         claimed_length = 0;

    static PathCertificate from_vertices(std::vector<PTrans> vertices);
  };

  struct Distance {
    enum class Kind { finite, infinite, exceeds_cap };
    Kind        kind  = Kind::infinite;
    std::size_t value = 0;

    static Distance finite(std::size_t d) {
      return {Kind::finite, d};
    }
    static Distance infinite() {
      return {Kind::infinite, 0};
    }
    static Distance exceeds_cap(std::size_t cap) {
      return {Kind::exceeds_cap, cap};
    }
    bool operator==(Distance const&) const = default;
    std::string to_string() const;
  };

  Distance bfs_distance(CommGraph const&           g,
                        PTrans const&              a,
                        PTrans const&              b,
                        std::optional<std::size_t> cap      = std::nullopt,
                        Strategy                   strategy = Strategy::automatic,
                        Budget const&              budget   = Budget::from_env(),
                        Parallelism                par      = {});

  // nullopt when b is unreachable from a.
  std::optional<PathCertificate> shortest_path(
      CommGraph const& g,
      PTrans const&    a,
      PTrans const&    b,
      Strategy         strategy = Strategy::automatic,
      Budget const&    budget   = Budget::from_env(),
      Parallelism      par      = {});

  // Checks every certificate invariant against g: all entries are vertices,
  // consecutive entries are distinct and commute, entries are pairwise
  // distinct except possibly the two endpoints, and the claimed length is
  // the number of edges.
  bool verify_path(CommGraph const& g, PathCertificate const& c);

  // Collapses a walk x1 ~ x2 ~ ... ~ xk (consecutive entries equal or
  // adjacent) into a path between the same endpoints by cutting loops.
  std::vector<PTrans> walk_to_path(std::vector<PTrans> const& walk);

  // Whole vertex set of a commuting graph with CSR adjacency.
  class VertexGraph {
   public:
    static VertexGraph build(CommGraph const& g,
                             Strategy         strategy = Strategy::automatic,
                             Budget const&    budget   = Budget::from_env(),
                             Parallelism      par      = {});

    std::size_t size() const noexcept {
      return vertices_.size();
    }
    std::uint64_t edge_count() const noexcept {
      return targets_.size() / 2;
    }
    PTrans const& vertex(std::size_t i) const {
      return vertices_[i];
    }
    std::vector<PTrans> const& vertices() const noexcept {
      return vertices_;
    }
    std::span<std::uint32_t const> adjacent(std::size_t i) const {
      return {targets_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
    }
    std::optional<std::size_t> index_of(PTrans const& t) const;
    CommGraph const&           graph() const noexcept {
      return graph_;
    }

   private:
    explicit VertexGraph(CommGraph const& g) : graph_(g) {}

    CommGraph                  graph_;
    std::vector<PTrans>        vertices_;
    std::vector<std::uint64_t> offsets_;
    std::vector<std::uint32_t> targets_;
    std::vector<std::int32_t>  index_by_id_;
  };

  struct ComponentSummary {
    std::size_t                count = 0;
    std::vector<std::uint64_t> sizes;            // ordered by representative
    std::vector<PTrans>        representatives;  // least ElementId in each
    std::vector<std::uint32_t> component_of;     // per VertexGraph index
  };

  // Union-find over the CSR edges.
  ComponentSummary connected_components(VertexGraph const& vg);
  ComponentSummary connected_components(CommGraph const& g,
                                        Strategy strategy = Strategy::automatic,
                                        Budget const& budget = Budget::from_env(),
                                        Parallelism par = {});

  enum class DiameterMode { exact, lower_only };

  struct DiameterReport {
    std::size_t                n         = 0;
    Semigroup                  semigroup = Semigroup::all_partial;
    DiameterMode               mode      = DiameterMode::exact;
    bool                       connected = false;
    // Exact diameter, or in lower_only mode the largest distance found.
    std::size_t                diameter = 0;
    std::size_t                component_count = 0;
    std::vector<std::uint64_t> component_sizes;
    std::optional<std::pair<PTrans, PTrans>> witness_pair;
    double                                   elapsed_ms = 0;
  };

  struct Eccentricity {
    std::size_t   value   = 0;  // largest finite distance
    std::size_t   reached = 0;  // vertices reached, source included
    std::uint32_t farthest = 0;
  };

  // BFS from every vertex of vg; OpenMP over sources.
  std::vector<Eccentricity> all_eccentricities(VertexGraph const& vg,
                                               Parallelism        par = {});

  DiameterReport diameter(CommGraph const&        g,
                          DiameterMode            mode  = DiameterMode::exact,
                          std::span<PTrans const> seeds = {},
                          Strategy      strategy = Strategy::automatic,
                          Budget const& budget   = Budget::from_env(),
                          Parallelism   par      = {});

  // Exact diameter from a prebuilt vertex graph.
  DiameterReport diameter(VertexGraph const& vg, Parallelism par = {});

  // Single-source BFS over the implicit graph to exhaustion.
  struct SourceSweep {
    std::size_t   eccentricity = 0;
    std::uint64_t reached      = 0;
    PTrans        farthest;
  };
  SourceSweep sweep_from(CommGraph const& g,
                         PTrans const&    source,
                         Strategy         strategy = Strategy::automatic,
                         Budget const&    budget   = Budget::from_env(),
                         Parallelism      par      = {});

}  // namespace commgraph
