#include "commgraph/graphalg.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <unordered_map>

#include <omp.h>

#include "commgraph/detail/scan.hpp"

namespace commgraph {

  namespace {

    class VisitedSet {
     public:
      explicit VisitedSet(std::uint64_t size) : words_((size + 63) / 64, 0) {}

      // Returns true if id was not yet present.
      bool insert(std::uint64_t id) {
        std::uint64_t& w   = words_[id >> 6];
        std::uint64_t  bit = 1ull << (id & 63);
        if (w & bit) {
          return false;
        }
        w |= bit;
        return true;
      }

     private:
      std::vector<std::uint64_t> words_;
    };

    std::uint64_t ambient_size(CommGraph const& g) {
      if (g.semigroup() == Semigroup::all_partial) {
        return universe_size(g.degree());
      }
      std::uint64_t size = 1;
      for (std::size_t i = 0; i < g.degree(); ++i) {
        size *= g.degree();
      }
      return size;
    }

    void require_vertex(CommGraph const& g, PTrans const& t, char const* what) {
      if (!g.is_vertex(t)) {
        throw PreconditionError(std::string(what) + " is not a vertex");
      }
    }

    struct BfsOutcome {
      std::optional<std::size_t> target_depth;
      bool                       capped     = false;
      std::size_t                last_level = 0;
      std::uint64_t              reached    = 1;
      std::uint64_t              farthest   = 0;
      std::unordered_map<std::uint64_t, std::uint64_t> parent;
    };

    // Level-synchronous BFS. Neighbour lists of a batch of frontier vertices
    // are computed in parallel, then merged serially in frontier order, so
    // the traversal is independent of the worker count.
    BfsOutcome implicit_bfs(CommGraph const&           g,
                            PTrans const&              source,
                            std::optional<PTrans>      target,
                            std::optional<std::size_t> cap,
                            bool                       record_parents,
                            Strategy                   strategy,
                            Budget const&              budget,
                            Parallelism                par) {
      std::size_t const n = g.degree();
      if (universe_size(n) > budget.implicit_bfs_elems) {
        throw BudgetExceeded("implicit BFS needs (n+1)^n <= "
                             + std::to_string(budget.implicit_bfs_elems));
      }
      strategy = resolve(strategy, n);
      BfsOutcome    out;
      std::uint64_t source_id = encode(source).value;
      std::optional<std::uint64_t> target_id;
      if (target) {
        target_id = encode(*target).value;
        if (*target_id == source_id) {
          out.target_depth = 0;
          return out;
        }
      }
      VisitedSet visited(universe_size(n));
      visited.insert(source_id);
      out.farthest = source_id;

      int const                  workers = detail::worker_count(par);
      std::size_t const          batch   = 64 * static_cast<std::size_t>(workers);
      std::vector<std::uint64_t> frontier{source_id};
      std::vector<std::uint64_t> next;
      std::vector<std::vector<std::uint64_t>> lists;
      std::size_t                             level = 0;

      while (!frontier.empty()) {
        if (cap && level >= *cap) {
          out.capped = true;
          return out;
        }
        next.clear();
        for (std::size_t lo = 0; lo < frontier.size(); lo += batch) {
          std::size_t hi = std::min(frontier.size(), lo + batch);
          lists.assign(hi - lo, {});
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
          for (std::int64_t i = static_cast<std::int64_t>(lo);
               i < static_cast<std::int64_t>(hi);
               ++i) {
            PTrans v  = decode(ElementId{frontier[i]}, n);
            auto   nb = neighbors(g, v, strategy, budget, Parallelism{1});
            auto&  ids = lists[i - lo];
            ids.reserve(nb.size());
            for (auto const& u : nb) {
              ids.push_back(encode(u).value);
            }
          }
          for (std::size_t i = lo; i < hi; ++i) {
            for (std::uint64_t id : lists[i - lo]) {
              if (visited.insert(id)) {
                next.push_back(id);
                ++out.reached;
                if (record_parents) {
                  out.parent.emplace(id, frontier[i]);
                }
                if (target_id && id == *target_id) {
                  out.target_depth = level + 1;
                  out.last_level   = level + 1;
                  return out;
                }
              }
            }
          }
        }
        if (next.empty()) {
          break;
        }
        ++level;
        out.last_level = level;
        out.farthest   = *std::min_element(next.begin(), next.end());
        frontier.swap(next);
      }
      return out;
    }

  }  // namespace

  std::string Distance::to_string() const {
    switch (kind) {
      case Kind::finite:
        return std::to_string(value);
      case Kind::infinite:
        return "inf";
      case Kind::exceeds_cap:
        return ">" + std::to_string(value);
    }
    return "?";
  }

  PathCertificate PathCertificate::from_vertices(std::vector<PTrans> vertices) {
    PathCertificate c;
    c.claimed_length = vertices.empty() ? 0 : vertices.size() - 1;
    c.vertices       = std::move(vertices);
    return c;
  }

  Distance bfs_distance(CommGraph const&           g,
                        PTrans const&              a,
                        PTrans const&              b,
                        std::optional<std::size_t> cap,
                        Strategy                   strategy,
                        Budget const&              budget,
                        Parallelism                par) {
    require_vertex(g, a, "bfs_distance: first argument");
    require_vertex(g, b, "bfs_distance: second argument");
    auto out = implicit_bfs(g, a, b, cap, false, strategy, budget, par);
    if (out.target_depth) {
      return Distance::finite(*out.target_depth);
    }
    if (out.capped) {
      return Distance::exceeds_cap(*cap);
    }
    return Distance::infinite();
  }

  std::optional<PathCertificate> shortest_path(CommGraph const& g,
                                               PTrans const&    a,
                                               PTrans const&    b,
                                               Strategy         strategy,
                                               Budget const&    budget,
                                               Parallelism      par) {
    require_vertex(g, a, "shortest_path: first argument");
    require_vertex(g, b, "shortest_path: second argument");
    auto out = implicit_bfs(g, a, b, std::nullopt, true, strategy, budget, par);
    if (!out.target_depth) {
      return std::nullopt;
    }
    std::vector<PTrans> path;
    std::uint64_t       id     = encode(b).value;
    std::uint64_t const source = encode(a).value;
    path.push_back(b);
    while (id != source) {
      id = out.parent.at(id);
      path.push_back(decode(ElementId{id}, g.degree()));
    }
    std::reverse(path.begin(), path.end());
    return PathCertificate::from_vertices(std::move(path));
  }

  bool verify_path(CommGraph const& g, PathCertificate const& c) {
    auto const& v = c.vertices;
    if (v.empty() || c.claimed_length != v.size() - 1) {
      return false;
    }
    for (auto const& t : v) {
      if (!g.in_ambient(t) || !g.is_vertex_unchecked(t)) {
        return false;
      }
    }
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
      if (v[i] == v[i + 1] || !detail::commutes_unchecked(v[i], v[i + 1])) {
        return false;
      }
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
      for (std::size_t j = i + 1; j < v.size(); ++j) {
        bool endpoints = i == 0 && j == v.size() - 1;
        if (!endpoints && v[i] == v[j]) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<PTrans> walk_to_path(std::vector<PTrans> const& walk) {
    std::vector<PTrans> path;
    for (auto const& t : walk) {
      auto it = std::find(path.begin(), path.end(), t);
      if (it != path.end()) {
        path.erase(it + 1, path.end());
      } else {
        path.push_back(t);
      }
    }
    return path;
  }

  VertexGraph VertexGraph::build(CommGraph const& g,
                                 Strategy         strategy,
                                 Budget const&    budget,
                                 Parallelism      par) {
    std::size_t const n = g.degree();
    if (ambient_size(g) > budget.materialize_elems) {
      throw BudgetExceeded("materializing the commuting graph needs |S| <= "
                           + std::to_string(budget.materialize_elems));
    }
    strategy = resolve(strategy, n);
    VertexGraph vg(g);
    vg.vertices_ = detail::parallel_collect(
        n,
        [&](PTrans const& t) { return g.in_ambient(t) && g.is_vertex_unchecked(t); },
        par);
    std::size_t const V = vg.vertices_.size();
    vg.index_by_id_.assign(universe_size(n), -1);
    for (std::size_t i = 0; i < V; ++i) {
      vg.index_by_id_[encode(vg.vertices_[i]).value] = static_cast<std::int32_t>(i);
    }

    std::vector<std::vector<std::uint32_t>> lists(V);
    int const workers = detail::worker_count(par);
#pragma omp parallel for schedule(dynamic, 16) num_threads(workers)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(V); ++i) {
      auto& out = lists[i];
      if (strategy == Strategy::scan) {
        PTrans const& a = vg.vertices_[i];
        for (std::size_t j = 0; j < V; ++j) {
          if (static_cast<std::int64_t>(j) != i
              && detail::commutes_unchecked(a, vg.vertices_[j])) {
            out.push_back(static_cast<std::uint32_t>(j));
          }
        }
      } else {
        auto nb = neighbors(g, vg.vertices_[i], Strategy::backtrack, budget,
                            Parallelism{1});
        for (auto const& u : nb) {
          out.push_back(static_cast<std::uint32_t>(
              vg.index_by_id_[encode(u).value]));
        }
      }
    }
    vg.offsets_.assign(V + 1, 0);
    for (std::size_t i = 0; i < V; ++i) {
      vg.offsets_[i + 1] = vg.offsets_[i] + lists[i].size();
    }
    vg.targets_.reserve(vg.offsets_[V]);
    for (auto& l : lists) {
      vg.targets_.insert(vg.targets_.end(), l.begin(), l.end());
    }
    return vg;
  }

  std::optional<std::size_t> VertexGraph::index_of(PTrans const& t) const {
    if (t.degree() != graph_.degree()) {
      return std::nullopt;
    }
    auto idx = index_by_id_[encode(t).value];
    if (idx < 0) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(idx);
  }

  ComponentSummary connected_components(VertexGraph const& vg) {
    std::size_t const          V = vg.size();
    std::vector<std::uint32_t> parent(V);
    std::iota(parent.begin(), parent.end(), 0u);
    auto find = [&](std::uint32_t x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x         = parent[x];
      }
      return x;
    };
    for (std::size_t i = 0; i < V; ++i) {
      for (std::uint32_t j : vg.adjacent(i)) {
        std::uint32_t ri = find(static_cast<std::uint32_t>(i));
        std::uint32_t rj = find(j);
        if (ri != rj) {
          // The smaller index becomes the root, so roots are the least
          // ElementId of their component.
          if (ri < rj) {
            parent[rj] = ri;
          } else {
            parent[ri] = rj;
          }
        }
      }
    }
    ComponentSummary summary;
    summary.component_of.resize(V);
    std::vector<std::int64_t> slot(V, -1);
    for (std::size_t i = 0; i < V; ++i) {
      std::uint32_t r = find(static_cast<std::uint32_t>(i));
      if (slot[r] < 0) {
        slot[r] = static_cast<std::int64_t>(summary.count++);
        summary.sizes.push_back(0);
        summary.representatives.push_back(vg.vertex(r));
      }
      summary.component_of[i] = static_cast<std::uint32_t>(slot[r]);
      ++summary.sizes[slot[r]];
    }
    return summary;
  }

  ComponentSummary connected_components(CommGraph const& g,
                                        Strategy         strategy,
                                        Budget const&    budget,
                                        Parallelism      par) {
    return connected_components(VertexGraph::build(g, strategy, budget, par));
  }

  std::vector<Eccentricity> all_eccentricities(VertexGraph const& vg,
                                               Parallelism        par) {
    std::size_t const         V = vg.size();
    std::vector<Eccentricity> result(V);
    int const                 workers = detail::worker_count(par);
#pragma omp parallel num_threads(workers)
    {
      std::vector<std::int32_t>  dist(V, -1);
      std::vector<std::uint32_t> queue(V);
#pragma omp for schedule(dynamic, 8)
      for (std::int64_t s = 0; s < static_cast<std::int64_t>(V); ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::size_t head = 0, tail = 0;
        queue[tail++] = static_cast<std::uint32_t>(s);
        dist[s]       = 0;
        Eccentricity e{0, 0, static_cast<std::uint32_t>(s)};
        while (head < tail) {
          std::uint32_t u = queue[head++];
          std::int32_t  d = dist[u];
          if (static_cast<std::size_t>(d) > e.value
              || (static_cast<std::size_t>(d) == e.value && u < e.farthest)) {
            e.value    = static_cast<std::size_t>(d);
            e.farthest = u;
          }
          for (std::uint32_t w : vg.adjacent(u)) {
            if (dist[w] < 0) {
              dist[w]       = d + 1;
              queue[tail++] = w;
            }
          }
        }
        e.reached = tail;
        result[s] = e;
      }
    }
    return result;
  }

  DiameterReport diameter(VertexGraph const& vg, Parallelism par) {
    auto           start = std::chrono::steady_clock::now();
    DiameterReport report;
    report.n         = vg.graph().degree();
    report.semigroup = vg.graph().semigroup();
    report.mode      = DiameterMode::exact;
    auto        ecc  = all_eccentricities(vg, par);
    std::size_t V    = vg.size();
    report.connected = std::all_of(ecc.begin(), ecc.end(),
                                   [V](auto const& e) { return e.reached == V; });
    if (report.connected) {
      std::size_t best = 0;
      for (std::size_t s = 1; s < V; ++s) {
        if (ecc[s].value > ecc[best].value) {
          best = s;
        }
      }
      report.diameter        = ecc[best].value;
      report.component_count = 1;
      report.component_sizes = {V};
      report.witness_pair
          = std::pair{vg.vertex(best), vg.vertex(ecc[best].farthest)};
    } else {
      auto comps             = connected_components(vg);
      report.component_count = comps.count;
      report.component_sizes = comps.sizes;
    }
    report.elapsed_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return report;
  }

  SourceSweep sweep_from(CommGraph const& g,
                         PTrans const&    source,
                         Strategy         strategy,
                         Budget const&    budget,
                         Parallelism      par) {
    require_vertex(g, source, "sweep source");
    auto out = implicit_bfs(g, source, std::nullopt, std::nullopt, false,
                            strategy, budget, par);
    return {out.last_level, out.reached, decode(ElementId{out.farthest}, g.degree())};
  }

  DiameterReport diameter(CommGraph const&        g,
                          DiameterMode            mode,
                          std::span<PTrans const> seeds,
                          Strategy                strategy,
                          Budget const&           budget,
                          Parallelism             par) {
    auto start = std::chrono::steady_clock::now();
    if (mode == DiameterMode::exact) {
      if (ambient_size(g) > budget.exact_diameter_elems) {
        throw BudgetExceeded("exact diameter needs |S| <= "
                             + std::to_string(budget.exact_diameter_elems));
      }
      Budget widened            = budget;
      widened.materialize_elems = std::max(budget.materialize_elems,
                                           budget.exact_diameter_elems);
      auto report = diameter(VertexGraph::build(g, strategy, widened, par), par);
      report.elapsed_ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - start)
                              .count();
      return report;
    }
    if (seeds.empty()) {
      throw PreconditionError("lower-bound diameter needs at least one seed");
    }
    DiameterReport report;
    report.n         = g.degree();
    report.semigroup = g.semigroup();
    report.mode      = DiameterMode::lower_only;
    report.connected = true;
    std::uint64_t const V = g.vertex_count();
    for (auto const& seed : seeds) {
      auto sweep = sweep_from(g, seed, strategy, budget, par);
      if (sweep.reached != V) {
        report.connected = false;
        report.component_sizes.push_back(sweep.reached);
      }
      if (!report.witness_pair || sweep.eccentricity > report.diameter) {
        report.diameter     = sweep.eccentricity;
        report.witness_pair = std::pair{seed, sweep.farthest};
      }
    }
    // A single sweep only proves the component count in the connected case.
    report.component_count = report.connected ? 1 : 0;
    if (report.connected) {
      report.component_sizes = {V};
    }
    report.elapsed_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return report;
  }

}  // namespace commgraph
