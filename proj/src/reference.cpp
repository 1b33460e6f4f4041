#include "commgraph/reference.hpp"

#include <algorithm>
#include <queue>

namespace commgraph::reference {

  namespace {

    std::vector<PTrans> all_elements(std::size_t n) {
      std::vector<PTrans> out;
      std::uint64_t const total = universe_size(n);
      out.reserve(total);
      for (std::uint64_t id = 0; id < total; ++id) {
        out.push_back(decode(ElementId{id}, n));
      }
      return out;
    }

    std::vector<std::size_t> bfs_levels(Graph const& graph, std::size_t source) {
      std::vector<std::size_t> dist(graph.vertices.size(), SIZE_MAX);
      std::queue<std::size_t>  queue;
      dist[source] = 0;
      queue.push(source);
      while (!queue.empty()) {
        std::size_t u = queue.front();
        queue.pop();
        for (std::size_t w : graph.adjacency[u]) {
          if (dist[w] == SIZE_MAX) {
            dist[w] = dist[u] + 1;
            queue.push(w);
          }
        }
      }
      return dist;
    }

  }  // namespace

  std::vector<PTrans> centralizer(PTrans const& a, Universe universe) {
    std::vector<PTrans> out;
    for (auto const& t : all_elements(a.degree())) {
      if (in_universe(t, universe) && compose(a, t) == compose(t, a)) {
        out.push_back(t);
      }
    }
    return out;
  }

  Graph build_graph(CommGraph const& g) {
    Graph graph;
    for (auto const& t : all_elements(g.degree())) {
      if (g.in_ambient(t) && g.is_vertex(t)) {
        graph.vertices.push_back(t);
      }
    }
    std::size_t const V = graph.vertices.size();
    graph.adjacency.resize(V);
    for (std::size_t i = 0; i < V; ++i) {
      for (std::size_t j = i + 1; j < V; ++j) {
        auto const& a = graph.vertices[i];
        auto const& b = graph.vertices[j];
        if (compose(a, b) == compose(b, a)) {
          graph.adjacency[i].push_back(j);
          graph.adjacency[j].push_back(i);
        }
      }
    }
    for (auto& list : graph.adjacency) {
      std::sort(list.begin(), list.end());
    }
    return graph;
  }

  std::vector<std::vector<std::size_t>> components(Graph const& graph) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool>                     seen(graph.vertices.size(), false);
    for (std::size_t s = 0; s < graph.vertices.size(); ++s) {
      if (seen[s]) {
        continue;
      }
      auto                     dist = bfs_levels(graph, s);
      std::vector<std::size_t> comp;
      for (std::size_t v = 0; v < dist.size(); ++v) {
        if (dist[v] != SIZE_MAX) {
          seen[v] = true;
          comp.push_back(v);
        }
      }
      out.push_back(std::move(comp));
    }
    return out;
  }

  std::optional<std::size_t> distance(Graph const& graph,
                                      std::size_t  from,
                                      std::size_t  to) {
    auto d = bfs_levels(graph, from)[to];
    if (d == SIZE_MAX) {
      return std::nullopt;
    }
    return d;
  }

  std::optional<std::size_t> diameter(Graph const& graph) {
    std::size_t best = 0;
    for (std::size_t s = 0; s < graph.vertices.size(); ++s) {
      for (std::size_t d : bfs_levels(graph, s)) {
        if (d == SIZE_MAX) {
          return std::nullopt;
        }
        best = std::max(best, d);
      }
    }
    return best;
  }

}  // namespace commgraph::reference
