#pragma once

// Serial, unoptimized versions of the parallel kernels. They decode every
// element from its id and compare products with operator==, so they share
// no code with the fast paths beyond compose itself.

#include <cstddef>
#include <optional>
#include <vector>

#include "commgraph/commuting.hpp"
#include "commgraph/ptrans.hpp"

namespace commgraph::reference {

  std::vector<PTrans> centralizer(PTrans const& a, Universe universe);

  struct Graph {
    std::vector<PTrans>                   vertices;
    std::vector<std::vector<std::size_t>> adjacency;
  };

  Graph build_graph(CommGraph const& g);

  // Components as sorted vertex index lists, ordered by least index.
  std::vector<std::vector<std::size_t>> components(Graph const& graph);

  std::optional<std::size_t> distance(Graph const& graph,
                                      std::size_t  from,
                                      std::size_t  to);

  // nullopt when the graph is disconnected.
  std::optional<std::size_t> diameter(Graph const& graph);

}  // namespace commgraph::reference
