#pragma once

#include <cstdint>

namespace commgraph {

  // Size guards for exhaustive operations, counted in elements of the
  // universe (n+1)^n unless stated otherwise.
  struct Budget {
    std::uint64_t brute_center_elems   = 7776;      // n <= 5
    std::uint64_t scan_elems           = 117649;    // n <= 6
    std::uint64_t materialize_elems    = 7776;      // adjacency, components
    std::uint64_t exact_diameter_elems = 3125;      // P(X) n <= 4, T(X) n <= 5
    std::uint64_t implicit_bfs_elems   = 43046721;  // 9^8
    std::uint64_t backtrack_nodes      = 200'000'000;
    std::uint64_t bruteforce_connector_elems = 7776;

    // Defaults, with every element guard replaced by COMMGRAPH_BUDGET_ELEMS
    // when that variable is set.
    static Budget from_env();
  };

  // Worker count for OpenMP kernels; 0 means the runtime default.
  struct Parallelism {
    int workers = 0;
  };

}  // namespace commgraph
