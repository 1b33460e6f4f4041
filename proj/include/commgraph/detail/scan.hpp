#pragma once

// OpenMP range sweep over the dense element ids of P(X).

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include <omp.h>

#include "commgraph/budget.hpp"
#include "commgraph/ptrans.hpp"

namespace commgraph::detail {

  inline int worker_count(Parallelism par) {
    return par.workers > 0 ? par.workers : omp_get_max_threads();
  }

  // Every element satisfying keep, in ElementId order. At most limit
  // elements are kept per chunk.
  template <typename Keep>
  std::vector<PTrans> parallel_collect(
      std::size_t n,
      Keep&&      keep,
      Parallelism par,
      std::size_t limit = std::numeric_limits<std::size_t>::max()) {
    std::uint64_t const total   = universe_size(n);
    int const           workers = worker_count(par);
    std::uint64_t const chunks
        = std::max<std::uint64_t>(1, std::min<std::uint64_t>(total, 64ull * workers));
    std::vector<std::vector<PTrans>> parts(chunks);
    std::uint64_t const              step = (total + chunks - 1) / chunks;
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
      std::uint64_t lo = static_cast<std::uint64_t>(c) * step;
      std::uint64_t hi = std::min(total, lo + step);
      if (lo >= hi) {
        continue;
      }
      auto&  out = parts[c];
      PTrans t   = decode(ElementId{lo}, n);
      for (std::uint64_t id = lo; id < hi; ++id) {
        if (keep(t)) {
          out.push_back(t);
          if (out.size() >= limit) {
            break;
          }
        }
        advance(t);
      }
    }
    std::vector<PTrans> result;
    for (auto& part : parts) {
      result.insert(result.end(), part.begin(), part.end());
    }
    if (result.size() > limit) {
      result.resize(limit);
    }
    return result;
  }

}  // namespace commgraph::detail
