#pragma once

// Text forms for partial transformations. All labels are 1-based.
//
//   tabular       "2 - 4 1"           image of each point in order, '-' undefined
//   chain/cycle   "[1 2 3](3 4)"      each bracketed or parenthesised list maps
//                                     a label to its right neighbour; a cycle
//                                     also closes back to its first label; the
//                                     last label of a chain takes its image
//                                     from elsewhere in the expression
//   idempotent    "{2 6 -> 2}{3 4 -> 3}"  each block is sent to its representative
//
// Labels not mentioned by a chain/cycle or idempotent expression are left
// undefined. Any element may carry a trailing power suffix "^k".

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "commgraph/ptrans.hpp"

namespace commgraph {

  struct ChainCycleExpr {
    std::vector<std::vector<std::size_t>> chains;  // 1-based labels
    std::vector<std::vector<std::size_t>> cycles;  // 1-based labels
    // Text offset of each segment, for error reporting.
    std::vector<std::size_t> chain_offsets;
    std::vector<std::size_t> cycle_offsets;
  };

  struct IdempotentBlock {
    std::vector<std::size_t> labels;  // 1-based
    std::size_t              representative;
  };

  struct IdempotentExpr {
    std::vector<IdempotentBlock> blocks;
    std::vector<std::size_t>     block_offsets;
  };

  // n, when given, fixes the ground set; otherwise tabular input uses its
  // token count and the other grammars use the largest label.
  PTrans parse_tabular(std::string_view text,
                       std::optional<std::size_t> n = std::nullopt);

  ChainCycleExpr read_chain_cycle(std::string_view text);
  PTrans         realize(ChainCycleExpr const& expr, std::size_t n);
  PTrans         parse_chain_cycle(std::string_view text,
                                   std::optional<std::size_t> n = std::nullopt);

  IdempotentExpr read_idempotent(std::string_view text);
  PTrans         realize(IdempotentExpr const& expr, std::size_t n);
  PTrans         parse_idempotent(std::string_view text,
                                  std::optional<std::size_t> n = std::nullopt);

  // Dispatches on the first significant character and applies a trailing
  // "^k" power suffix.
  PTrans parse_element(std::string_view text,
                       std::optional<std::size_t> n = std::nullopt);

  std::string format_tabular(PTrans const& t);
  // Requires a permutation; fixed points are written as 1-cycles so the
  // output parses back to the same permutation.
  std::string format_cycles(PTrans const& t);
  // Requires an idempotent full transformation.
  std::string format_idempotent(PTrans const& t);

}  // namespace commgraph
