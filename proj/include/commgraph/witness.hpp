#pragma once

// Named witness pairs for the diameter lower bounds, the idempotents forced
// by chain/cycle maps, constructive short paths to strictly partial
// vertices, and step-by-step replays of the lower-bound arguments.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "commgraph/budget.hpp"
#include "commgraph/commuting.hpp"
#include "commgraph/graphalg.hpp"
#include "commgraph/ptrans.hpp"

namespace commgraph {

  // A full map made of one chain y_k -> ... -> y_1 -> x_1 feeding the cycle
  // x_1 -> x_2 -> ... -> x_m -> x_1. Points are 0-based.
  struct ChainCycleLabeling {
    std::vector<Point> cycle;  // x_1 .. x_m
    std::vector<Point> chain;  // y_1 .. y_k
  };

  // Recovers the labeling of a chain/cycle map; throws PreconditionError if
  // t has any other shape.
  ChainCycleLabeling chain_cycle_labeling(PTrans const& t);
  PTrans             chain_cycle_map(std::size_t n, ChainCycleLabeling const& l);

  // x_i e = x_i and y_i e = x_{i*} with i* = m - i + 1 reduced into 1..m.
  PTrans forced_idempotent(std::size_t m, std::size_t k, ChainCycleLabeling const& l);

  enum class Family { n4, n6, n8, odd_composite, even_composite };
  char const* to_string(Family f);

  struct WitnessCase {
    std::size_t           n      = 0;
    Family                family = Family::n4;
    std::size_t           m      = 0;  // family parameter, 0 for the fixed cases
    PTrans                alpha;
    PTrans                beta;
    std::optional<PTrans> forced_e;
    std::optional<PTrans> forced_f;
    std::size_t           expected_lower_bound = 0;
    // Display name of each point: "1".."n", or x1.., y1.., z, w for families.
    std::vector<std::string> labels;
  };

  // Requires n >= 4 composite.
  WitnessCase witness_pair(std::size_t n);

  enum class PathConstruction {
    partial_partial,         // a ~ (x->x') ~ (z->z') ~ (y->y') ~ b
    full_rank_one,           // constant idempotent
    full_idempotent,         // idempotent of rank >= 2
    full_non_idempotent,     // hop to the idempotent power first
    permutation_multicycle,  // a ~ id_Y ~ id_{y} ~ (x->x') ~ b
    permutation_full_cycle,  // hop to a power with several cycles first
    four_cycle_refined,      // 4-cycle through its square, length <= 4
  };
  char const* to_string(PathConstruction c);

  struct BoundedPath {
    PathCertificate  certificate;
    std::size_t      bound = 0;  // guaranteed upper bound for this case
    PathConstruction construction = PathConstruction::partial_partial;
  };

  // g must be C(P(X)) with n >= 4; a and b are vertices and at least one is
  // strictly partial. Pairs of full maps are refused. Every returned
  // certificate has been checked with verify_path.
  BoundedPath upper_bound_path(CommGraph const& g, PTrans const& a, PTrans const& b);

  enum class StepVerdict { pass, fail };

  struct ReplayStep {
    std::string                name;
    std::string                claim;
    StepVerdict                verdict = StepVerdict::fail;
    std::vector<std::string>   evidence;
    std::optional<std::string> counterexample;  // tabular form
  };

  struct ReplayReport {
    std::size_t             n = 0;
    Family                  family = Family::n4;
    std::vector<ReplayStep> steps;
    std::size_t             bound  = 0;  // concluded lower bound, 0 on failure
    bool                    passed = false;
  };

  struct ReplayOptions {
    // Adds the exhaustive scans of P(X) at n = 8 (9^8 elements per power).
    bool        long_run = false;
    Parallelism par{};
  };

  ReplayReport replay_lower_bound(WitnessCase const&   c,
                                  Budget const&        budget = Budget::from_env(),
                                  ReplayOptions const& options = {});

}  // namespace commgraph
