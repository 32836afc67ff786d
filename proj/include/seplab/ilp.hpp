#pragma once

#include <seplab/vec.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace seplab {

/// Integer feasibility instance: find x in N^n with eq_rows·x = eq_rhs and
/// ge_rows·x >= ge_rhs.  Used where only a witness (not the minimal-solution
/// structure) is needed: intersection checks on hyperlinear representations,
/// flow problems, Z-VASS emptiness.
struct IlpSystem {
  std::size_t num_vars = 0;
  std::vector<IntVec> eq_rows;
  std::vector<Int> eq_rhs;
  std::vector<IntVec> ge_rows;
  std::vector<Int> ge_rhs;

  void add_eq(IntVec row, Int rhs);
  void add_ge(IntVec row, Int rhs);
  /// x[j] = 0, handled as an equality row.
  void force_zero(std::size_t j);
  /// x[j] >= 1.
  void force_positive(std::size_t j);
};

struct IlpOptions {
  std::uint64_t node_cap = 200000;   // branch-and-bound nodes
  std::uint64_t pivot_cap = 2000000; // total simplex pivots
  std::size_t bound_depth = 64;      // depth at which small-model bounds kick in
};

/// Exact decision by rational phase-1 simplex plus branch and bound on
/// fractional coordinates.  Deterministic (Bland pivoting, lowest-index
/// branching, floor branch first).  Termination on unbounded feasible
/// regions is guaranteed by clamping, beyond a configurable depth, every
/// variable to a small-model bound computed from the input system.
/// Throws resource_error when a cap is hit.
std::optional<std::vector<Int>> ilp_feasible(const IlpSystem& sys, const IlpOptions& opts = {});

/// The small-model bound used by the clamping step: any feasible system
/// has a solution with all entries below it (Papadimitriou-style bound).
Int ilp_small_model_bound(const IlpSystem& sys);

} // namespace seplab
