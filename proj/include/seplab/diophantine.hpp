#pragma once

#include <seplab/vec.hpp>

#include <optional>
#include <set>
#include <vector>

namespace seplab {

/// Linear Diophantine system A x = b over N^r, with a designated projection
/// onto the first proj_dim coordinates.
struct EqSystem {
  std::vector<IntVec> rows;  // each of length num_vars
  IntVec rhs;                // one entry per row
  std::size_t num_vars = 0;
  std::size_t proj_dim = 0;

  std::size_t num_rows() const { return rows.size(); }
  void validate() const;

  /// Value of row i at x (x need not be a solution).
  Int row_value(std::size_t i, const NatVec& x) const;
  bool solves(const NatVec& x) const;
};

/// Support side conditions: x[i] = 0 on must_be_zero, x[i] >= 1 on
/// must_be_positive.  The two sets are disjoint, both within [0, num_vars).
struct SupportConstraint {
  IndexSet must_be_zero;
  IndexSet must_be_positive;
};

struct MinimalSolutions {
  std::set<NatVec> inhom;    // componentwise minimal solutions of Ax = b
  std::set<NatVec> hilbert;  // Hilbert basis of Ax = 0 (minimal nonzero)
};

/// All componentwise minimal solutions plus the Hilbert basis of the
/// homogeneous part, by the Contejean-Devie completion procedure.  Every
/// solution of the system is some inhom element plus an N-combination of
/// hilbert elements.
MinimalSolutions minimal_solutions(const EqSystem& sys);

/// Some solution respecting the support constraint, or nullopt if none
/// exists.  Positivity constraints are folded in by the substitution
/// x[i] = 1 + x'[i]; zero constraints by dropping the column.  Among the
/// first wave of minimal solutions found, the lexicographically smallest
/// is returned, so the witness is reproducible.
std::optional<NatVec> feasible(const EqSystem& sys, const SupportConstraint& sc = {});

} // namespace seplab
