#include <seplab/diophantine.hpp>

#include <algorithm>
#include <map>

namespace seplab {

void EqSystem::validate() const {
  if (rhs.dim() != rows.size())
    throw dimension_error("EqSystem: row count does not match rhs length");
  for (const IntVec& row : rows)
    if (row.dim() != num_vars)
      throw dimension_error("EqSystem: row width does not match num_vars");
  if (proj_dim > num_vars)
    throw dimension_error("EqSystem: proj_dim exceeds num_vars");
}

Int EqSystem::row_value(std::size_t i, const NatVec& x) const {
  Int acc = 0;
  for (std::size_t j = 0; j < num_vars; ++j) acc += rows[i][j] * x[j];
  return acc;
}

bool EqSystem::solves(const NatVec& x) const {
  if (x.dim() != num_vars) return false;
  for (std::size_t i = 0; i < num_rows(); ++i)
    if (row_value(i, x) != rhs[i]) return false;
  return true;
}

namespace {

// Contejean-Devie completion for the homogeneous system M x = 0.  The
// frontier starts at the unit vectors; a node t is extended by e_i only
// when <Mt, Me_i> < 0, which keeps every node below some minimal solution.
// Nodes at or above an already-found solution are pruned.  Termination is
// intrinsic (Dickson), no a-priori bound on entries is needed.
//
// When stop_at_first_wave is set, the search stops at the end of the first
// BFS level that produced solutions; the caller only needs feasibility.
std::set<NatVec> cd_homogeneous(const std::vector<IntVec>& mat, std::size_t nvars,
                                bool stop_at_first_wave) {
  std::set<NatVec> minimal;
  const std::size_t s = mat.size();

  auto value = [&](const NatVec& x) {
    IntVec v(s);
    for (std::size_t i = 0; i < s; ++i) {
      Int acc = 0;
      for (std::size_t j = 0; j < nvars; ++j)
        if (x[j] != 0) acc += mat[i][j] * x[j];
      v[i] = acc;
    }
    return v;
  };

  auto dominated = [&](const NatVec& x) {
    return std::any_of(minimal.begin(), minimal.end(),
                       [&](const NatVec& m) { return leq(m, x); });
  };

  std::vector<IntVec> col(nvars, IntVec(s));
  for (std::size_t j = 0; j < nvars; ++j)
    for (std::size_t i = 0; i < s; ++i) col[j][i] = mat[i][j];

  std::set<NatVec> frontier;
  for (std::size_t j = 0; j < nvars; ++j) {
    std::vector<Int> e(nvars);
    e[j] = 1;
    frontier.insert(NatVec(std::move(e)));
  }

  while (!frontier.empty()) {
    std::set<NatVec> next;
    bool found_here = false;
    for (const NatVec& t : frontier) {
      if (dominated(t)) continue;
      IntVec v = value(t);
      if (v.is_zero()) {
        minimal.insert(t);
        found_here = true;
        continue;
      }
      for (std::size_t j = 0; j < nvars; ++j) {
        Int dot = 0;
        for (std::size_t i = 0; i < s; ++i) dot += v[i] * col[j][i];
        if (dot >= 0) continue;
        std::vector<Int> u(t.entries);
        u[j] += 1;
        NatVec child(std::move(u));
        if (!dominated(child)) next.insert(std::move(child));
      }
    }
    if (found_here && stop_at_first_wave) break;
    frontier = std::move(next);
  }

  // Solutions found in later waves can still be dominated by earlier ones
  // of incomparable norm; sweep to an antichain.
  std::set<NatVec> anti;
  for (const NatVec& m : minimal) {
    bool dom = std::any_of(minimal.begin(), minimal.end(),
                           [&](const NatVec& o) { return o != m && leq(o, m); });
    if (!dom) anti.insert(m);
  }
  return anti;
}

// Homogenize A x = b into [A | -b] (x, x0) = 0.  Minimal solutions with
// x0 = 0 form the Hilbert basis, those with x0 = 1 are the minimal
// inhomogeneous solutions; larger x0 values correspond to multiples of b.
std::vector<IntVec> homogenized(const EqSystem& sys) {
  std::vector<IntVec> mat;
  mat.reserve(sys.num_rows());
  for (std::size_t i = 0; i < sys.num_rows(); ++i) {
    IntVec row(sys.num_vars + 1);
    for (std::size_t j = 0; j < sys.num_vars; ++j) row[j] = sys.rows[i][j];
    row[sys.num_vars] = -sys.rhs[i];
    mat.push_back(std::move(row));
  }
  return mat;
}

NatVec drop_last(const NatVec& x) {
  std::vector<Int> r(x.entries.begin(), x.entries.end() - 1);
  return NatVec(std::move(r));
}

} // namespace

MinimalSolutions minimal_solutions(const EqSystem& sys) {
  sys.validate();
  MinimalSolutions out;
  const bool rhs_zero = sys.rhs.is_zero();
  if (rhs_zero) {
    // Homogeneous already: 0 is the unique minimal solution.
    out.inhom.insert(NatVec(sys.num_vars));
    out.hilbert = cd_homogeneous(sys.rows, sys.num_vars, false);
    return out;
  }
  for (const NatVec& m : cd_homogeneous(homogenized(sys), sys.num_vars + 1, false)) {
    const Int& x0 = m[sys.num_vars];
    if (x0 == 0)
      out.hilbert.insert(drop_last(m));
    else if (x0 == 1)
      out.inhom.insert(drop_last(m));
  }
  return out;
}

std::optional<NatVec> feasible(const EqSystem& sys, const SupportConstraint& sc) {
  sys.validate();
  for (std::size_t i : sc.must_be_zero)
    if (sc.must_be_positive.count(i))
      throw input_error("SupportConstraint: zero and positive sets overlap");

  // Substitute the constraints away: drop zero columns, shift positive
  // columns by one (x[i] = 1 + x'[i], rhs -= column i).
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < sys.num_vars; ++j)
    if (!sc.must_be_zero.count(j)) keep.push_back(j);

  EqSystem sub;
  sub.num_vars = keep.size();
  sub.proj_dim = 0;
  sub.rhs = sys.rhs;
  for (std::size_t i = 0; i < sys.num_rows(); ++i) {
    IntVec row(sub.num_vars);
    for (std::size_t jj = 0; jj < keep.size(); ++jj) row[jj] = sys.rows[i][keep[jj]];
    sub.rows.push_back(std::move(row));
    for (std::size_t j : sc.must_be_positive) sub.rhs[i] -= sys.rows[i][j];
  }

  std::optional<NatVec> picked;
  if (sub.rhs.is_zero()) {
    picked = NatVec(sub.num_vars);
  } else {
    std::set<NatVec> sols = cd_homogeneous(homogenized(sub), sub.num_vars + 1, true);
    for (const NatVec& m : sols) {
      if (m[sub.num_vars] != 1) continue;
      NatVec cand = drop_last(m);
      if (!picked || cand < *picked) picked = cand;
    }
    if (!picked) {
      // The first wave may hold only Hilbert-basis elements; finish the
      // enumeration to settle feasibility.
      for (const NatVec& m : cd_homogeneous(homogenized(sub), sub.num_vars + 1, false)) {
        if (m[sub.num_vars] != 1) continue;
        NatVec cand = drop_last(m);
        if (!picked || cand < *picked) picked = cand;
      }
    }
  }
  if (!picked) return std::nullopt;

  // Undo the substitution.
  std::vector<Int> full(sys.num_vars);
  for (std::size_t jj = 0; jj < keep.size(); ++jj) full[keep[jj]] = (*picked)[jj];
  for (std::size_t j : sc.must_be_positive) full[j] += 1;
  NatVec x(std::move(full));
  if (!sys.solves(x)) throw std::logic_error("feasible: witness replay failed");
  return x;
}

} // namespace seplab
