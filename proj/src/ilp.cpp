#include <seplab/ilp.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>

namespace seplab {

void IlpSystem::add_eq(IntVec row, Int rhs) {
  if (row.dim() != num_vars) throw dimension_error("IlpSystem: bad eq row width");
  eq_rows.push_back(std::move(row));
  eq_rhs.push_back(std::move(rhs));
}

void IlpSystem::add_ge(IntVec row, Int rhs) {
  if (row.dim() != num_vars) throw dimension_error("IlpSystem: bad ge row width");
  ge_rows.push_back(std::move(row));
  ge_rhs.push_back(std::move(rhs));
}

void IlpSystem::force_zero(std::size_t j) {
  IntVec row(num_vars);
  row[j] = 1;
  add_eq(std::move(row), 0);
}

void IlpSystem::force_positive(std::size_t j) {
  IntVec row(num_vars);
  row[j] = 1;
  add_ge(std::move(row), 1);
}

Int ilp_small_model_bound(const IlpSystem& sys) {
  Int amax = 2;
  auto scan = [&](const std::vector<IntVec>& rows, const std::vector<Int>& rhs) {
    for (const IntVec& r : rows)
      for (const Int& c : r.entries) amax = std::max(amax, Int(abs(c)));
    for (const Int& c : rhs) amax = std::max(amax, Int(abs(c)));
  };
  scan(sys.eq_rows, sys.eq_rhs);
  scan(sys.ge_rows, sys.ge_rhs);
  // Surplus variables of the >= rows count toward the variable total.
  Int n = Int(sys.num_vars + sys.ge_rows.size()) + 1;
  Int s = Int(sys.eq_rows.size() + sys.ge_rows.size()) + 1;
  Int base = s * amax;
  Int bound = n;
  for (Int i = 0; i < 2 * s + 1; ++i) bound *= base;
  return bound;
}

namespace {

// Phase-1 simplex over exact rationals with Bland's rule.  Columns are the
// problem variables shifted to their lower bounds, surplus vars for >= rows
// and slack vars for upper-bound rows; artificial columns exist only as
// basis markers and are dropped once they leave the basis.
std::optional<std::vector<Rat>> lp_point(const IlpSystem& sys, const std::vector<Int>& lower,
                                         const std::vector<std::optional<Int>>& upper,
                                         std::uint64_t& pivot_budget) {
  const std::size_t n = sys.num_vars;

  std::size_t extras = sys.ge_rows.size();
  for (std::size_t j = 0; j < n; ++j)
    if (upper[j]) ++extras;
  const std::size_t total = n + extras;

  std::vector<std::vector<Rat>> T;
  std::vector<Rat> b;

  auto shift_rhs = [&](const IntVec& row, const Int& rhs) {
    Int acc = rhs;
    for (std::size_t j = 0; j < n; ++j) acc -= row[j] * lower[j];
    return Rat(acc);
  };

  std::size_t next_extra = n;
  for (std::size_t i = 0; i < sys.eq_rows.size(); ++i) {
    std::vector<Rat> row(total);
    for (std::size_t j = 0; j < n; ++j) row[j] = Rat(sys.eq_rows[i][j]);
    T.push_back(std::move(row));
    b.push_back(shift_rhs(sys.eq_rows[i], sys.eq_rhs[i]));
  }
  for (std::size_t i = 0; i < sys.ge_rows.size(); ++i) {
    std::vector<Rat> row(total);
    for (std::size_t j = 0; j < n; ++j) row[j] = Rat(sys.ge_rows[i][j]);
    row[next_extra++] = Rat(-1);
    T.push_back(std::move(row));
    b.push_back(shift_rhs(sys.ge_rows[i], sys.ge_rhs[i]));
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (!upper[j]) continue;
    std::vector<Rat> row(total);
    row[j] = Rat(1);
    row[next_extra++] = Rat(1);
    T.push_back(std::move(row));
    b.push_back(Rat(*upper[j] - lower[j]));
  }

  const std::size_t m = T.size();
  if (m == 0) {
    std::vector<Rat> x(n);
    for (std::size_t j = 0; j < n; ++j) x[j] = Rat(lower[j]);
    return x;
  }

  for (std::size_t i = 0; i < m; ++i) {
    if (b[i] < 0) {
      for (Rat& v : T[i]) v = -v;
      b[i] = -b[i];
    }
  }

  const std::size_t kArtificial = total;  // sentinel basis marker
  std::vector<std::size_t> basis(m, kArtificial);

  // Objective: minimize the sum of artificials.
  std::vector<Rat> cost(total);
  Rat obj(0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < total; ++j) cost[j] -= T[i][j];
    obj -= b[i];
  }

  while (true) {
    std::size_t enter = total;
    for (std::size_t j = 0; j < total; ++j) {
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == total) break;

    std::size_t leave = m;
    Rat best_ratio(0);
    for (std::size_t i = 0; i < m; ++i) {
      if (T[i][enter] <= 0) continue;
      Rat ratio = b[i] / T[i][enter];
      if (leave == m || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == m) throw std::logic_error("phase-1 simplex: unbounded descent");

    if (pivot_budget == 0) throw resource_error("ilp: simplex pivot cap exceeded");
    --pivot_budget;

    Rat piv = T[leave][enter];
    for (std::size_t j = 0; j < total; ++j) T[leave][j] /= piv;
    b[leave] /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || T[i][enter] == 0) continue;
      Rat f = T[i][enter];
      for (std::size_t j = 0; j < total; ++j)
        if (T[leave][j] != 0) T[i][j] -= f * T[leave][j];
      b[i] -= f * b[leave];
    }
    if (cost[enter] != 0) {
      Rat f = cost[enter];
      for (std::size_t j = 0; j < total; ++j)
        if (T[leave][j] != 0) cost[j] -= f * T[leave][j];
      obj -= f * b[leave];
    }
    basis[leave] = enter;
  }

  if (obj != 0) return std::nullopt;

  std::vector<Rat> y(total, Rat(0));
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] != kArtificial) y[basis[i]] = b[i];

  std::vector<Rat> x(n);
  for (std::size_t j = 0; j < n; ++j) x[j] = y[j] + Rat(lower[j]);
  return x;
}

bool row_gcd_infeasible(const IlpSystem& sys) {
  for (std::size_t i = 0; i < sys.eq_rows.size(); ++i) {
    Int g = 0;
    for (std::size_t j = 0; j < sys.num_vars; ++j)
      g = boost::multiprecision::gcd(g, sys.eq_rows[i][j]);
    if (g > 1 && sys.eq_rhs[i] % g != 0) return true;
  }
  return false;
}

// Does A x = b admit any solution over Z (sign-free)?  Column echelon form
// via unimodular column operations; b must be reachable by exact division
// down the staircase.  Catches the congruence obstructions that keep the
// LP relaxation feasible forever.
bool z_solvable(const std::vector<IntVec>& rows, const std::vector<Int>& rhs,
                std::size_t nvars) {
  const std::size_t s = rows.size();
  std::vector<std::vector<Int>> cols(nvars, std::vector<Int>(s));
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < nvars; ++j) cols[j][i] = rows[i][j];

  std::vector<Int> residual(rhs);
  std::size_t c = 0;
  for (std::size_t i = 0; i < s; ++i) {
    // Reduce row i across columns c.. to a single pivot by gcd steps.
    while (true) {
      std::size_t best = nvars;
      for (std::size_t j = c; j < nvars; ++j) {
        if (cols[j][i] == 0) continue;
        if (best == nvars || abs(cols[j][i]) < abs(cols[best][i])) best = j;
      }
      if (best == nvars) break;
      std::swap(cols[c], cols[best]);
      bool clean = true;
      for (std::size_t j = c + 1; j < nvars; ++j) {
        if (cols[j][i] == 0) continue;
        Int q = cols[j][i] / cols[c][i];
        for (std::size_t k = i; k < s; ++k) cols[j][k] -= q * cols[c][k];
        if (cols[j][i] != 0) clean = false;
      }
      if (clean) break;
    }
    if (c < nvars && cols[c][i] != 0) {
      if (residual[i] % cols[c][i] != 0) return false;
      Int y = residual[i] / cols[c][i];
      for (std::size_t k = i; k < s; ++k) residual[k] -= y * cols[c][k];
      ++c;
    } else if (residual[i] != 0) {
      return false;
    }
  }
  return true;
}

} // namespace

std::optional<std::vector<Int>> ilp_feasible(const IlpSystem& sys, const IlpOptions& opts) {
  const std::size_t n = sys.num_vars;
  if (row_gcd_infeasible(sys)) return std::nullopt;
  if (!z_solvable(sys.eq_rows, sys.eq_rhs, n)) return std::nullopt;

  struct Node {
    std::vector<Int> lower;
    std::vector<std::optional<Int>> upper;
    std::size_t depth;
  };

  std::vector<Node> stack;
  stack.push_back({std::vector<Int>(n, 0), std::vector<std::optional<Int>>(n), 0});

  std::uint64_t nodes = 0;
  std::uint64_t pivots = opts.pivot_cap;
  const Int big = n == 0 ? Int(0) : ilp_small_model_bound(sys);

  while (!stack.empty()) {
    if (++nodes > opts.node_cap) throw resource_error("ilp: node cap exceeded");
    Node nd = std::move(stack.back());
    stack.pop_back();

    bool range_empty = false;
    bool any_pinned = false;
    for (std::size_t j = 0; j < n && !range_empty; ++j) {
      if (nd.upper[j] && *nd.upper[j] < nd.lower[j]) range_empty = true;
      if (nd.upper[j] && *nd.upper[j] == nd.lower[j]) any_pinned = true;
    }
    if (range_empty) continue;

    // Pinned variables can expose congruence obstructions (e.g. a parity
    // conflict once a coordinate is fixed); re-check the lattice on the
    // reduced system before paying for an LP solve.
    if (any_pinned && n * sys.eq_rows.size() <= 50000) {
      std::vector<IntVec> red_rows;
      std::vector<Int> red_rhs;
      for (std::size_t i = 0; i < sys.eq_rows.size(); ++i) {
        IntVec row(n);
        Int rhs = sys.eq_rhs[i];
        for (std::size_t j = 0; j < n; ++j) {
          if (nd.upper[j] && *nd.upper[j] == nd.lower[j])
            rhs -= sys.eq_rows[i][j] * nd.lower[j];
          else
            row[j] = sys.eq_rows[i][j];
        }
        red_rows.push_back(std::move(row));
        red_rhs.push_back(std::move(rhs));
      }
      if (!z_solvable(red_rows, red_rhs, n)) continue;
    }

    auto lp = lp_point(sys, nd.lower, nd.upper, pivots);
    if (!lp) continue;

    std::size_t frac = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (denominator((*lp)[j]) != 1) {
        frac = j;
        break;
      }
    }
    if (frac == n) {
      std::vector<Int> x(n);
      for (std::size_t j = 0; j < n; ++j) x[j] = numerator((*lp)[j]);
      return x;
    }

    // Values are >= 0, so plain truncation is the floor.
    Int fl = numerator((*lp)[frac]) / denominator((*lp)[frac]);

    Node up = nd;   // x[frac] >= fl + 1
    Node down = nd; // x[frac] <= fl
    down.upper[frac] = down.upper[frac] ? std::min(*down.upper[frac], fl) : fl;
    up.lower[frac] = std::max(up.lower[frac], Int(fl + 1));
    up.depth = down.depth = nd.depth + 1;

    // Unbounded integer-infeasible cones admit infinite ascent; past this
    // depth the search is clamped to the small-model box, which cannot cut
    // off a feasible instance.
    if (nd.depth + 1 >= opts.bound_depth) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!up.upper[j]) up.upper[j] = big;
        if (!down.upper[j]) down.upper[j] = big;
      }
    }

    stack.push_back(std::move(up));
    stack.push_back(std::move(down));  // floor branch explored first
  }
  return std::nullopt;
}

} // namespace seplab
