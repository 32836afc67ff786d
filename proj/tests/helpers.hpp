#pragma once

#include <seplab/diophantine.hpp>
#include <seplab/vec.hpp>

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

namespace seplab::testing {

// Splitmix64; fixed algorithm so seeded tests reproduce everywhere.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

  // Uniform in [lo, hi].
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

private:
  std::uint64_t state_;
};

// Every solution of sys inside the box [0, box]^r, by nested enumeration
// with per-row interval pruning.
inline void for_each_box_solution(const EqSystem& sys, const Int& box,
                                  const std::function<void(const NatVec&)>& f) {
  const std::size_t r = sys.num_vars;
  const std::size_t s = sys.num_rows();
  std::vector<Int> x(r, 0);
  std::vector<Int> acc(s, 0);

  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    // Prune when no suffix assignment can land on the rhs.
    for (std::size_t i = 0; i < s; ++i) {
      Int lo = acc[i], hi = acc[i];
      for (std::size_t jj = j; jj < r; ++jj) {
        const Int& c = sys.rows[i][jj];
        if (c > 0)
          hi += c * box;
        else if (c < 0)
          lo += c * box;
      }
      if (sys.rhs[i] < lo || sys.rhs[i] > hi) return;
    }
    if (j == r) {
      f(NatVec(x));
      return;
    }
    for (Int v = 0; v <= box; ++v) {
      x[j] = v;
      if (v > 0)
        for (std::size_t i = 0; i < s; ++i) acc[i] += sys.rows[i][j];
      rec(j + 1);
    }
    for (std::size_t i = 0; i < s; ++i) acc[i] -= sys.rows[i][j] * box;
    x[j] = 0;
  };
  rec(0);
}

// Componentwise-minimal solutions within the box; matches the engine's
// output whenever the box dominates every true minimal solution.
inline std::set<NatVec> brute_minimal_in_box(const EqSystem& sys, const Int& box,
                                             bool homogeneous_nonzero) {
  std::set<NatVec> sols;
  EqSystem probe = sys;
  if (homogeneous_nonzero)
    for (Int& v : probe.rhs.entries) v = 0;
  for_each_box_solution(probe, box, [&](const NatVec& v) {
    if (homogeneous_nonzero && v.is_zero()) return;
    sols.insert(v);
  });
  std::set<NatVec> minimal;
  for (const NatVec& v : sols) {
    bool dominated = false;
    for (const NatVec& w : sols) {
      if (w != v && leq(w, v)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) minimal.insert(v);
  }
  return minimal;
}

inline EqSystem random_system(Rng& rng, std::size_t max_rows, std::size_t max_vars,
                              long long entry_bound) {
  EqSystem sys;
  sys.num_vars = 1 + rng.below(max_vars);
  std::size_t s = 1 + rng.below(max_rows);
  for (std::size_t i = 0; i < s; ++i) {
    IntVec row(sys.num_vars);
    for (std::size_t j = 0; j < sys.num_vars; ++j)
      row[j] = Int(rng.range(-entry_bound, entry_bound));
    sys.rows.push_back(std::move(row));
    sys.rhs.entries.push_back(Int(rng.range(-entry_bound, entry_bound)));
  }
  sys.proj_dim = sys.num_vars;
  return sys;
}

} // namespace seplab::testing
