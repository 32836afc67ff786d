#include <doctest.h>

#include "helpers.hpp"

#include <seplab/diophantine.hpp>
#include <seplab/ilp.hpp>

using namespace seplab;

namespace {

IlpSystem from_eq(const EqSystem& sys) {
  IlpSystem ilp;
  ilp.num_vars = sys.num_vars;
  for (std::size_t i = 0; i < sys.num_rows(); ++i) ilp.add_eq(sys.rows[i], sys.rhs[i]);
  return ilp;
}

} // namespace

TEST_CASE("ilp_feasible basic") {
  IlpSystem s;
  s.num_vars = 2;
  s.add_eq(IntVec{3, 2}, 7);
  auto x = ilp_feasible(s);
  REQUIRE(x.has_value());
  CHECK(3 * (*x)[0] + 2 * (*x)[1] == 7);

  IlpSystem t;
  t.num_vars = 2;
  t.add_eq(IntVec{2, -2}, 1);  // parity obstruction
  CHECK_FALSE(ilp_feasible(t).has_value());

  IlpSystem u;
  u.num_vars = 2;
  u.add_eq(IntVec{1, 1}, 0);
  u.force_positive(0);
  CHECK_FALSE(ilp_feasible(u).has_value());
}

TEST_CASE("ilp_feasible with inequalities and forced coordinates") {
  IlpSystem s;
  s.num_vars = 3;
  s.add_ge(IntVec{1, 1, 1}, 4);
  s.add_eq(IntVec{1, -1, 0}, 0);
  s.force_zero(2);
  auto x = ilp_feasible(s);
  REQUIRE(x.has_value());
  CHECK((*x)[0] == (*x)[1]);
  CHECK((*x)[2] == 0);
  CHECK((*x)[0] + (*x)[1] >= 4);
}

TEST_CASE("ilp catches non-trivial integer infeasibility") {
  // LP-feasible cone, integer-infeasible: 2x - 4y = 2 with x even forced.
  IlpSystem s;
  s.num_vars = 2;
  s.add_eq(IntVec{2, -4}, 2);  // x = 1 + 2y is feasible; sanity: should be SAT
  auto x = ilp_feasible(s);
  REQUIRE(x.has_value());

  // 3x - 3y = 1 has no integer solution, but the LP relaxation is feasible.
  IlpSystem t;
  t.num_vars = 2;
  t.add_eq(IntVec{3, -3}, 1);
  CHECK_FALSE(ilp_feasible(t).has_value());

  // Multi-row obstruction that the single-row gcd test cannot see:
  // x - 2y = 0 and x - 2z = 1 force x both even and odd.
  IlpSystem u;
  u.num_vars = 3;
  u.add_eq(IntVec{1, -2, 0}, 0);
  u.add_eq(IntVec{1, 0, -2}, 1);
  CHECK_FALSE(ilp_feasible(u).has_value());
}

TEST_CASE("ilp_feasible agrees with the completion engine on random systems") {
  testing::Rng rng(47);
  for (int it = 0; it < 80; ++it) {
    EqSystem sys = testing::random_system(rng, 2, 4, 3);
    bool cd = feasible(sys).has_value();
    bool bb = ilp_feasible(from_eq(sys)).has_value();
    CAPTURE(it);
    CHECK(cd == bb);
  }
}
