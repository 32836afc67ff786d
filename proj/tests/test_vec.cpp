#include <doctest.h>

#include "helpers.hpp"

#include <seplab/vec.hpp>

using namespace seplab;

TEST_CASE("restrict keeps selected components and zeroes the rest") {
  NatVec v{1, 2, 3};
  CHECK(restrict_to(v, {0, 2}) == NatVec{1, 0, 3});
  CHECK(restrict_to(v, {0, 1, 2}) == v);
  CHECK(restrict_to(NatVec{4, 5}, {}) == NatVec{0, 0});
  CHECK_THROWS_AS(restrict_to(v, {3}), dimension_error);
}

TEST_CASE("restrict is idempotent and additive") {
  testing::Rng rng(7);
  for (int it = 0; it < 200; ++it) {
    std::size_t d = 1 + rng.below(5);
    std::vector<Int> ue, ve;
    for (std::size_t i = 0; i < d; ++i) {
      ue.push_back(Int(rng.below(9)));
      ve.push_back(Int(rng.below(9)));
    }
    NatVec u(ue), v(ve);
    IndexSet I;
    for (std::size_t i = 0; i < d; ++i)
      if (rng.below(2)) I.insert(i);
    CHECK(restrict_to(restrict_to(u, I), I) == restrict_to(u, I));
    CHECK(restrict_to(u + v, I) == restrict_to(u, I) + restrict_to(v, I));
    CHECK(support(u + v) == [&] {
      IndexSet s = support(u);
      for (std::size_t i : support(v)) s.insert(i);
      return s;
    }());
  }
}

TEST_CASE("support") {
  CHECK(support(NatVec{0, 3, 0, 1}) == IndexSet{1, 3});
  CHECK(support(NatVec{0, 0}) == IndexSet{});
  CHECK(support(NatVec{1, 1}) == IndexSet{0, 1});
}

TEST_CASE("sim_k examples") {
  CHECK(sim_k(NatVec{2, 2}, NatVec{2, 2}, 3));
  CHECK(sim_k(NatVec{5, 1}, NatVec{9, 1}, 4));
  CHECK_FALSE(sim_k(NatVec{5, 1}, NatVec{9, 2}, 4));
  CHECK_THROWS_AS(sim_k(NatVec{1}, NatVec{1, 2}, 2), dimension_error);
}

namespace {

// Independent re-implementation for the cross-check property.
bool sim_k_reference(const NatVec& u, const NatVec& v, long long k) {
  for (std::size_t i = 0; i < u.dim(); ++i) {
    Int a = u[i], b = v[i];
    bool small_equal = (a == b) && a <= k;
    bool both_large = a > k && b > k;
    Int ra = a % k, rb = b % k;
    bool congruent = ra == rb;
    if (!(small_equal || (both_large && congruent))) return false;
  }
  return true;
}

} // namespace

TEST_CASE("sim_k agrees with an independent per-component check") {
  testing::Rng rng(11);
  for (int it = 0; it < 1000; ++it) {
    std::size_t d = 1 + rng.below(4);
    std::vector<Int> ue, ve;
    for (std::size_t i = 0; i < d; ++i) {
      ue.push_back(Int(rng.below(12)));
      // Bias toward collisions so both outcomes are exercised.
      ve.push_back(rng.below(2) ? ue.back() + Int(rng.below(9)) : Int(rng.below(12)));
    }
    long long k = 1 + static_cast<long long>(rng.below(6));
    NatVec u(ue), v(ve);
    CHECK(sim_k(u, v, Int(k)) == sim_k_reference(u, v, k));
    CHECK(sim_k(u, u, Int(k)));
    CHECK(sim_k(u, v, Int(k)) == sim_k(v, u, Int(k)));
  }
}
