#include <doctest.h>

#include "helpers.hpp"

#include <seplab/formula.hpp>

using namespace seplab;

TEST_CASE("parse basics") {
  auto f = parse_formula("vars x y. x = y");
  CHECK(f.free_vars == std::vector<std::string>{"x", "y"});
  CHECK(f.body.kind == Formula::Kind::Atom);
  CHECK(f.body.atom.rel == Atom::Rel::Eq);

  auto g = parse_formula("vars x. exists t. x = 2*t + 1");
  CHECK(g.body.kind == Formula::Kind::Exists);

  auto h = parse_formula("vars x y. x >= 3 /\\ (y = 0 \\/ y >= 5)");
  CHECK(h.body.kind == Formula::Kind::And);
  CHECK(h.body.children[1].kind == Formula::Kind::Or);
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_formula("vars x. x = "), parse_error);
  CHECK_THROWS_AS(parse_formula("vars x. y = 0"), parse_error);   // unbound
  CHECK_THROWS_AS(parse_formula("vars x. x = 0 mod 0"), parse_error);
  CHECK_THROWS_AS(parse_formula("x = 0"), parse_error);
  try {
    parse_formula("vars x.\n x >= !");
    CHECK(false);
  } catch (const parse_error& e) {
    CHECK(e.line == 2);
  }
}

TEST_CASE("normalize produces a Ge-only matrix") {
  auto nf = normalize(parse_formula("vars x y. !(x >= 1) /\\ x = y"));
  std::function<void(const Formula&)> scan = [&](const Formula& f) {
    if (f.kind == Formula::Kind::Atom) {
      CHECK(f.atom.rel == Atom::Rel::Ge);
      return;
    }
    CHECK((f.kind == Formula::Kind::And || f.kind == Formula::Kind::Or));
    for (const auto& c : f.children) scan(c);
  };
  scan(nf.matrix);
}

TEST_CASE("normalize rejects universal shapes") {
  CHECK_THROWS_AS(normalize(parse_formula("vars x. !(exists y. x = y)")), fragment_error);
}

namespace {

// Membership of the normalized form at a point: some branch's system has a
// completion fixing the free variables to the point.
bool normalized_member(const NormalForm& nf, const NatVec& p) {
  bool found = false;
  for_each_branch(nf, [&](const Branch& b) {
    EqSystem sys = branch_to_system(b, nf.free_vars, nf.exist_vars);
    // Fix free variables by moving them to the right-hand side.
    EqSystem fixed;
    fixed.num_vars = sys.num_vars - nf.free_vars.size();
    fixed.proj_dim = 0;
    for (std::size_t i = 0; i < sys.num_rows(); ++i) {
      IntVec row(fixed.num_vars);
      Int rhs = sys.rhs[i];
      for (std::size_t j = 0; j < nf.free_vars.size(); ++j) rhs -= sys.rows[i][j] * p[j];
      for (std::size_t j = nf.free_vars.size(); j < sys.num_vars; ++j)
        row[j - nf.free_vars.size()] = sys.rows[i][j];
      fixed.rows.push_back(std::move(row));
      fixed.rhs.entries.push_back(rhs);
    }
    if (feasible(fixed)) {
      found = true;
      return false;
    }
    return true;
  });
  return found;
}

// Direct evaluation of a branch at a full assignment is exercised via the
// agreement property below instead of hand-frozen branch sets.

std::string random_qf_formula(seplab::testing::Rng& rng, int depth) {
  if (depth == 0 || rng.below(3) == 0) {
    auto tf = [&](const char* v) {
      long long c = rng.range(-5, 5);
      std::string s = std::to_string(std::abs(c)) + "*" + v;
      return (c < 0 ? std::string("- ") : std::string("+ ")) + s;
    };
    std::string lhs = tf("x") + " " + tf("y") + " + " + std::to_string(rng.below(6));
    switch (rng.below(4)) {
      case 0: return "(" + lhs + " >= 0)";
      case 1: return "(" + lhs + " = " + std::to_string(rng.below(5)) + ")";
      case 2: return "(" + lhs + " <= " + std::to_string(rng.below(5)) + ")";
      default:
        return "(" + lhs + " = " + std::to_string(rng.below(3)) + " mod " +
               std::to_string(1 + rng.below(4)) + ")";
    }
  }
  std::string a = random_qf_formula(rng, depth - 1);
  std::string b = random_qf_formula(rng, depth - 1);
  switch (rng.below(3)) {
    case 0: return "(" + a + " /\\ " + b + ")";
    case 1: return "(" + a + " \\/ " + b + ")";
    default: return "(!" + a + ")";
  }
}

} // namespace

TEST_CASE("dnf_branches: shape on small matrices") {
  auto one = normalize(parse_formula("vars x. x >= 1"));
  CHECK(all_branches(one).size() == 1);

  auto ab = normalize(parse_formula("vars x. x >= 1 /\\ (x >= 2 \\/ x >= 3)"));
  CHECK(all_branches(ab).size() == 2);

  auto four = normalize(parse_formula("vars x. (x >= 1 \\/ x >= 2) /\\ (x >= 3 \\/ x >= 4)"));
  CHECK(all_branches(four).size() == 4);
}

TEST_CASE("branch_to_system: slack layout") {
  auto nf = normalize(parse_formula("vars x y. x - y >= 0"));
  auto branches = all_branches(nf);
  REQUIRE(branches.size() == 1);
  EqSystem sys = branch_to_system(branches[0], nf.free_vars, nf.exist_vars);
  CHECK(sys.proj_dim == 2);
  CHECK(sys.num_vars == 3);  // x, y, slack
  CHECK(sys.num_rows() == 1);
  CHECK(sys.rows[0] == IntVec{1, -1, -1});
  CHECK(sys.rhs[0] == 0);
}

TEST_CASE("mod atom defines the expected set") {
  auto f = parse_formula("vars x. x = 1 mod 2");
  auto nf = normalize(f);
  for (long long v = 0; v <= 20; ++v) {
    NatVec p{Int(v)};
    CHECK(normalized_member(nf, p) == (v % 2 == 1));
  }
}

TEST_CASE("four-way membership agreement on random formulas") {
  testing::Rng rng(101);
  int done = 0;
  while (done < 25) {
    std::string text = "vars x y. " + random_qf_formula(rng, 2);
    ParsedFormula f = parse_formula(text);
    NormalForm nf = normalize(f);
    ++done;
    for (long long x = 0; x <= 12; x += 3) {
      for (long long y = 0; y <= 12; y += 4) {
        NatVec p{Int(x), Int(y)};
        bool direct = eval_qf(f, p);
        CAPTURE(text);
        CAPTURE(x);
        CAPTURE(y);
        CHECK(direct == normalized_member(nf, p));
        CHECK(direct != eval_qf(negate_qf(f), p));
      }
    }
  }
}
