#pragma once

#include <seplab/diophantine.hpp>
#include <seplab/vec.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace seplab {

/// Integer-coefficient linear combination of named variables plus a constant.
struct LinTerm {
  std::map<std::string, Int> coeffs;
  Int constant;

  LinTerm operator-(const LinTerm& o) const;
  LinTerm negated() const;
  Int eval(const std::map<std::string, Int>& env) const;
};

/// Atomic constraint.  Ge: term >= 0.  Eq: term = 0.  ModEq: term ≡ 0
/// (mod modulus), with the residue already folded into the term constant.
struct Atom {
  enum class Rel { Ge, Eq, ModEq };
  Rel rel = Rel::Ge;
  LinTerm term;
  Int modulus;  // ModEq only, >= 1

  bool holds(const std::map<std::string, Int>& env) const;
  bool operator==(const Atom& o) const;
  bool operator<(const Atom& o) const;
};

struct Formula {
  enum class Kind { Atom, Not, And, Or, Exists };
  Kind kind = Kind::Atom;
  Atom atom;                            // Atom
  std::vector<std::string> bound_vars;  // Exists
  std::vector<Formula> children;        // Not (1), And/Or (>=1), Exists (1)

  static Formula make_atom(Atom a);
  static Formula make_not(Formula f);
  static Formula make_and(std::vector<Formula> fs);
  static Formula make_or(std::vector<Formula> fs);
  static Formula make_exists(std::vector<std::string> vars, Formula body);

  bool is_quantifier_free() const;
};

/// A formula file: free variables in header order, then the body.
struct ParsedFormula {
  std::vector<std::string> free_vars;
  Formula body;
};

/// Concrete syntax:
///   file    := "vars" ident+ "." formula
///   formula := "exists" ident+ "." formula | disj
///   disj    := conj ( "\/" conj )*
///   conj    := unit ( "/\" unit )*
///   unit    := "(" formula ")" | "!" unit | atom
///   atom    := term cmp term | term "=" num "mod" num
///   cmp     := "<=" | ">=" | "=" | "<" | ">" | "!="
/// Strict comparisons and != are desugared while parsing.
ParsedFormula parse_formula(const std::string& text);

/// Existential prenex form with a negation-free /\-\/ matrix over Ge atoms.
struct NormalForm {
  std::vector<std::string> free_vars;
  std::vector<std::string> exist_vars;  // binding order; includes fresh ones
  Formula matrix;                       // And/Or tree over Ge/Eq atoms
};

/// Rewrites negations into atoms, splits equalities, eliminates ModEq atoms
/// through fresh existential variables, and hoists all quantifiers.
/// Universal quantification does not exist in the grammar; a negation above
/// an Exists is a fragment error.
NormalForm normalize(const ParsedFormula& f);

/// One disjunct of the matrix: a conjunction of Ge/Eq atoms.
struct Branch {
  std::vector<Atom> atoms;  // deduplicated, in canonical order

  bool operator==(const Branch& o) const { return atoms == o.atoms; }
  bool operator<(const Branch& o) const {
    return std::lexicographical_compare(atoms.begin(), atoms.end(), o.atoms.begin(),
                                        o.atoms.end());
  }
};

/// Lazily enumerates the branches of a normalized matrix, deduplicated by
/// atom set.  The callback returns false to stop early.
void for_each_branch(const NormalForm& nf, const std::function<bool(const Branch&)>& f);

/// All branches, in enumeration order (tests and small inputs).
std::vector<Branch> all_branches(const NormalForm& nf);

/// Conjunction of atoms into A x = b over naturals: variable order is free
/// vars, then existential vars, then one slack per inequality.  The
/// projection keeps the free variables.
EqSystem branch_to_system(const Branch& b, const std::vector<std::string>& free_vars,
                          const std::vector<std::string>& exist_vars);

/// Complement of a quantifier-free formula (De Morgan push-down; ModEq
/// negation becomes the disjunction over the other residues).
ParsedFormula negate_qf(const ParsedFormula& f);

/// Direct evaluation of a quantifier-free formula.
bool eval_qf(const ParsedFormula& f, const NatVec& point);

} // namespace seplab
