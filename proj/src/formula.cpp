#include <seplab/formula.hpp>

#include <algorithm>
#include <cctype>
#include <set>

namespace seplab {

LinTerm LinTerm::operator-(const LinTerm& o) const {
  LinTerm r = *this;
  for (const auto& [v, c] : o.coeffs) {
    r.coeffs[v] -= c;
    if (r.coeffs[v] == 0) r.coeffs.erase(v);
  }
  r.constant -= o.constant;
  return r;
}

LinTerm LinTerm::negated() const {
  LinTerm r;
  for (const auto& [v, c] : coeffs) r.coeffs[v] = -c;
  r.constant = -constant;
  return r;
}

Int LinTerm::eval(const std::map<std::string, Int>& env) const {
  Int acc = constant;
  for (const auto& [v, c] : coeffs) {
    auto it = env.find(v);
    if (it == env.end()) throw input_error("eval: unbound variable " + v);
    acc += c * it->second;
  }
  return acc;
}

bool Atom::operator==(const Atom& o) const {
  return rel == o.rel && modulus == o.modulus && term.constant == o.term.constant &&
         term.coeffs == o.term.coeffs;
}

bool Atom::operator<(const Atom& o) const {
  if (rel != o.rel) return rel < o.rel;
  if (modulus != o.modulus) return modulus < o.modulus;
  if (term.constant != o.term.constant) return term.constant < o.term.constant;
  return term.coeffs < o.term.coeffs;
}

bool Atom::holds(const std::map<std::string, Int>& env) const {
  Int v = term.eval(env);
  switch (rel) {
    case Rel::Ge: return v >= 0;
    case Rel::Eq: return v == 0;
    case Rel::ModEq: return v % modulus == 0;
  }
  return false;
}

Formula Formula::make_atom(Atom a) {
  Formula f;
  f.kind = Kind::Atom;
  f.atom = std::move(a);
  return f;
}

Formula Formula::make_not(Formula g) {
  Formula f;
  f.kind = Kind::Not;
  f.children.push_back(std::move(g));
  return f;
}

Formula Formula::make_and(std::vector<Formula> fs) {
  if (fs.size() == 1) return std::move(fs[0]);
  Formula f;
  f.kind = Kind::And;
  f.children = std::move(fs);
  return f;
}

Formula Formula::make_or(std::vector<Formula> fs) {
  if (fs.size() == 1) return std::move(fs[0]);
  Formula f;
  f.kind = Kind::Or;
  f.children = std::move(fs);
  return f;
}

Formula Formula::make_exists(std::vector<std::string> vars, Formula body) {
  Formula f;
  f.kind = Kind::Exists;
  f.bound_vars = std::move(vars);
  f.children.push_back(std::move(body));
  return f;
}

bool Formula::is_quantifier_free() const {
  if (kind == Kind::Exists) return false;
  return std::all_of(children.begin(), children.end(),
                     [](const Formula& c) { return c.is_quantifier_free(); });
}

// ---------------------------------------------------------------------------
// Parser

namespace {

struct Lexer {
  const std::string& text;
  std::size_t pos = 0;
  std::size_t line = 1;
  std::size_t col = 1;

  explicit Lexer(const std::string& t) : text(t) { skip_ws(); }

  [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, line, col); }

  void advance(std::size_t n) {
    for (std::size_t i = 0; i < n && pos < text.size(); ++i, ++pos) {
      if (text[pos] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  }

  void skip_ws() {
    while (pos < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[pos]))) {
        advance(1);
      } else if (text[pos] == '#') {  // line comment
        while (pos < text.size() && text[pos] != '\n') advance(1);
      } else {
        break;
      }
    }
  }

  bool eat(const std::string& tok) {
    if (text.compare(pos, tok.size(), tok) == 0) {
      advance(tok.size());
      skip_ws();
      return true;
    }
    return false;
  }

  bool peek(const std::string& tok) const { return text.compare(pos, tok.size(), tok) == 0; }

  bool at_end() const { return pos >= text.size(); }

  bool peek_ident() const {
    return pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]));
  }

  std::string ident() {
    if (!peek_ident()) fail("expected identifier");
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      advance(1);
    std::string s = text.substr(start, pos - start);
    skip_ws();
    return s;
  }

  bool peek_number() const {
    return pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]));
  }

  Int number() {
    if (!peek_number()) fail("expected number");
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) advance(1);
    Int v(text.substr(start, pos - start));
    skip_ws();
    return v;
  }
};

class Parser {
public:
  explicit Parser(const std::string& text) : lx_(text) {}

  ParsedFormula run() {
    if (!lx_.eat("vars")) lx_.fail("expected 'vars'");
    ParsedFormula pf;
    while (lx_.peek_ident() && !lx_.peek("exists")) pf.free_vars.push_back(lx_.ident());
    if (pf.free_vars.empty()) lx_.fail("expected at least one variable");
    std::set<std::string> seen(pf.free_vars.begin(), pf.free_vars.end());
    if (seen.size() != pf.free_vars.size()) lx_.fail("duplicate variable in header");
    if (!lx_.eat(".")) lx_.fail("expected '.' after header");
    scopes_.push_back(seen);
    pf.body = formula();
    if (!lx_.at_end()) lx_.fail("trailing input");
    return pf;
  }

private:
  Lexer lx_;
  std::vector<std::set<std::string>> scopes_;

  bool bound(const std::string& v) const {
    for (const auto& s : scopes_)
      if (s.count(v)) return true;
    return false;
  }

  Formula formula() {
    if (lx_.eat("exists")) {
      std::vector<std::string> vars;
      while (lx_.peek_ident() && !lx_.peek("exists")) vars.push_back(lx_.ident());
      if (vars.empty()) lx_.fail("expected variable after 'exists'");
      if (!lx_.eat(".")) lx_.fail("expected '.' after exists binder");
      scopes_.emplace_back(vars.begin(), vars.end());
      Formula body = formula();
      scopes_.pop_back();
      return Formula::make_exists(std::move(vars), std::move(body));
    }
    return disj();
  }

  Formula disj() {
    std::vector<Formula> parts;
    parts.push_back(conj());
    while (lx_.eat("\\/")) parts.push_back(conj());
    return Formula::make_or(std::move(parts));
  }

  Formula conj() {
    std::vector<Formula> parts;
    parts.push_back(unit());
    while (lx_.eat("/\\")) parts.push_back(unit());
    return Formula::make_and(std::move(parts));
  }

  Formula unit() {
    if (lx_.eat("(")) {
      Formula f = formula();
      if (!lx_.eat(")")) lx_.fail("expected ')'");
      return f;
    }
    if (lx_.eat("!")) return Formula::make_not(unit());
    return atom();
  }

  Formula atom() {
    LinTerm lhs = term();
    // "t = c mod m" needs lookahead past the number for 'mod'.
    if (lx_.eat("=")) {
      LinTerm rhs = term();
      if (lx_.eat("mod")) {
        Int m = lx_.number();
        if (m < 1) lx_.fail("modulus must be positive");
        if (!rhs.coeffs.empty()) lx_.fail("residue must be a constant");
        Atom a;
        a.rel = Atom::Rel::ModEq;
        a.term = lhs - rhs;
        a.modulus = m;
        return Formula::make_atom(a);
      }
      Atom a;
      a.rel = Atom::Rel::Eq;
      a.term = lhs - rhs;
      return Formula::make_atom(a);
    }
    if (lx_.eat("<=")) return ge_atom(term() - lhs);
    if (lx_.eat(">=")) return ge_atom(lhs - term());
    if (lx_.eat("!=")) {
      LinTerm d = lhs - term();
      // t != 0 desugars to t - 1 >= 0 \/ -t - 1 >= 0.
      LinTerm up = d, dn = d.negated();
      up.constant -= 1;
      dn.constant -= 1;
      return Formula::make_or({ge_atom(std::move(up)), ge_atom(std::move(dn))});
    }
    if (lx_.eat("<")) {
      LinTerm d = term() - lhs;
      d.constant -= 1;  // lhs < rhs  =>  rhs - lhs - 1 >= 0
      return ge_atom(std::move(d));
    }
    if (lx_.eat(">")) {
      LinTerm d = lhs - term();
      d.constant -= 1;
      return ge_atom(std::move(d));
    }
    lx_.fail("expected comparison operator");
  }

  Formula ge_atom(LinTerm t) {
    Atom a;
    a.rel = Atom::Rel::Ge;
    a.term = std::move(t);
    return Formula::make_atom(a);
  }

  LinTerm term() {
    LinTerm t;
    bool first = true;
    while (true) {
      int sign = 1;
      if (lx_.eat("+")) {
        sign = 1;
      } else if (lx_.eat("-")) {
        sign = -1;
      } else if (!first) {
        break;
      }
      first = false;
      Int coef = 1;
      bool have_coef = false;
      if (lx_.peek_number()) {
        coef = lx_.number();
        have_coef = true;
        if (!lx_.eat("*")) {
          // Plain constant summand.
          t.constant += sign * coef;
          continue;
        }
      }
      if (!lx_.peek_ident()) {
        if (have_coef) lx_.fail("expected variable after '*'");
        lx_.fail("expected term");
      }
      std::string v = lx_.ident();
      if (!bound(v)) lx_.fail("unbound variable " + v);
      t.coeffs[v] += sign * coef;
      if (t.coeffs[v] == 0) t.coeffs.erase(v);
    }
    return t;
  }
};

} // namespace

ParsedFormula parse_formula(const std::string& text) { return Parser(text).run(); }

// ---------------------------------------------------------------------------
// Normalization

namespace {

Formula negate_ge(const Atom& a) {
  // !(t >= 0)  =>  -t - 1 >= 0
  Atom r;
  r.rel = Atom::Rel::Ge;
  r.term = a.term.negated();
  r.term.constant -= 1;
  return Formula::make_atom(r);
}

Formula negate_atom(const Atom& a) {
  switch (a.rel) {
    case Atom::Rel::Ge:
      return negate_ge(a);
    case Atom::Rel::Eq: {
      // !(t = 0)  =>  t - 1 >= 0 \/ -t - 1 >= 0
      Atom up, dn;
      up.rel = dn.rel = Atom::Rel::Ge;
      up.term = a.term;
      up.term.constant -= 1;
      dn.term = a.term.negated();
      dn.term.constant -= 1;
      return Formula::make_or({Formula::make_atom(up), Formula::make_atom(dn)});
    }
    case Atom::Rel::ModEq: {
      // The other residues mod m.
      std::vector<Formula> parts;
      for (Int r = 1; r < a.modulus; ++r) {
        Atom other = a;
        other.term.constant -= r;
        parts.push_back(Formula::make_atom(other));
      }
      if (parts.empty()) {
        // mod 1 is always true; its negation is 1 = 0... i.e. false.
        Atom never;
        never.rel = Atom::Rel::Ge;
        never.term.constant = -1;
        return Formula::make_atom(never);
      }
      return Formula::make_or(std::move(parts));
    }
  }
  throw std::logic_error("negate_atom");
}

// Negation push-down.  A quantifier under an odd number of negations would
// be universal, which the supported fragment excludes.
Formula to_nnf(const Formula& f, bool neg) {
  switch (f.kind) {
    case Formula::Kind::Atom:
      return neg ? negate_atom(f.atom) : f;
    case Formula::Kind::Not:
      return to_nnf(f.children[0], !neg);
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      std::vector<Formula> kids;
      kids.reserve(f.children.size());
      for (const Formula& c : f.children) kids.push_back(to_nnf(c, neg));
      bool is_and = (f.kind == Formula::Kind::And) != neg;
      return is_and ? Formula::make_and(std::move(kids)) : Formula::make_or(std::move(kids));
    }
    case Formula::Kind::Exists: {
      if (neg)
        throw fragment_error("negation above a quantifier is outside the existential fragment");
      return Formula::make_exists(f.bound_vars, to_nnf(f.children[0], false));
    }
  }
  throw std::logic_error("to_nnf");
}

struct Hoister {
  std::vector<std::string> exist_vars;
  std::size_t fresh_counter = 0;
  std::set<std::string> used_names;

  std::string fresh(const std::string& base) {
    while (true) {
      std::string cand = base + "_" + std::to_string(fresh_counter++);
      if (!used_names.count(cand)) {
        used_names.insert(cand);
        return cand;
      }
    }
  }

  LinTerm rename(const LinTerm& t, const std::map<std::string, std::string>& sub) {
    LinTerm r;
    r.constant = t.constant;
    for (const auto& [v, c] : t.coeffs) {
      auto it = sub.find(v);
      r.coeffs[it == sub.end() ? v : it->second] += c;
    }
    return r;
  }

  // Renames bound variables apart, records them in binding order, and
  // returns the quantifier-free matrix.
  Formula hoist(const Formula& f, std::map<std::string, std::string> sub) {
    switch (f.kind) {
      case Formula::Kind::Atom: {
        Formula g = f;
        g.atom.term = rename(f.atom.term, sub);
        return g;
      }
      case Formula::Kind::And:
      case Formula::Kind::Or: {
        Formula g;
        g.kind = f.kind;
        for (const Formula& c : f.children) g.children.push_back(hoist(c, sub));
        return g;
      }
      case Formula::Kind::Exists: {
        for (const std::string& v : f.bound_vars) {
          std::string nv = used_names.count(v) ? fresh(v) : v;
          used_names.insert(nv);
          sub[v] = nv;
          exist_vars.push_back(nv);
        }
        return hoist(f.children[0], sub);
      }
      case Formula::Kind::Not:
        throw std::logic_error("hoist: negation after NNF");
    }
    throw std::logic_error("hoist");
  }
};

// ModEq elimination and equality splitting on a quantifier-hoisted matrix.
Formula eliminate_atoms(const Formula& f, Hoister& h) {
  switch (f.kind) {
    case Formula::Kind::Atom: {
      const Atom& a = f.atom;
      if (a.rel == Atom::Rel::Ge) return f;
      if (a.rel == Atom::Rel::Eq) {
        Atom up, dn;
        up.rel = dn.rel = Atom::Rel::Ge;
        up.term = a.term;
        dn.term = a.term.negated();
        return Formula::make_and({Formula::make_atom(up), Formula::make_atom(dn)});
      }
      // t ≡ 0 (mod m): exists y with t = m y or t = -m y.
      std::vector<Formula> parts;
      for (int sign : {1, -1}) {
        std::string y = h.fresh("_m");
        h.exist_vars.push_back(y);
        Atom eq;
        eq.rel = Atom::Rel::Eq;
        eq.term = a.term;
        eq.term.coeffs[y] = Int(-sign) * a.modulus;
        parts.push_back(eliminate_atoms(Formula::make_atom(eq), h));
      }
      return Formula::make_or(std::move(parts));
    }
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      Formula g;
      g.kind = f.kind;
      for (const Formula& c : f.children) g.children.push_back(eliminate_atoms(c, h));
      return g;
    }
    default:
      throw std::logic_error("eliminate_atoms: unexpected node");
  }
}

} // namespace

NormalForm normalize(const ParsedFormula& f) {
  Formula nnf = to_nnf(f.body, false);
  Hoister h;
  h.used_names.insert(f.free_vars.begin(), f.free_vars.end());
  Formula matrix = h.hoist(nnf, {});
  matrix = eliminate_atoms(matrix, h);
  return NormalForm{f.free_vars, std::move(h.exist_vars), std::move(matrix)};
}

// ---------------------------------------------------------------------------
// Branch enumeration

namespace {

Branch canonical(std::vector<Atom> atoms) {
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  return Branch{std::move(atoms)};
}

// Depth-first product over Or nodes with a continuation list of pending
// conjuncts; returns false when the callback stopped the stream.
bool expand(const Formula& f, std::vector<Atom> acc, const std::vector<const Formula*>& rest,
            std::size_t rest_idx, std::set<Branch>& seen,
            const std::function<bool(const Branch&)>& cb) {
  if (f.kind == Formula::Kind::Atom) {
    acc.push_back(f.atom);
    if (rest_idx < rest.size())
      return expand(*rest[rest_idx], std::move(acc), rest, rest_idx + 1, seen, cb);
    Branch b = canonical(std::move(acc));
    if (seen.insert(b).second) return cb(b);
    return true;
  }
  if (f.kind == Formula::Kind::And) {
    std::vector<const Formula*> chain;
    for (const Formula& c : f.children) chain.push_back(&c);
    for (std::size_t i = rest_idx; i < rest.size(); ++i) chain.push_back(rest[i]);
    if (chain.empty()) throw std::logic_error("empty And");
    std::vector<const Formula*> tail(chain.begin() + 1, chain.end());
    return expand(*chain[0], std::move(acc), tail, 0, seen, cb);
  }
  if (f.kind == Formula::Kind::Or) {
    for (const Formula& c : f.children)
      if (!expand(c, acc, rest, rest_idx, seen, cb)) return false;
    return true;
  }
  throw std::logic_error("expand: matrix must be And/Or over atoms");
}

} // namespace

void for_each_branch(const NormalForm& nf, const std::function<bool(const Branch&)>& f) {
  std::set<Branch> seen;
  expand(nf.matrix, {}, {}, 0, seen, f);
}

std::vector<Branch> all_branches(const NormalForm& nf) {
  std::vector<Branch> out;
  for_each_branch(nf, [&](const Branch& b) {
    out.push_back(b);
    return true;
  });
  return out;
}

EqSystem branch_to_system(const Branch& b, const std::vector<std::string>& free_vars,
                          const std::vector<std::string>& exist_vars) {
  std::map<std::string, std::size_t> index;
  std::size_t next = 0;
  for (const std::string& v : free_vars) index[v] = next++;
  for (const std::string& v : exist_vars) index[v] = next++;

  std::size_t slacks = 0;
  for (const Atom& a : b.atoms) {
    if (a.rel == Atom::Rel::ModEq)
      throw fragment_error("branch_to_system: ModEq atom; normalize first");
    if (a.rel == Atom::Rel::Ge) ++slacks;
  }

  EqSystem sys;
  sys.num_vars = next + slacks;
  sys.proj_dim = free_vars.size();
  std::size_t slack_at = next;
  for (const Atom& a : b.atoms) {
    IntVec row(sys.num_vars);
    for (const auto& [v, c] : a.term.coeffs) {
      auto it = index.find(v);
      if (it == index.end()) throw input_error("branch_to_system: unknown variable " + v);
      row[it->second] = c;
    }
    if (a.rel == Atom::Rel::Ge) row[slack_at++] = -1;  // t - s = 0
    sys.rows.push_back(std::move(row));
    sys.rhs.entries.push_back(-a.term.constant);
  }
  return sys;
}

ParsedFormula negate_qf(const ParsedFormula& f) {
  if (!f.body.is_quantifier_free())
    throw fragment_error("negate_qf: input must be quantifier-free");
  return ParsedFormula{f.free_vars, to_nnf(Formula::make_not(f.body), false)};
}

namespace {

bool eval_formula(const Formula& f, const std::map<std::string, Int>& env) {
  switch (f.kind) {
    case Formula::Kind::Atom:
      return f.atom.holds(env);
    case Formula::Kind::Not:
      return !eval_formula(f.children[0], env);
    case Formula::Kind::And:
      return std::all_of(f.children.begin(), f.children.end(),
                         [&](const Formula& c) { return eval_formula(c, env); });
    case Formula::Kind::Or:
      return std::any_of(f.children.begin(), f.children.end(),
                         [&](const Formula& c) { return eval_formula(c, env); });
    case Formula::Kind::Exists:
      throw fragment_error("eval_qf: formula has a quantifier");
  }
  return false;
}

} // namespace

bool eval_qf(const ParsedFormula& f, const NatVec& point) {
  if (point.dim() != f.free_vars.size()) throw dimension_error("eval_qf: wrong point dimension");
  std::map<std::string, Int> env;
  for (std::size_t i = 0; i < point.dim(); ++i) env[f.free_vars[i]] = point[i];
  return eval_formula(f.body, env);
}

} // namespace seplab
