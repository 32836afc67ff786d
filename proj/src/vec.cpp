#include <seplab/vec.hpp>

#include <algorithm>
#include <ostream>

namespace seplab {

namespace {

void check_same_dim(std::size_t a, std::size_t b, const char* op) {
  if (a != b)
    throw dimension_error(std::string(op) + ": dimension mismatch (" +
                          std::to_string(a) + " vs " + std::to_string(b) + ")");
}

void check_nonneg(const std::vector<Int>& xs) {
  for (const Int& x : xs)
    if (x < 0) throw input_error("NatVec entry must be non-negative");
}

} // namespace

NatVec::NatVec(std::initializer_list<Int> xs) : entries(xs) { check_nonneg(entries); }
NatVec::NatVec(std::vector<Int> xs) : entries(std::move(xs)) { check_nonneg(entries); }

bool IntVec::is_zero() const {
  return std::all_of(entries.begin(), entries.end(), [](const Int& x) { return x == 0; });
}

bool NatVec::is_zero() const {
  return std::all_of(entries.begin(), entries.end(), [](const Int& x) { return x == 0; });
}

IntVec operator+(const IntVec& a, const IntVec& b) {
  check_same_dim(a.dim(), b.dim(), "+");
  IntVec r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVec operator-(const IntVec& a, const IntVec& b) {
  check_same_dim(a.dim(), b.dim(), "-");
  IntVec r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVec operator*(const Int& c, const IntVec& a) {
  IntVec r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = c * a[i];
  return r;
}

NatVec operator+(const NatVec& a, const NatVec& b) {
  check_same_dim(a.dim(), b.dim(), "+");
  std::vector<Int> r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] + b[i];
  return NatVec(std::move(r));
}

NatVec operator*(const Int& c, const NatVec& a) {
  if (c < 0) throw input_error("NatVec scalar must be non-negative");
  std::vector<Int> r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = c * a[i];
  return NatVec(std::move(r));
}

bool leq(const NatVec& a, const NatVec& b) {
  check_same_dim(a.dim(), b.dim(), "leq");
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

namespace {

template <class V>
V restrict_impl(const V& v, const IndexSet& I, const char* what) {
  for (std::size_t i : I)
    if (i >= v.dim()) throw dimension_error(std::string(what) + ": index out of range");
  std::vector<Int> r(v.dim());
  for (std::size_t i : I) r[i] = v[i];
  return V(std::move(r));
}

template <class V>
IndexSet support_impl(const V& v) {
  IndexSet s;
  for (std::size_t i = 0; i < v.dim(); ++i)
    if (v[i] != 0) s.insert(i);
  return s;
}

} // namespace

NatVec restrict_to(const NatVec& v, const IndexSet& I) { return restrict_impl(v, I, "restrict"); }
IntVec restrict_to(const IntVec& v, const IndexSet& I) { return restrict_impl(v, I, "restrict"); }

IndexSet support(const NatVec& v) { return support_impl(v); }
IndexSet support(const IntVec& v) { return support_impl(v); }

bool sim_k(const NatVec& u, const NatVec& v, const Int& k) {
  check_same_dim(u.dim(), v.dim(), "sim_k");
  if (k < 1) throw input_error("sim_k: k must be positive");
  for (std::size_t i = 0; i < u.dim(); ++i) {
    if (u[i] == v[i] && u[i] <= k) continue;
    if (u[i] > k && v[i] > k && (u[i] - v[i]) % k == 0) continue;
    return false;
  }
  return true;
}

NatVec to_nat(const IntVec& v) { return NatVec(v.entries); }

namespace {

template <class V>
std::ostream& print_vec(std::ostream& os, const V& v) {
  os << '(';
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  return os << ')';
}

} // namespace

std::ostream& operator<<(std::ostream& os, const IntVec& v) { return print_vec(os, v); }
std::ostream& operator<<(std::ostream& os, const NatVec& v) { return print_vec(os, v); }

} // namespace seplab
