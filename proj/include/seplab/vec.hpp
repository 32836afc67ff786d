#pragma once

#include <seplab/ints.hpp>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <vector>

namespace seplab {

/// Vector over Z with a fixed dimension.
struct IntVec {
  std::vector<Int> entries;

  IntVec() = default;
  explicit IntVec(std::size_t dim) : entries(dim) {}
  IntVec(std::initializer_list<Int> xs) : entries(xs) {}
  explicit IntVec(std::vector<Int> xs) : entries(std::move(xs)) {}

  std::size_t dim() const { return entries.size(); }
  const Int& operator[](std::size_t i) const { return entries[i]; }
  Int& operator[](std::size_t i) { return entries[i]; }

  bool is_zero() const;

  bool operator==(const IntVec& o) const = default;
  // Lexicographic; used for canonical ordering in sets and golden outputs.
  auto operator<=>(const IntVec& o) const { return entries <=> o.entries; }
};

/// Vector over N.  Construction checks non-negativity.
struct NatVec {
  std::vector<Int> entries;

  NatVec() = default;
  explicit NatVec(std::size_t dim) : entries(dim) {}
  NatVec(std::initializer_list<Int> xs);
  explicit NatVec(std::vector<Int> xs);

  std::size_t dim() const { return entries.size(); }
  const Int& operator[](std::size_t i) const { return entries[i]; }

  IntVec to_int() const { return IntVec(entries); }

  bool is_zero() const;

  bool operator==(const NatVec& o) const = default;
  auto operator<=>(const NatVec& o) const { return entries <=> o.entries; }
};

IntVec operator+(const IntVec& a, const IntVec& b);
IntVec operator-(const IntVec& a, const IntVec& b);
IntVec operator*(const Int& c, const IntVec& a);
NatVec operator+(const NatVec& a, const NatVec& b);
NatVec operator*(const Int& c, const NatVec& a);

/// Componentwise a <= b.
bool leq(const NatVec& a, const NatVec& b);

/// v with every component outside I zeroed; dimension is preserved.
NatVec restrict_to(const NatVec& v, const IndexSet& I);
IntVec restrict_to(const IntVec& v, const IndexSet& I);

/// {i : v[i] != 0}, 0-based.
IndexSet support(const NatVec& v);
IndexSet support(const IntVec& v);

/// Componentwise: equal and <= k, or both > k and congruent mod k.
bool sim_k(const NatVec& u, const NatVec& v, const Int& k);

/// Checked conversion; throws input_error on a negative entry.
NatVec to_nat(const IntVec& v);

std::ostream& operator<<(std::ostream& os, const IntVec& v);
std::ostream& operator<<(std::ostream& os, const NatVec& v);

} // namespace seplab
