#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>

namespace seplab {

// Arbitrary-precision integers everywhere; minimal-solution entries can
// exceed machine words on adversarial inputs.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Coordinate sets are 0-based internally.  All external formats (JSON,
// CLI output) use 1-based indices; conversion happens in json_io.
using IndexSet = std::set<std::size_t>;

class dimension_error : public std::runtime_error {
public:
  explicit dimension_error(const std::string& what) : std::runtime_error(what) {}
};

class fragment_error : public std::runtime_error {
public:
  explicit fragment_error(const std::string& what) : std::runtime_error(what) {}
};

class parse_error : public std::runtime_error {
public:
  parse_error(const std::string& what, std::size_t line, std::size_t col)
      : std::runtime_error(what + " at " + std::to_string(line) + ":" + std::to_string(col)),
        line(line), col(col) {}
  std::size_t line;
  std::size_t col;
};

class input_error : public std::runtime_error {
public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a configured cap (skeleton states, solver nodes) is hit.
// Never a verdict; callers surface it as a resource failure.
class resource_error : public std::runtime_error {
public:
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

inline IndexSet full_index_set(std::size_t dim) {
  IndexSet s;
  for (std::size_t i = 0; i < dim; ++i) s.insert(i);
  return s;
}

} // namespace seplab
