#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace graphfx {

using vertex_t = std::uint32_t;
/// Edge ids and row offsets. 64-bit so edge counts beyond 2^32 stay addressable.
using edge_t = std::uint64_t;
using weight_t = std::uint32_t;
/// BFS / BC hop depth.
using depth_t = std::uint32_t;

inline constexpr vertex_t kInvalidVertex = std::numeric_limits<vertex_t>::max();
inline constexpr edge_t kInvalidEdge = std::numeric_limits<edge_t>::max();

/// The "unvisited" label: the largest representable value of the label type
/// (+inf for floating labels), so atomic-min relaxation works unchanged.
template <typename T>
constexpr T unvisited() noexcept {
  if constexpr (std::numeric_limits<T>::has_infinity) {
    return std::numeric_limits<T>::infinity();
  } else {
    return std::numeric_limits<T>::max();
  }
}

/// Distance type used for shortest paths over weights of type W.
template <typename W>
using distance_for_t = std::conditional_t<std::is_integral_v<W>, std::uint64_t, double>;

/// Invalid user configuration (bad flag value, out-of-range parameter).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed or inconsistent input data.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input file could not be parsed. Carries the 1-based line number.
class ParseError : public DataError {
 public:
  ParseError(const std::string& what, std::size_t line)
      : DataError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace graphfx
