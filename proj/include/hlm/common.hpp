#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace hlm {

using vertex_id = std::uint32_t;
using edge_id = std::uint32_t;
using offset_t = std::uint64_t;

inline constexpr vertex_id kInvalidVertex = std::numeric_limits<vertex_id>::max();
inline constexpr edge_id kInvalidEdge = std::numeric_limits<edge_id>::max();

// Malformed instance data (bad ids, empty edges, non-positive weights, ...).
struct input_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Filesystem / stream failures.
struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::uint32_t ceil_log2(std::uint64_t x) {
  std::uint32_t r = 0;
  std::uint64_t p = 1;
  while (p < x) {
    p <<= 1;
    ++r;
  }
  return r;
}

}  // namespace hlm
