#pragma once

#include <cstddef>

namespace ccc {

struct Limits {
  // Largest ground set whose open family may be listed explicitly.
  std::size_t max_points = 12;
  // Largest carrier any construction may produce (function spaces, tensors).
  std::size_t max_carrier = 128;
};

}  // namespace ccc
