#pragma once

// Row-reduction kernel shared by rref() and solve_affine(). Works on a plain
// row-major buffer so that systems with zero equations need no special Mat.

#include <cstddef>
#include <vector>

#include "starlab/scalar.hpp"

namespace starlab::detail {

struct Dense {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Scalar> data;

  Scalar& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

/// Reduces `a` in place to RREF using only columns [0, pivot_cols). Row
/// operations are mirrored on `track` when it is non-null (track->rows must
/// equal a.rows). Returns pivot columns.
std::vector<std::size_t> gauss_jordan(Dense& a, std::size_t pivot_cols, Dense* track);

}  // namespace starlab::detail
