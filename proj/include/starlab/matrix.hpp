#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "starlab/scalar.hpp"

namespace starlab {

/// Dense m x n matrix (m, n >= 1) over a single coefficient ring, row-major.
class Mat {
 public:
  /// 1 x 1 zero over Q(i).
  Mat() : Mat(RingSpec::gaussian(), 1, 1) {}
  Mat(RingSpec ring, std::size_t rows, std::size_t cols);
  Mat(RingSpec ring, std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static Mat zero(RingSpec ring, std::size_t rows, std::size_t cols) { return Mat(ring, rows, cols); }
  static Mat identity(RingSpec ring, std::size_t n);
  /// Integer literal matrix, e.g. Mat::of(ring, {{1, 1}, {0, 0}}).
  static Mat of(RingSpec ring, std::initializer_list<std::initializer_list<long>> rows);
  /// Matrix from scalar-grammar strings.
  static Mat parse(RingSpec ring, const std::vector<std::vector<std::string>>& rows);

  const RingSpec& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::span<const Scalar> entries() const { return data_; }

  bool is_zero() const;

  Mat& operator+=(const Mat& rhs);
  Mat& operator-=(const Mat& rhs);
  Mat operator-() const;

  friend Mat operator+(Mat lhs, const Mat& rhs) { return lhs += rhs; }
  friend Mat operator-(Mat lhs, const Mat& rhs) { return lhs -= rhs; }
  friend Mat operator*(const Mat& lhs, const Mat& rhs);
  friend Mat operator*(const Scalar& s, Mat m);
  friend bool operator==(const Mat& a, const Mat& b) = default;

 private:
  RingSpec ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

/// Conjugate transpose: (A*)_{ji} = conj(A_{ij}).
Mat adjoint(const Mat& a);

/// [a | b]
Mat hstack(const Mat& a, const Mat& b);
/// [a ; b]
Mat vstack(const Mat& a, const Mat& b);

bool is_idempotent(const Mat& e);
bool is_self_adjoint(const Mat& e);

/// Sum of squared moduli of the entries (Q(i) only).
Rational norm2(const Mat& a);

std::string to_string(const Mat& a);
std::ostream& operator<<(std::ostream& os, const Mat& a);

void require_same_shape(const Mat& a, const Mat& b, const char* what);

// Reduced row echelon form --------------------------------------------------

struct Rref {
  Mat reduced;
  std::vector<std::size_t> pivots;
  /// Invertible; transform * input == reduced.
  Mat transform;
};

/// Gauss-Jordan elimination; the pivot in each column is the first nonzero
/// entry scanning downward.
Rref rref(const Mat& a);
std::size_t rank(const Mat& a);
/// Basis of {v : a v = 0} as n x 1 columns (n - rank vectors).
std::vector<Mat> null_space(const Mat& a);

/// R(a) subset of R(b): rank([b | a]) == rank(b).
bool col_space_leq(const Mat& a, const Mat& b);
/// Row space of a inside row space of b (R a subset of R b), via adjoints.
bool row_space_leq(const Mat& a, const Mat& b);

// Finite-field enumeration --------------------------------------------------

/// Number of m x n matrices over a prime field, or 0 if it exceeds `cap`.
std::uint64_t universe_size(const RingSpec& ring, std::size_t rows, std::size_t cols,
                            std::uint64_t cap = UINT64_MAX);
/// Lexicographic enumeration (entry (0,0) most significant).
Mat matrix_from_index(const RingSpec& ring, std::size_t rows, std::size_t cols,
                      std::uint64_t index);
std::uint64_t index_of(const Mat& a);

}  // namespace starlab
