#pragma once

// Decompositions of the identity and the block calculus x_ij = e_i x f_j.
// Blocks are kept as full-size matrices; idempotents need not be coordinate
// projections, so there is nothing sensible to crop to.

#include <optional>
#include <vector>

#include "starlab/checks.hpp"
#include "starlab/matrix.hpp"

namespace starlab {

/// 1 = e_1 + ... + e_k with mutually orthogonal idempotents; orthogonal in
/// the involutive sense when `self_adjoint` is set.
struct IdempotentDecomposition {
  std::vector<Mat> parts;
  bool self_adjoint = false;

  std::size_t n() const { return parts.empty() ? 0 : parts.front().rows(); }
  /// {e, 1 - e}.
  static IdempotentDecomposition split(const Mat& e, bool self_adjoint = false);
  static IdempotentDecomposition trivial(const RingSpec& ring, std::size_t n);
};

struct ValidationReport {
  Checks checks;
  /// Whether every part is self-adjoint (independent of the flag).
  bool all_self_adjoint = false;
  bool valid() const { return all_ok(checks); }
  std::string violations() const { return failures(checks); }
};

ValidationReport validate(const IdempotentDecomposition& dec);

struct BlockView {
  IdempotentDecomposition row_decomp;
  IdempotentDecomposition col_decomp;
  std::vector<std::vector<Mat>> blocks;  // blocks[i][j] = e_i x f_j
};

/// Throws PreconditionError if either decomposition fails validation, and
/// ShapeError on size mismatch.
BlockView blocks(const Mat& x, const IdempotentDecomposition& rd,
                 const IdempotentDecomposition& cd);
Mat assemble(const BlockView& view);

/// Block-matrix product; x's column decomposition must be z's row one.
BlockView block_product(const BlockView& x, const BlockView& z);
/// Blocks of x* relative to (f*, e*): result[j][i] = blocks[i][j]*.
BlockView block_adjoint(const BlockView& x);

/// The unique x in qRp with ax = p and xa = q, or nullopt when a is not in
/// pRq or no such x exists. Throws PreconditionError unless p, q are
/// idempotent, InvariantViolation if the solution is not unique.
std::optional<Mat> pq_inverse(const Mat& a, const Mat& p, const Mat& q);

/// left:  the unique x in qR with ax = b (needs b = pb)
/// right: the unique x in Rp with xa = b (needs b = bq)
Mat solve_in_coset(const Mat& a, const Mat& p, const Mat& q, const Mat& b, Side side);

}  // namespace starlab
