#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "starlab/matrix.hpp"
#include "starlab/random.hpp"

namespace starlab {

/// One summand `left * X * right` (or `left * X^* * right`) of a linear map in
/// the unknown matrix X.
struct Term {
  Mat left;
  Mat right;
  bool adjoint = false;
};

/// Affine condition sum(terms) == rhs.
struct LinearConstraint {
  std::vector<Term> terms;
  Mat rhs;
};

inline Term x_term(Mat left, Mat right) { return {std::move(left), std::move(right), false}; }
inline Term xstar_term(Mat left, Mat right) { return {std::move(left), std::move(right), true}; }

/// Solution set particular + span(basis) of a system of LinearConstraints.
///
/// When some constraint involves X^* over Q(i) the system is only Q-linear;
/// it is then solved over Q (real and imaginary parts as separate unknowns) and
/// `real_coefficients` is set: the set is particular + Q-span(basis). Otherwise
/// the span is over the full coefficient ring.
struct AffineSolutionSet {
  bool empty = true;
  Mat particular;
  std::vector<Mat> basis;
  bool real_coefficients = false;

  std::size_t dimension() const { return basis.size(); }
  /// particular + sum coeffs[k] * basis[k].
  Mat point(std::span<const Scalar> coeffs) const;
  /// Seeded random member: small integer (or Gaussian integer / residue)
  /// coefficients on the basis.
  Mat sample(Rng& rng) const;
  /// Calls `visit` on every member. Prime fields only; throws
  /// PreconditionError if p^dimension exceeds `cap`.
  void for_each(const std::function<void(const Mat&)>& visit, std::uint64_t cap) const;
};

/// Full affine solution set for an unknown `rows x cols` matrix.
/// Throws ShapeError on inconsistent term / rhs shapes.
AffineSolutionSet solve_affine(const RingSpec& ring, std::size_t rows, std::size_t cols,
                               std::span<const LinearConstraint> constraints);

/// Evaluates sum(terms)(x) for a concrete x.
Mat apply(const LinearConstraint& c, const Mat& x);
/// True iff x satisfies every constraint exactly.
bool satisfies_all(std::span<const LinearConstraint> constraints, const Mat& x);

}  // namespace starlab
