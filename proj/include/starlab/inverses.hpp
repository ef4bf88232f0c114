#pragma once

// Generalized inverse classes a{S}, S a subset of the Penrose equations
//   (1) axa = a   (2) xax = x   (3) (ax)* = ax   (4) (xa)* = xa.
// Equations (1), (3), (4) are linear in x; (2) is handled by squeezing a
// {1,...}-solution h to hah.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "starlab/affine.hpp"
#include "starlab/matrix.hpp"
#include "starlab/random.hpp"

namespace starlab {

/// Nonempty subset of {1,2,3,4}.
class ClassSpec {
 public:
  ClassSpec(std::initializer_list<int> equations);
  /// Parses digit strings such as "123" or "1,3"; throws ParseError.
  static ClassSpec parse(const std::string& text);

  bool has(int equation) const { return (mask_ >> equation) & 1U; }
  /// The class with equation (2) removed (the part that is linear in x).
  ClassSpec without_2() const;
  ClassSpec with(int equation) const;
  std::string to_string() const;

  friend bool operator==(const ClassSpec&, const ClassSpec&) = default;

 private:
  explicit ClassSpec(unsigned mask) : mask_(mask) {}
  unsigned mask_ = 0;
};

/// True iff x satisfies every Penrose equation named in `spec`.
/// Throws ShapeError unless x has the transposed shape of a.
bool satisfies(const Mat& a, const Mat& x, const ClassSpec& spec);

/// Linear constraints on an unknown n x m matrix for equations (1), (3), (4)
/// of `spec` (equation (2) is ignored).
std::vector<LinearConstraint> penrose_constraints(const Mat& a, const ClassSpec& spec);

/// Solution set of the linear equations of `spec`.
AffineSolutionSet linear_class(const Mat& a, const ClassSpec& spec);

/// h a h. For h in a{1,...} the result is in a{1,2,...} with (3)/(4) kept.
Mat squeeze(const Mat& a, const Mat& h);

/// One member of a{spec}, or nullopt when the class is empty. Classes without
/// equation (1) always contain 0, which is returned. Otherwise the linear part
/// is solved (deterministic particular solution) and squeezed when (2) is
/// requested; the result is re-verified.
std::optional<Mat> solve_class(const Mat& a, const ClassSpec& spec);

/// True iff a{spec} is nonempty (a in R^{spec}).
bool class_exists(const Mat& a, const ClassSpec& spec);

/// Moore-Penrose inverse, with uniqueness re-checked across the whole
/// {1,3,4} solution family. Throws InvariantViolation if two differ.
std::optional<Mat> moore_penrose(const Mat& a);

/// `count` seeded members of a{spec} (empty vector if the class is empty).
/// For classes with (2) but not (1) the samples come from a{spec + 1}.
std::vector<Mat> sample_class(const Mat& a, const ClassSpec& spec, std::size_t count, Rng& rng);

// Parametrization of a{1} relative to a reflexive g-inverse h ---------------

/// Free blocks of a g-inverse in the q x p block form (p = ah, q = ha):
/// x2 in qR(1-p), x3 in (1-q)Rp, x4 in (1-q)R(1-p).
struct GInvParams {
  Mat x2;
  Mat x3;
  Mat x4;
};

/// h + x2 + x3 + x4, a member of a{1}. Throws PreconditionError if h is not
/// in a{1,2} or a block violates its corner condition.
Mat g_inverse_from_params(const Mat& a, const Mat& h, const GInvParams& params);
/// Parameters with x4 = x3 a x2, so that the assembled inverse is reflexive.
GInvParams reflexive_params(const Mat& a, Mat x2, Mat x3);
/// Inverse of g_inverse_from_params: the unique blocks of x in a{1}.
GInvParams params_of(const Mat& a, const Mat& h, const Mat& x);

// 1MP / MP1 and the {1,2,3} / {1,2,4} constructions -------------------------

/// a_minus a a^dagger, always in a{1,2,3}. Throws PreconditionError when a has
/// no Moore-Penrose inverse or a_minus is not in a{1}.
Mat one_mp(const Mat& a, const Mat& a_minus);
/// a^dagger a a_minus, always in a{1,2,4}.
Mat mp_one(const Mat& a, const Mat& a_minus);

/// h + (1 - ha) w ah for h in a{1,2,3}; w is n x m.
Mat construct_123(const Mat& a, const Mat& h, const Mat& w);
/// h + ha w (1 - ah) for h in a{1,2,4}; derived from construct_123 through
/// the involution.
Mat construct_124(const Mat& a, const Mat& h, const Mat& w);
/// Some w with construct_123(a, h, w) == g, for g in a{1,2,3}.
std::optional<Mat> solve_construct_123(const Mat& a, const Mat& h, const Mat& g);

/// G a* for G in (a*a){1}.
Mat from_gram_left(const Mat& a, const Mat& gram_inverse);
/// a* G for G in (aa*){1}.
Mat from_gram_right(const Mat& a, const Mat& gram_inverse);

// Left / right equivalence on a{1} ------------------------------------------

bool sim_l(const Mat& a, const Mat& x, const Mat& y);
bool sim_r(const Mat& a, const Mat& x, const Mat& y);
/// x a a^dagger: the canonical representative of x's sim_l class.
Mat canonical_rep_l(const Mat& a, const Mat& x);
/// a^dagger a x.
Mat canonical_rep_r(const Mat& a, const Mat& x);

/// x*; g in a{1,2,3} iff g* in a*{1,2,4}.
inline Mat dual_transport(const Mat& x) { return adjoint(x); }

}  // namespace starlab
