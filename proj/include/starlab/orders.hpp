#pragma once

// Order relations between matrices of equal shape:
//   minus       a <- b   some a- in a{1}:      aa- = ba-, a-a = a-b
//   left-star   a *< b   a*a = a*b and aR within bR
//   right-star  a <* b   aa* = ba* and Ra within Rb
//   star        both one-sided star orders
//   one-mp      some g in a{1,2,3}:  ag = bg, ga = gb
//   mp-one      some g in a{1,2,4}:  ag = bg, ga = gb
// Every relation has two decision routes that are implemented independently.

#include <cstdint>
#include <optional>
#include <string>

#include "starlab/checks.hpp"
#include "starlab/inverses.hpp"
#include "starlab/matrix.hpp"

namespace starlab {

enum class OrderRelation { minus, left_star, right_star, star, one_mp, mp_one };

inline constexpr OrderRelation kAllRelations[] = {
    OrderRelation::minus,  OrderRelation::left_star, OrderRelation::right_star,
    OrderRelation::star,   OrderRelation::one_mp,    OrderRelation::mp_one};

std::string to_string(OrderRelation rel);
/// Accepts "left-star", "leftStar", "left_star", "one-mp", "1mp", "mp1", ...
/// Throws ParseError.
OrderRelation parse_relation(const std::string& text);

enum class Route { characterization, feasibility };

std::string to_string(Route route);
Route parse_route(const std::string& text);

/// The inverse class whose existence set the relation is meant to live on:
/// {1} for minus, {1,3} for left-star and one-mp, {1,4} for right-star and
/// mp-one, {1,3,4} for star.
ClassSpec existence_class(OrderRelation rel);
bool in_existence_set(OrderRelation rel, const Mat& a);

struct Verdict {
  bool holds = false;
  /// Which conjunct failed, e.g. "gram", "space", "feasibility", "existence".
  std::string failed;
  explicit operator bool() const { return holds; }
};

/// Decides `rel` by the given route. a = 0 is below everything.
/// Throws ShapeError if a and b differ in shape or ring.
Verdict decide(OrderRelation rel, const Mat& a, const Mat& b,
               Route route = Route::characterization);
bool holds(OrderRelation rel, const Mat& a, const Mat& b,
           Route route = Route::characterization);

/// aa* = ba* and a*a = a*b (the two-Gram form of the star order).
bool star_drazin(const Mat& a, const Mat& b);

// Witnesses ------------------------------------------------------------------

/// g certifies the order; p, q are idempotents with a = pb = bq. For the left
/// star order p is self-adjoint and g in a{1,2,3}; for the right star order q
/// is self-adjoint and g in a{1,2,4}.
struct Witness {
  Mat g;
  Mat p;
  Mat q;
};

/// Throws PreconditionError unless a *< b and a has a {1,3}-inverse;
/// InvariantViolation if the constructed witness fails re-verification.
Witness left_star_witness(const Mat& a, const Mat& b);
/// Dual, obtained from left_star_witness(a*, b*).
Witness right_star_witness(const Mat& a, const Mat& b);
Checks witness_checks(const Mat& a, const Mat& b, const Witness& w, Side side);

/// For minus, one-mp and mp-one: a reflexive g in the relation's class
/// ({1,2}, {1,2,3}, {1,2,4}) with ag = bg and ga = gb, with p = ag, q = ga.
/// nullopt when the relation fails. Throws PreconditionError for the star
/// orders and InvariantViolation if re-verification fails.
std::optional<Witness> relation_witness(OrderRelation rel, const Mat& a, const Mat& b);
Checks relation_witness_checks(OrderRelation rel, const Mat& a, const Mat& b, const Witness& w);

/// a + (1 - ag) d (1 - ga) for g in a{1,2,3} (left) or a{1,2,4} (right);
/// d has the shape of a. The result lies above a in the chosen star order.
Mat upper_sample(const Mat& a, const Mat& g, const Mat& d, Side side = Side::left);

/// Block data of b above a relative to p = ah, q = ha.
///   left:  b = a + b4 u + b4 with b4 = (1-p) b (1-q), u = uq, (1-p) b q = b4 u
///   right: b = a + u b4 + b4 with u = pu, p b (1-q) = u b4
struct UpperStructure {
  Mat b4;
  Mat u;
};

/// Throws PreconditionError naming the violated block equality.
UpperStructure upper_structure(const Mat& a, const Mat& b, const Mat& h,
                               Side side = Side::left);

// Simultaneous decomposition -------------------------------------------------

struct TripleDecomposition {
  Mat p1, p2, p3;  // m x m
  Mat q1, q2, q3;  // n x n
  Mat a_inv;       // h a h
  Mat bma_inv;     // h - h a h
};

/// h in b{1,2,3} (left) or b{1,2,4} (right), with the matching star order
/// between a and b. Throws PreconditionError / InvariantViolation.
TripleDecomposition simultaneous_decomposition(const Mat& a, const Mat& b, const Mat& h,
                                               Side side = Side::left);
Checks decomposition_checks(const Mat& a, const Mat& b, const TripleDecomposition& d,
                            Side side);

// Inverse-set inclusion ------------------------------------------------------

enum class InclusionMode { randomized, critical, theorem, exhaustive };

std::string to_string(InclusionMode mode);
InclusionMode parse_inclusion_mode(const std::string& text);

struct InclusionOptions {
  std::size_t samples = 64;
  std::uint64_t seed = 0;
  /// Largest candidate universe for exhaustive mode.
  std::uint64_t cap = 1U << 20;
};

struct InclusionResult {
  bool included = false;
  /// A member of b{1,3} outside a{1,3} (resp. {1,4}), when one was found.
  std::optional<Mat> counterexample;
};

/// Decides b{1,3} within a{1,3}. Needs a, b in R^(1,3); exhaustive mode needs
/// a finite ring. Throws PreconditionError.
InclusionResult inclusion_13(const Mat& a, const Mat& b, InclusionMode mode,
                             const InclusionOptions& opts = {});
InclusionResult inclusion_14(const Mat& a, const Mat& b, InclusionMode mode,
                             const InclusionOptions& opts = {});

/// h a h in a{1,2,3} for `samples` members h of b{1,2,3} (plus the solver's
/// own member). Needs a, b in R^(1,3).
bool t_condition(const Mat& a, const Mat& b, std::size_t samples, std::uint64_t seed);

}  // namespace starlab
