#include "starlab/orders.hpp"

#include <algorithm>
#include <cctype>

#include "starlab/affine.hpp"
#include "starlab/errors.hpp"
#include "starlab/random.hpp"

namespace starlab {

namespace {

Mat I(const RingSpec& ring, std::size_t n) { return Mat::identity(ring, n); }

std::string normalize(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != '-' && c != '_' && c != ' ') s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

Verdict yes() { return {true, ""}; }
Verdict no(std::string why) { return {false, std::move(why)}; }

// a R within b R, decided by solving b X = a.
bool right_multiple(const Mat& a, const Mat& b) {
  const std::vector<LinearConstraint> cs{{{x_term(b, I(a.ring(), a.cols()))}, a}};
  return !solve_affine(a.ring(), b.cols(), a.cols(), cs).empty;
}

// R a within R b, decided by solving X b = a.
bool left_multiple(const Mat& a, const Mat& b) {
  const std::vector<LinearConstraint> cs{{{x_term(I(a.ring(), a.rows()), b)}, a}};
  return !solve_affine(a.ring(), a.rows(), b.rows(), cs).empty;
}

Verdict left_char(const Mat& a, const Mat& b) {
  const Mat as = adjoint(a);
  if (!(as * a == as * b)) return no("gram: a*a != a*b");
  if (!col_space_leq(a, b)) return no("space: aR not in bR");
  return yes();
}

Verdict right_char(const Mat& a, const Mat& b) {
  const Mat as = adjoint(a);
  if (!(a * as == b * as)) return no("gram: aa* != ba*");
  if (!row_space_leq(a, b)) return no("space: Ra not in Rb");
  return yes();
}

Verdict left_feas(const Mat& a, const Mat& b) {
  const Mat as = adjoint(a);
  if (!(as * a == as * b)) return no("gram: a*a != a*b");
  if (!right_multiple(a, b)) return no("feasibility: bc = a has no solution");
  return yes();
}

Verdict right_feas(const Mat& a, const Mat& b) {
  const Mat as = adjoint(a);
  if (!(a * as == b * as)) return no("gram: aa* != ba*");
  if (!left_multiple(a, b)) return no("feasibility: cb = a has no solution");
  return yes();
}

Verdict both(Verdict l, Verdict r) {
  if (!l) return no("left-star " + l.failed);
  if (!r) return no("right-star " + r.failed);
  return yes();
}

// g in a{spec} with ag = bg and ga = gb, as one affine system in g.
AffineSolutionSet witness_set(const Mat& a, const Mat& b, const ClassSpec& spec) {
  const RingSpec& ring = a.ring();
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  auto cs = penrose_constraints(a, spec);
  cs.push_back({{x_term(a - b, I(ring, m))}, Mat::zero(ring, m, m)});
  cs.push_back({{x_term(I(ring, n), a - b)}, Mat::zero(ring, n, n)});
  return solve_affine(ring, n, m, cs);
}

Verdict witness_feas(const Mat& a, const Mat& b, const ClassSpec& spec) {
  if (!class_exists(a, spec)) return no("existence: a has no {" + spec.to_string() + "}-inverse");
  if (witness_set(a, b, spec).empty) return no("feasibility: no g with ag = bg, ga = gb");
  return yes();
}

ClassSpec relation_spec(OrderRelation rel) {
  switch (rel) {
    case OrderRelation::minus: return {1};
    case OrderRelation::one_mp: return {1, 3};
    case OrderRelation::mp_one: return {1, 4};
    default: throw PreconditionError("relation_witness: use the star-order witnesses for " + to_string(rel));
  }
}

Verdict minus_char(const Mat& a, const Mat& b) {
  if (rank(b - a) + rank(a) != rank(b)) return no("rank: rank(b-a) != rank(b) - rank(a)");
  return yes();
}

Verdict one_mp_char(const Mat& a, const Mat& b) {
  const auto h = solve_class(a, {1, 2, 3});
  if (!h) return no("existence: a has no {1,3}-inverse");
  if (!(*h * a == *h * b)) return no("gram: ha != hb");
  if (!col_space_leq(a, b)) return no("space: aR not in bR");
  return yes();
}

Verdict mp_one_char(const Mat& a, const Mat& b) {
  const auto h = solve_class(a, {1, 2, 4});
  if (!h) return no("existence: a has no {1,4}-inverse");
  if (!(a * *h == b * *h)) return no("gram: ah != bh");
  if (!row_space_leq(a, b)) return no("space: Ra not in Rb");
  return yes();
}

void require_membership(const Mat& a, const Mat& x, const ClassSpec& spec, const char* who) {
  if (!satisfies(a, x, spec))
    throw PreconditionError(std::string(who) + ": argument is not in a{" + spec.to_string() + "}");
}

ClassSpec side_class(Side side) {
  return side == Side::left ? ClassSpec{1, 2, 3} : ClassSpec{1, 2, 4};
}

OrderRelation side_order(Side side) {
  return side == Side::left ? OrderRelation::left_star : OrderRelation::right_star;
}

void require_order(OrderRelation rel, const Mat& a, const Mat& b, const char* who) {
  const Verdict v = decide(rel, a, b);
  if (!v) throw PreconditionError(std::string(who) + ": " + to_string(rel) + " fails (" + v.failed + ")");
}

Witness transport(const Witness& w) {
  return {adjoint(w.g), adjoint(w.q), adjoint(w.p)};
}

}  // namespace

std::string to_string(OrderRelation rel) {
  switch (rel) {
    case OrderRelation::minus: return "minus";
    case OrderRelation::left_star: return "left-star";
    case OrderRelation::right_star: return "right-star";
    case OrderRelation::star: return "star";
    case OrderRelation::one_mp: return "one-mp";
    case OrderRelation::mp_one: return "mp-one";
  }
  return "?";
}

OrderRelation parse_relation(const std::string& text) {
  const std::string s = normalize(text);
  if (s == "minus") return OrderRelation::minus;
  if (s == "leftstar") return OrderRelation::left_star;
  if (s == "rightstar") return OrderRelation::right_star;
  if (s == "star") return OrderRelation::star;
  if (s == "onemp" || s == "1mp") return OrderRelation::one_mp;
  if (s == "mpone" || s == "mp1") return OrderRelation::mp_one;
  throw ParseError("unknown order relation '" + text + "'");
}

std::string to_string(Route route) {
  return route == Route::characterization ? "characterization" : "feasibility";
}

Route parse_route(const std::string& text) {
  const std::string s = normalize(text);
  if (s == "characterization" || s == "char") return Route::characterization;
  if (s == "feasibility" || s == "feas") return Route::feasibility;
  throw ParseError("unknown route '" + text + "'");
}

ClassSpec existence_class(OrderRelation rel) {
  switch (rel) {
    case OrderRelation::minus: return {1};
    case OrderRelation::left_star:
    case OrderRelation::one_mp: return {1, 3};
    case OrderRelation::right_star:
    case OrderRelation::mp_one: return {1, 4};
    case OrderRelation::star: return {1, 3, 4};
  }
  return {1};
}

bool in_existence_set(OrderRelation rel, const Mat& a) {
  return class_exists(a, existence_class(rel));
}

Verdict decide(OrderRelation rel, const Mat& a, const Mat& b, Route route) {
  require_same_shape(a, b, "order relation");
  if (a.is_zero()) return yes();
  const bool by_char = route == Route::characterization;
  switch (rel) {
    case OrderRelation::minus:
      return by_char ? minus_char(a, b) : witness_feas(a, b, {1});
    case OrderRelation::left_star:
      return by_char ? left_char(a, b) : left_feas(a, b);
    case OrderRelation::right_star:
      return by_char ? right_char(a, b) : right_feas(a, b);
    case OrderRelation::star:
      return by_char ? both(left_char(a, b), right_char(a, b))
                     : both(left_feas(a, b), right_feas(a, b));
    case OrderRelation::one_mp:
      return by_char ? one_mp_char(a, b) : witness_feas(a, b, {1, 3});
    case OrderRelation::mp_one:
      return by_char ? mp_one_char(a, b) : witness_feas(a, b, {1, 4});
  }
  return no("unknown relation");
}

bool holds(OrderRelation rel, const Mat& a, const Mat& b, Route route) {
  return decide(rel, a, b, route).holds;
}

bool star_drazin(const Mat& a, const Mat& b) {
  require_same_shape(a, b, "star_drazin");
  const Mat as = adjoint(a);
  return a * as == b * as && as * a == as * b;
}

Checks witness_checks(const Mat& a, const Mat& b, const Witness& w, Side side) {
  return {
      {"p idempotent", is_idempotent(w.p)},
      {"q idempotent", is_idempotent(w.q)},
      {side == Side::left ? "p self-adjoint" : "q self-adjoint",
       is_self_adjoint(side == Side::left ? w.p : w.q)},
      {"a = pb", a == w.p * b},
      {"a = bq", a == b * w.q},
      {side == Side::left ? "g in a{1,2,3}" : "g in a{1,2,4}", satisfies(a, w.g, side_class(side))},
      {"ag = bg", a * w.g == b * w.g},
      {"ga = gb", w.g * a == w.g * b},
      {"p = ag", w.p == a * w.g},
      {"q = ga", w.q == w.g * a},
  };
}

Witness left_star_witness(const Mat& a, const Mat& b) {
  require_same_shape(a, b, "left_star_witness");
  if (!class_exists(a, {1, 3}))
    throw PreconditionError("left_star_witness: a has no {1,3}-inverse");
  require_order(OrderRelation::left_star, a, b, "left_star_witness");
  const RingSpec& ring = a.ring();
  const std::size_t n = a.cols();
  const Mat h = *solve_class(a, {1, 2, 3});
  const Mat q = h * a;
  Mat c = q;  // solves ac = a; used when b = a
  if (!(a == b)) {
    const std::vector<LinearConstraint> cs{{{x_term(b, I(ring, n))}, a}};
    const auto set = solve_affine(ring, n, n, cs);
    if (set.empty) throw InvariantViolation("left_star_witness: bc = a infeasible although a *< b");
    c = set.particular;
  }
  const Mat c3 = (I(ring, n) - q) * c * q;
  const Mat g = h + c3 * h;
  Witness w{g, a * g, g * a};
  const Checks cs = witness_checks(a, b, w, Side::left);
  if (!all_ok(cs))
    throw InvariantViolation("left_star_witness failed [" + failures(cs) + "] for a = " +
                             to_string(a) + ", b = " + to_string(b));
  return w;
}

std::optional<Witness> relation_witness(OrderRelation rel, const Mat& a, const Mat& b) {
  const ClassSpec spec = relation_spec(rel);
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeError("relation_witness: a and b differ in shape");
  const AffineSolutionSet set = witness_set(a, b, spec);
  if (set.empty) return std::nullopt;
  const Mat g = squeeze(a, set.particular);
  Witness w{g, a * g, g * a};
  const Checks cs = relation_witness_checks(rel, a, b, w);
  if (!all_ok(cs))
    throw InvariantViolation("relation_witness: " + failures(cs) + "; a = " + to_string(a) +
                             ", b = " + to_string(b) + ", g = " + to_string(g));
  return w;
}

Checks relation_witness_checks(OrderRelation rel, const Mat& a, const Mat& b, const Witness& w) {
  const ClassSpec spec = relation_spec(rel).with(2);
  return {
      {"g in a{" + spec.to_string() + "}", satisfies(a, w.g, spec)},
      {"ag = bg", a * w.g == b * w.g},
      {"ga = gb", w.g * a == w.g * b},
      {"p = ag", w.p == a * w.g},
      {"q = ga", w.q == w.g * a},
      {"p^2 = p", w.p * w.p == w.p},
      {"q^2 = q", w.q * w.q == w.q},
      {"pb = a", w.p * b == a},
      {"bq = a", b * w.q == a},
  };
}

Witness right_star_witness(const Mat& a, const Mat& b) {
  require_same_shape(a, b, "right_star_witness");
  if (!class_exists(a, {1, 4}))
    throw PreconditionError("right_star_witness: a has no {1,4}-inverse");
  require_order(OrderRelation::right_star, a, b, "right_star_witness");
  Witness w = transport(left_star_witness(adjoint(a), adjoint(b)));
  const Checks cs = witness_checks(a, b, w, Side::right);
  if (!all_ok(cs))
    throw InvariantViolation("right_star_witness failed [" + failures(cs) + "] for a = " +
                             to_string(a) + ", b = " + to_string(b));
  return w;
}

Mat upper_sample(const Mat& a, const Mat& g, const Mat& d, Side side) {
  require_membership(a, g, side_class(side), "upper_sample");
  require_same_shape(a, d, "upper_sample");
  const RingSpec& ring = a.ring();
  const Mat b = a + (I(ring, a.rows()) - a * g) * d * (I(ring, a.cols()) - g * a);
  if (!holds(side_order(side), a, b))
    throw InvariantViolation("upper_sample: result is not above a; a = " + to_string(a) +
                             ", b = " + to_string(b));
  return b;
}

UpperStructure upper_structure(const Mat& a, const Mat& b, const Mat& h, Side side) {
  require_same_shape(a, b, "upper_structure");
  require_membership(a, h, side_class(side), "upper_structure");
  const RingSpec& ring = a.ring();
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  const Mat p = a * h;
  const Mat q = h * a;
  const Mat np = I(ring, m) - p;
  const Mat nq = I(ring, n) - q;
  const char* tag = side == Side::left ? "upper_structure(left)" : "upper_structure(right)";
  if (!(p * b * q == a)) throw PreconditionError(std::string(tag) + ": block (1,1) pbq != a");
  const Mat b4 = np * b * nq;
  UpperStructure out{b4, Mat::zero(ring, n, n)};
  if (side == Side::left) {
    if (!(p * b * nq).is_zero())
      throw PreconditionError(std::string(tag) + ": block (1,2) pb(1-q) != 0");
    const std::vector<LinearConstraint> cs{
        {{x_term(b4, I(ring, n))}, np * b * q},
        {{x_term(I(ring, n), I(ring, n)), x_term(-I(ring, n), q)}, Mat::zero(ring, n, n)},
    };
    const auto set = solve_affine(ring, n, n, cs);
    if (set.empty)
      throw PreconditionError(std::string(tag) + ": block (2,1) (1-p)bq is not b4 u with u in Rq");
    out.u = set.particular;
    if (!(a + b4 * out.u + b4 == b))
      throw InvariantViolation(std::string(tag) + ": reassembly a + b4 u + b4 != b");
  } else {
    if (!(np * b * q).is_zero())
      throw PreconditionError(std::string(tag) + ": block (2,1) (1-p)bq != 0");
    const std::vector<LinearConstraint> cs{
        {{x_term(I(ring, m), b4)}, p * b * nq},
        {{x_term(I(ring, m), I(ring, m)), x_term(-p, I(ring, m))}, Mat::zero(ring, m, m)},
    };
    const auto set = solve_affine(ring, m, m, cs);
    if (set.empty)
      throw PreconditionError(std::string(tag) + ": block (1,2) pb(1-q) is not u b4 with u in pR");
    out.u = set.particular;
    if (!(a + out.u * b4 + b4 == b))
      throw InvariantViolation(std::string(tag) + ": reassembly a + u b4 + b4 != b");
  }
  require_order(side_order(side), a, b, tag);
  return out;
}

Checks decomposition_checks(const Mat& a, const Mat& b, const TripleDecomposition& d, Side side) {
  Checks cs;
  const RingSpec& ring = a.ring();
  const Mat bma = b - a;
  auto identity_checks = [&](const char* sym, const Mat& e1, const Mat& e2, const Mat& e3) {
    const Mat* es[3] = {&e1, &e2, &e3};
    const std::string s(sym);
    for (int i = 0; i < 3; ++i) {
      cs.push_back({s + std::to_string(i + 1) + " idempotent", is_idempotent(*es[i])});
      for (int j = 0; j < 3; ++j)
        if (i != j)
          cs.push_back({s + std::to_string(i + 1) + s + std::to_string(j + 1) + " = 0",
                        (*es[i] * *es[j]).is_zero()});
    }
    cs.push_back({s + "1 + " + s + "2 + " + s + "3 = 1", e1 + e2 + e3 == I(ring, e1.rows())});
  };
  identity_checks("p", d.p1, d.p2, d.p3);
  identity_checks("q", d.q1, d.q2, d.q3);
  if (side == Side::left) {
    cs.push_back({"p1 self-adjoint", is_self_adjoint(d.p1)});
    cs.push_back({"p2 self-adjoint", is_self_adjoint(d.p2)});
    cs.push_back({"p3 self-adjoint", is_self_adjoint(d.p3)});
  } else {
    cs.push_back({"q1 self-adjoint", is_self_adjoint(d.q1)});
    cs.push_back({"q2 self-adjoint", is_self_adjoint(d.q2)});
    cs.push_back({"q3 self-adjoint", is_self_adjoint(d.q3)});
  }
  cs.push_back({"a a_inv = p1", a * d.a_inv == d.p1});
  cs.push_back({"a_inv a = q1", d.a_inv * a == d.q1});
  cs.push_back({"(b-a) bma_inv = p2", bma * d.bma_inv == d.p2});
  cs.push_back({"bma_inv (b-a) = q2", d.bma_inv * bma == d.q2});
  cs.push_back({"a_inv in q1 R p1", d.q1 * d.a_inv * d.p1 == d.a_inv});
  cs.push_back({"bma_inv in q2 R p2", d.q2 * d.bma_inv * d.p2 == d.bma_inv});
  cs.push_back({"a = p1 a q1", d.p1 * a * d.q1 == a});
  cs.push_back({"b-a = p2 (b-a) q2", d.p2 * bma * d.q2 == bma});
  cs.push_back({"b = p1 b q1 + p2 b q2", d.p1 * b * d.q1 + d.p2 * b * d.q2 == b});
  return cs;
}

TripleDecomposition simultaneous_decomposition(const Mat& a, const Mat& b, const Mat& h,
                                               Side side) {
  require_same_shape(a, b, "simultaneous_decomposition");
  require_membership(b, h, side_class(side), "simultaneous_decomposition");
  require_order(side_order(side), a, b, "simultaneous_decomposition");
  const RingSpec& ring = a.ring();
  const Mat hah = h * a * h;
  TripleDecomposition d{a * h,
                        (b - a) * h,
                        I(ring, a.rows()) - b * h,
                        h * a,
                        h * (b - a),
                        I(ring, a.cols()) - h * b,
                        hah,
                        h - hah};
  const Checks cs = decomposition_checks(a, b, d, side);
  if (!all_ok(cs))
    throw InvariantViolation("simultaneous_decomposition failed [" + failures(cs) + "] for a = " +
                             to_string(a) + ", b = " + to_string(b) + ", h = " + to_string(h));
  return d;
}

std::string to_string(InclusionMode mode) {
  switch (mode) {
    case InclusionMode::randomized: return "randomized";
    case InclusionMode::critical: return "critical";
    case InclusionMode::theorem: return "theorem";
    case InclusionMode::exhaustive: return "exhaustive";
  }
  return "?";
}

InclusionMode parse_inclusion_mode(const std::string& text) {
  const std::string s = normalize(text);
  if (s == "randomized" || s == "random") return InclusionMode::randomized;
  if (s == "critical") return InclusionMode::critical;
  if (s == "theorem") return InclusionMode::theorem;
  if (s == "exhaustive") return InclusionMode::exhaustive;
  throw ParseError("unknown inclusion mode '" + text + "'");
}

InclusionResult inclusion_13(const Mat& a, const Mat& b, InclusionMode mode,
                             const InclusionOptions& opts) {
  require_same_shape(a, b, "inclusion_13");
  if (!class_exists(a, {1, 3}) || !class_exists(b, {1, 3}))
    throw PreconditionError("inclusion_13: a and b need {1,3}-inverses");
  const RingSpec& ring = a.ring();
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  const ClassSpec s13{1, 3};

  auto first_outside = [&](const std::vector<Mat>& candidates) -> InclusionResult {
    for (const Mat& x : candidates) {
      if (!satisfies(b, x, s13))
        throw InvariantViolation("inclusion_13: candidate outside b{1,3}: " + to_string(x));
      if (!satisfies(a, x, s13)) return {false, x};
    }
    return {true, std::nullopt};
  };

  switch (mode) {
    case InclusionMode::theorem:
      return {holds(OrderRelation::left_star, a, b), std::nullopt};
    case InclusionMode::randomized: {
      Rng rng(opts.seed);
      return first_outside(sample_class(b, s13, opts.samples, rng));
    }
    case InclusionMode::critical: {
      const auto set = linear_class(b, s13);
      const Mat h = *solve_class(b, {1, 2, 3});
      std::vector<Mat> candidates{h};
      if (m == n) {
        const Mat p = b * h;
        const Mat nq = I(ring, n) - h * b;
        const Mat np = I(ring, m) - p;
        candidates.push_back(h + nq * p);
        candidates.push_back(h + nq * np);
        candidates.push_back(h + nq);
      }
      // Both classes are affine, so h and h + v over a basis decide inclusion.
      for (const Mat& v : set.basis) candidates.push_back(h + v);
      return first_outside(candidates);
    }
    case InclusionMode::exhaustive: {
      if (!ring.is_finite())
        throw PreconditionError("inclusion_13: exhaustive mode needs a finite ring");
      const std::uint64_t size = universe_size(ring, n, m, opts.cap);
      if (size == 0) throw PreconditionError("inclusion_13: candidate universe exceeds the cap");
      for (std::uint64_t k = 0; k < size; ++k) {
        const Mat x = matrix_from_index(ring, n, m, k);
        if (satisfies(b, x, s13) && !satisfies(a, x, s13)) return {false, x};
      }
      return {true, std::nullopt};
    }
  }
  return {false, std::nullopt};
}

InclusionResult inclusion_14(const Mat& a, const Mat& b, InclusionMode mode,
                             const InclusionOptions& opts) {
  require_same_shape(a, b, "inclusion_14");
  if (!class_exists(a, {1, 4}) || !class_exists(b, {1, 4}))
    throw PreconditionError("inclusion_14: a and b need {1,4}-inverses");
  InclusionResult r = inclusion_13(adjoint(a), adjoint(b), mode, opts);
  if (r.counterexample) r.counterexample = adjoint(*r.counterexample);
  return r;
}

bool t_condition(const Mat& a, const Mat& b, std::size_t samples, std::uint64_t seed) {
  require_same_shape(a, b, "t_condition");
  if (!class_exists(a, {1, 3}) || !class_exists(b, {1, 3}))
    throw PreconditionError("t_condition: a and b need {1,3}-inverses");
  Rng rng(seed);
  auto hs = sample_class(b, {1, 2, 3}, samples, rng);
  hs.push_back(*solve_class(b, {1, 2, 3}));
  return std::all_of(hs.begin(), hs.end(),
                     [&](const Mat& h) { return satisfies(a, h * a * h, {1, 2, 3}); });
}

}  // namespace starlab
