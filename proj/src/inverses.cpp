#include "starlab/inverses.hpp"

#include <cctype>

#include "starlab/errors.hpp"

namespace starlab {

namespace {

Mat I(const RingSpec& ring, std::size_t n) { return Mat::identity(ring, n); }

void require_class(const Mat& a, const Mat& x, const ClassSpec& spec, const char* who,
                   const char* name) {
  if (!satisfies(a, x, spec))
    throw PreconditionError(std::string(who) + ": " + name + " is not in a{" + spec.to_string() +
                            "}");
}

Mat verified(const Mat& a, Mat x, const ClassSpec& spec, const char* who) {
  if (!satisfies(a, x, spec))
    throw InvariantViolation(std::string(who) + " produced " + to_string(x) + " outside a{" +
                             spec.to_string() + "} for a = " + to_string(a));
  return x;
}

Mat dagger_or_throw(const Mat& a, const char* who) {
  auto ad = moore_penrose(a);
  if (!ad) throw PreconditionError(std::string(who) + ": a has no Moore-Penrose inverse");
  return *ad;
}

}  // namespace

ClassSpec::ClassSpec(std::initializer_list<int> equations) {
  for (int e : equations) {
    if (e < 1 || e > 4) throw ParseError("Penrose equation index must be 1..4");
    mask_ |= 1U << e;
  }
  if (mask_ == 0) throw ParseError("class spec must name at least one equation");
}

ClassSpec ClassSpec::parse(const std::string& text) {
  unsigned mask = 0;
  for (char c : text) {
    if (c == ',' || c == '{' || c == '}' || std::isspace(static_cast<unsigned char>(c))) continue;
    if (c < '1' || c > '4') throw ParseError("invalid class spec '" + text + "'");
    mask |= 1U << (c - '0');
  }
  if (mask == 0) throw ParseError("empty class spec '" + text + "'");
  return ClassSpec(mask);
}

ClassSpec ClassSpec::without_2() const {
  return ClassSpec(mask_ & ~(1U << 2));
}

ClassSpec ClassSpec::with(int equation) const {
  return ClassSpec(mask_ | (1U << equation));
}

std::string ClassSpec::to_string() const {
  std::string s;
  for (int e = 1; e <= 4; ++e)
    if (has(e)) s += static_cast<char>('0' + e);
  return s;
}

bool satisfies(const Mat& a, const Mat& x, const ClassSpec& spec) {
  if (x.rows() != a.cols() || x.cols() != a.rows())
    throw ShapeError("inverse candidate must have the transposed shape of a");
  if (spec.has(1) && !(a * x * a == a)) return false;
  if (spec.has(2) && !(x * a * x == x)) return false;
  if (spec.has(3) && !is_self_adjoint(a * x)) return false;
  if (spec.has(4) && !is_self_adjoint(x * a)) return false;
  return true;
}

std::vector<LinearConstraint> penrose_constraints(const Mat& a, const ClassSpec& spec) {
  const RingSpec& ring = a.ring();
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  std::vector<LinearConstraint> cs;
  if (spec.has(1)) cs.push_back({{x_term(a, a)}, a});
  if (spec.has(3))
    cs.push_back({{x_term(a, I(ring, m)), xstar_term(-I(ring, m), adjoint(a))},
                  Mat::zero(ring, m, m)});
  if (spec.has(4))
    cs.push_back({{x_term(I(ring, n), a), xstar_term(-adjoint(a), I(ring, n))},
                  Mat::zero(ring, n, n)});
  return cs;
}

AffineSolutionSet linear_class(const Mat& a, const ClassSpec& spec) {
  const auto cs = penrose_constraints(a, spec);
  return solve_affine(a.ring(), a.cols(), a.rows(), cs);
}

Mat squeeze(const Mat& a, const Mat& h) {
  return h * a * h;
}

std::optional<Mat> solve_class(const Mat& a, const ClassSpec& spec) {
  if (!spec.has(1)) return Mat::zero(a.ring(), a.cols(), a.rows());
  const auto set = linear_class(a, spec.without_2());
  if (set.empty) return std::nullopt;
  Mat g = spec.has(2) ? squeeze(a, set.particular) : set.particular;
  return verified(a, std::move(g), spec, "solve_class");
}

bool class_exists(const Mat& a, const ClassSpec& spec) {
  if (!spec.has(1)) return true;
  return !linear_class(a, spec.without_2()).empty;
}

std::optional<Mat> moore_penrose(const Mat& a) {
  const auto set = linear_class(a, {1, 3, 4});
  if (set.empty) return std::nullopt;
  Mat g = verified(a, squeeze(a, set.particular), {1, 2, 3, 4}, "moore_penrose");
  for (const auto& v : set.basis) {
    const Mat other = squeeze(a, set.particular + v);
    if (!(other == g))
      throw InvariantViolation("two Moore-Penrose inverses of " + to_string(a) + ": " +
                               to_string(g) + " and " + to_string(other));
  }
  return g;
}

std::vector<Mat> sample_class(const Mat& a, const ClassSpec& spec, std::size_t count, Rng& rng) {
  const ClassSpec source = spec.has(2) ? spec.with(1) : spec;
  const auto set = linear_class(a, source.without_2());
  std::vector<Mat> out;
  if (set.empty) return out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    Mat x = set.sample(rng);
    if (spec.has(2)) x = squeeze(a, x);
    out.push_back(verified(a, std::move(x), spec, "sample_class"));
  }
  return out;
}

Mat g_inverse_from_params(const Mat& a, const Mat& h, const GInvParams& params) {
  require_class(a, h, {1, 2}, "g_inverse_from_params", "h");
  const RingSpec& ring = a.ring();
  const Mat p = a * h;
  const Mat q = h * a;
  const Mat np = I(ring, p.rows()) - p;
  const Mat nq = I(ring, q.rows()) - q;
  for (const Mat* x : {&params.x2, &params.x3, &params.x4})
    if (x->rows() != h.rows() || x->cols() != h.cols())
      throw ShapeError("g_inverse_from_params: block shape must match h");
  if (!(q * params.x2 * np == params.x2))
    throw PreconditionError("g_inverse_from_params: x2 is not in qR(1-p)");
  if (!(nq * params.x3 * p == params.x3))
    throw PreconditionError("g_inverse_from_params: x3 is not in (1-q)Rp");
  if (!(nq * params.x4 * np == params.x4))
    throw PreconditionError("g_inverse_from_params: x4 is not in (1-q)R(1-p)");
  return verified(a, h + params.x2 + params.x3 + params.x4, {1}, "g_inverse_from_params");
}

GInvParams reflexive_params(const Mat& a, Mat x2, Mat x3) {
  Mat x4 = x3 * a * x2;
  return {std::move(x2), std::move(x3), std::move(x4)};
}

GInvParams params_of(const Mat& a, const Mat& h, const Mat& x) {
  require_class(a, h, {1, 2}, "params_of", "h");
  require_class(a, x, {1}, "params_of", "x");
  const RingSpec& ring = a.ring();
  const Mat p = a * h;
  const Mat q = h * a;
  const Mat np = I(ring, p.rows()) - p;
  const Mat nq = I(ring, q.rows()) - q;
  if (!(q * x * p == h))
    throw InvariantViolation("params_of: (1,1) block of a g-inverse differs from h");
  return {q * x * np, nq * x * p, nq * x * np};
}

Mat one_mp(const Mat& a, const Mat& a_minus) {
  const Mat ad = dagger_or_throw(a, "one_mp");
  require_class(a, a_minus, {1}, "one_mp", "a_minus");
  return verified(a, a_minus * a * ad, {1, 2, 3}, "one_mp");
}

Mat mp_one(const Mat& a, const Mat& a_minus) {
  const Mat ad = dagger_or_throw(a, "mp_one");
  require_class(a, a_minus, {1}, "mp_one", "a_minus");
  return verified(a, ad * a * a_minus, {1, 2, 4}, "mp_one");
}

Mat construct_123(const Mat& a, const Mat& h, const Mat& w) {
  require_class(a, h, {1, 2, 3}, "construct_123", "h");
  if (w.rows() != h.rows() || w.cols() != h.cols())
    throw ShapeError("construct_123: w must have the shape of h");
  const Mat nq = I(a.ring(), a.cols()) - h * a;
  return verified(a, h + nq * w * (a * h), {1, 2, 3}, "construct_123");
}

Mat construct_124(const Mat& a, const Mat& h, const Mat& w) {
  require_class(a, h, {1, 2, 4}, "construct_124", "h");
  const Mat g = adjoint(construct_123(adjoint(a), adjoint(h), adjoint(w)));
  return verified(a, g, {1, 2, 4}, "construct_124");
}

std::optional<Mat> solve_construct_123(const Mat& a, const Mat& h, const Mat& g) {
  require_class(a, h, {1, 2, 3}, "solve_construct_123", "h");
  const Mat nq = I(a.ring(), a.cols()) - h * a;
  const std::vector<LinearConstraint> cs{{{x_term(nq, a * h)}, g - h}};
  const auto set = solve_affine(a.ring(), h.rows(), h.cols(), cs);
  if (set.empty) return std::nullopt;
  return set.particular;
}

Mat from_gram_left(const Mat& a, const Mat& gram_inverse) {
  const Mat gram = adjoint(a) * a;
  if (gram_inverse.rows() != gram.rows() || gram_inverse.cols() != gram.cols() ||
      !(gram * gram_inverse * gram == gram))
    throw PreconditionError("from_gram_left: G is not in (a*a){1}");
  if (!class_exists(a, {1, 3})) throw PreconditionError("from_gram_left: a has no {1,3}-inverse");
  return verified(a, gram_inverse * adjoint(a), {1, 2, 3}, "from_gram_left");
}

Mat from_gram_right(const Mat& a, const Mat& gram_inverse) {
  const Mat gram = a * adjoint(a);
  if (gram_inverse.rows() != gram.rows() || gram_inverse.cols() != gram.cols() ||
      !(gram * gram_inverse * gram == gram))
    throw PreconditionError("from_gram_right: G is not in (aa*){1}");
  if (!class_exists(a, {1, 4})) throw PreconditionError("from_gram_right: a has no {1,4}-inverse");
  return verified(a, adjoint(a) * gram_inverse, {1, 2, 4}, "from_gram_right");
}

bool sim_l(const Mat& a, const Mat& x, const Mat& y) {
  require_class(a, x, {1}, "sim_l", "x");
  require_class(a, y, {1}, "sim_l", "y");
  return x * a == y * a;
}

bool sim_r(const Mat& a, const Mat& x, const Mat& y) {
  require_class(a, x, {1}, "sim_r", "x");
  require_class(a, y, {1}, "sim_r", "y");
  return a * x == a * y;
}

Mat canonical_rep_l(const Mat& a, const Mat& x) {
  const Mat ad = dagger_or_throw(a, "canonical_rep_l");
  require_class(a, x, {1}, "canonical_rep_l", "x");
  return x * a * ad;
}

Mat canonical_rep_r(const Mat& a, const Mat& x) {
  const Mat ad = dagger_or_throw(a, "canonical_rep_r");
  require_class(a, x, {1}, "canonical_rep_r", "x");
  return ad * a * x;
}

}  // namespace starlab
