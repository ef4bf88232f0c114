#include "doctest.h"

#include "starlab/errors.hpp"
#include "starlab/inverses.hpp"

using namespace starlab;

namespace {

const RingSpec Qi = RingSpec::gaussian();
const RingSpec Z2 = RingSpec::prime(2);

Mat I(const RingSpec& r, std::size_t n) { return Mat::identity(r, n); }

// Penrose equations written out directly, independent of satisfies().
bool penrose_all(const Mat& a, const Mat& x) {
  return a * x * a == a && x * a * x == x && adjoint(a * x) == a * x &&
         adjoint(x * a) == x * a;
}

// Every 2x2 matrix over Z_2 that satisfies axa = a and (ax)^T = ax.
std::vector<Mat> brute_13(const Mat& a) {
  std::vector<Mat> out;
  for (std::uint64_t k = 0; k < 16; ++k) {
    const Mat x = matrix_from_index(Z2, 2, 2, k);
    const Mat ax = a * x;
    if (ax * a == a && adjoint(ax) == ax) out.push_back(x);
  }
  return out;
}

struct Shape {
  std::size_t m, n;
};

Shape random_shape(Rng& rng, std::size_t max_dim) {
  return {static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(max_dim))),
          static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(max_dim)))};
}

}  // namespace

TEST_CASE("ClassSpec parsing") {
  CHECK(ClassSpec::parse("123") == ClassSpec{1, 2, 3});
  CHECK(ClassSpec::parse("{1,3}") == ClassSpec{1, 3});
  CHECK(ClassSpec{1, 2, 4}.to_string() == "124");
  CHECK_THROWS_AS(ClassSpec::parse("15"), ParseError);
  CHECK_THROWS_AS(ClassSpec::parse(""), ParseError);
}

TEST_CASE("satisfies examples") {
  CHECK(satisfies(I(Qi, 2), I(Qi, 2), {1, 2, 3, 4}));
  const Mat a = Mat::of(Qi, {{1, 1}, {0, 0}});
  const Mat x = Mat::of(Qi, {{1, 0}, {0, 0}});
  CHECK(a * x * a == a);
  CHECK(satisfies(a, x, {1}));
  CHECK_FALSE(satisfies(a, x, {4}));
  CHECK_THROWS_AS(satisfies(a, Mat::zero(Qi, 3, 2), {1}), ShapeError);
}

TEST_CASE("solve_class examples") {
  const Mat e = Mat::of(Qi, {{1, 0}, {0, 0}});
  CHECK(moore_penrose(e) == e);

  const Mat a = Mat::of(Qi, {{1, 1}, {0, 0}});
  const Mat expected = Mat::parse(Qi, {{"1/2", "0"}, {"1/2", "0"}});
  REQUIRE(penrose_all(a, expected));
  CHECK(moore_penrose(a) == expected);
  CHECK(solve_class(a, {1, 2, 3, 4}) == expected);

  const Mat ones = Mat::of(Z2, {{1, 1}, {1, 1}});
  REQUIRE(brute_13(ones).empty());
  CHECK_FALSE(solve_class(ones, {1, 3}).has_value());
  CHECK(solve_class(ones, {1}).has_value());  // R^(1) is strictly larger than R^(1,3)

  const Mat col = Mat::of(Z2, {{1, 0}, {1, 0}});
  REQUIRE(brute_13(col).empty());
  CHECK_FALSE(solve_class(col, {1, 3}).has_value());

  CHECK(solve_class(a, {2}) == Mat::zero(Qi, 2, 2));
  CHECK(solve_class(a, {2, 3, 4}) == Mat::zero(Qi, 2, 2));
}

TEST_CASE("g_inverse_from_params examples") {
  const Mat a = Mat::of(Qi, {{1, 0}, {0, 0}});
  const Mat zero = Mat::zero(Qi, 2, 2);
  CHECK(g_inverse_from_params(a, a, {zero, zero, zero}) == a);

  const Mat x3 = Mat::of(Qi, {{0, 0}, {1, 0}});
  const Mat refl = g_inverse_from_params(a, a, reflexive_params(a, zero, x3));
  CHECK(refl == Mat::of(Qi, {{1, 0}, {1, 0}}));
  CHECK(a * refl * a == a);
  CHECK(refl * a * refl == refl);

  const Mat x4 = Mat::of(Qi, {{0, 0}, {0, 1}});
  const Mat full = g_inverse_from_params(a, a, {zero, zero, x4});
  CHECK(full == I(Qi, 2));
  CHECK(a * full * a == a);
  CHECK_FALSE(full * a * full == full);

  CHECK_THROWS_AS(g_inverse_from_params(a, a, {x3, zero, zero}), PreconditionError);
  CHECK_THROWS_AS(g_inverse_from_params(a, I(Qi, 2), {zero, zero, zero}), PreconditionError);
}

TEST_CASE("one_mp and mp_one examples") {
  const Mat a = Mat::of(Qi, {{1, 1}, {0, 0}});
  const Mat ad = *moore_penrose(a);
  CHECK(one_mp(a, ad) == ad);
  CHECK(mp_one(a, ad) == ad);
  const Mat am = Mat::of(Qi, {{1, 0}, {0, 0}});
  CHECK(one_mp(a, am) == Mat::of(Qi, {{1, 0}, {0, 0}}));
  const Mat m1 = mp_one(a, am);
  CHECK(m1 == Mat::parse(Qi, {{"1/2", "0"}, {"1/2", "0"}}));
  CHECK(satisfies(a, m1, {1, 2, 4}));
  CHECK_THROWS_AS(one_mp(a, Mat::zero(Qi, 2, 2)), PreconditionError);
  CHECK_THROWS_AS(one_mp(Mat::of(Z2, {{1, 1}, {1, 1}}), I(Z2, 2)), PreconditionError);
}

TEST_CASE("construct_123 / construct_124 examples") {
  const Mat a = Mat::of(Qi, {{1, 0}, {0, 0}});
  CHECK(construct_123(a, a, Mat::zero(Qi, 2, 2)) == a);
  const Mat g = construct_123(a, a, Mat::of(Qi, {{0, 0}, {1, 0}}));
  CHECK(g == Mat::of(Qi, {{1, 0}, {1, 0}}));
  CHECK(satisfies(a, g, {1, 2, 3}));

  const Mat b = Mat::of(Z2, {{0, 1}, {0, 0}});
  const Mat h = Mat::of(Z2, {{0, 0}, {1, 0}});
  REQUIRE(satisfies(b, h, {1, 2, 3}));
  const Mat gz = construct_123(b, h, I(Z2, 2));
  // (1 - hb) = diag(1, 0), bh = diag(1, 0): h + diag(1,0) I diag(1,0).
  CHECK(gz == Mat::of(Z2, {{1, 0}, {1, 0}}));
  CHECK(satisfies(b, gz, {1, 2, 3}));

  const Mat g4 = construct_124(a, a, Mat::of(Qi, {{0, 1}, {0, 0}}));
  CHECK(g4 == Mat::of(Qi, {{1, 1}, {0, 0}}));
  CHECK(satisfies(a, g4, {1, 2, 4}));
  CHECK_THROWS_AS(construct_123(a, I(Qi, 2), Mat::zero(Qi, 2, 2)), PreconditionError);
}

TEST_CASE("from_gram examples") {
  CHECK(from_gram_left(I(Qi, 2), I(Qi, 2)) == I(Qi, 2));
  const Mat a = Mat::of(Qi, {{1, 1}, {0, 0}});
  const Mat gram = adjoint(a) * a;
  CHECK(gram == Mat::of(Qi, {{1, 1}, {1, 1}}));
  const Mat g0 = Mat::of(Qi, {{1, 0}, {0, 0}});
  CHECK(gram * g0 * gram == gram);
  const Mat left = from_gram_left(a, g0);
  CHECK(left == Mat::of(Qi, {{1, 0}, {0, 0}}));
  CHECK(satisfies(a, left, {1, 2, 3}));
  CHECK(from_gram_left(a, *moore_penrose(gram)) == *moore_penrose(a));
  CHECK_THROWS_AS(from_gram_left(a, Mat::zero(Qi, 2, 2)), PreconditionError);
  CHECK(satisfies(a, from_gram_right(a, *moore_penrose(a * adjoint(a))), {1, 2, 4}));
}

TEST_CASE("sim_l and canonical representatives") {
  const Mat a = Mat::of(Qi, {{1, 0}, {0, 0}});
  const Mat x = I(Qi, 2);
  const Mat y = a;
  CHECK(sim_l(a, x, x));
  CHECK(x * a == a);
  CHECK(sim_l(a, x, y));
  CHECK(canonical_rep_l(a, x) == a);
  CHECK(canonical_rep_l(a, y) == a);
  CHECK_THROWS_AS(sim_l(a, Mat::zero(Qi, 2, 2), x), PreconditionError);
}

TEST_CASE("dual transport examples") {
  CHECK(dual_transport(I(Qi, 2)) == I(Qi, 2));
  CHECK(dual_transport(Mat::of(Qi, {{1, 0}, {1, 0}})) == Mat::of(Qi, {{1, 1}, {0, 0}}));
  const Mat a = Mat::of(Qi, {{1, 1}, {0, 0}});
  const Mat x = Mat::of(Qi, {{1, 0}, {0, 0}});
  CHECK(satisfies(a, x, {1, 2, 3}));
  CHECK(satisfies(adjoint(a), adjoint(x), {1, 2, 4}));
}

TEST_CASE("1MP equals {1,2,3} on random matrices") {
  Rng rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const auto [m, n] = random_shape(rng, 3);
    const Mat a = random_mixed_rank(m, n, Qi, rng, 3);
    const Mat ad = *moore_penrose(a);
    const Mat am = sample_class(a, {1}, 1, rng).front();
    const Mat g = one_mp(a, am);
    CHECK(g * a * g == g);
    CHECK(a * g == a * ad);
    CHECK(satisfies(a, g, {1, 2, 3}));
    for (const Mat& h : sample_class(a, {1, 2, 3}, 3, rng)) {
      CHECK(a * h == a * ad);
      CHECK(h == h * a * ad);
    }
    const Mat g4 = mp_one(a, am);
    CHECK(satisfies(a, g4, {1, 2, 4}));
    CHECK(g4 * a == ad * a);
  }
}

TEST_CASE("four characterizations of {1,2,3} on random matrices") {
  Rng rng(32);
  for (const RingSpec ring : {Qi, RingSpec::prime(3), RingSpec::prime(5)}) {
    for (int trial = 0; trial < 40; ++trial) {
      const auto [m, n] = random_shape(rng, ring.is_finite() ? 2 : 3);
      const Mat a = random_mixed_rank(m, n, ring, rng, 3);
      if (!class_exists(a, {1, 3})) continue;
      const Mat h = *solve_class(a, {1, 2, 3});
      // a{1} a a{1,3} lands in a{1,2,3}.
      const Mat am = sample_class(a, {1}, 1, rng).front();
      const Mat a13 = sample_class(a, {1, 3}, 1, rng).front();
      CHECK(satisfies(a, am * a * a13, {1, 2, 3}));
      // h + (1 - ha) w ah: image inside, and every sampled member is hit.
      CHECK(satisfies(a, construct_123(a, h, random_matrix(n, m, ring, rng, 3)), {1, 2, 3}));
      for (const Mat& g : sample_class(a, {1, 2, 3}, 2, rng)) {
        const auto w = solve_construct_123(a, h, g);
        REQUIRE(w.has_value());
        CHECK(construct_123(a, h, *w) == g);
        // g = (g g*) a* with g g* in (a*a){1}.
        const Mat s = g * adjoint(g);
        CHECK(adjoint(a) * a * s * adjoint(a) * a == adjoint(a) * a);
        CHECK(from_gram_left(a, s) == g);
      }
      const Mat gram = adjoint(a) * a;
      const Mat gi = sample_class(gram, {1}, 1, rng).front();
      CHECK(satisfies(a, from_gram_left(a, gi), {1, 2, 3}));
    }
  }
}

TEST_CASE("parametrization of a{1} is bijective") {
  Rng rng(33);
  for (int trial = 0; trial < 40; ++trial) {
    const auto [m, n] = random_shape(rng, 3);
    const Mat a = random_mixed_rank(m, n, Qi, rng, 2);
    const Mat h = *solve_class(a, {1, 2});
    const Mat x = sample_class(a, {1}, 1, rng).front();
    const GInvParams ps = params_of(a, h, x);
    CHECK(g_inverse_from_params(a, h, ps) == x);
    const Mat r = g_inverse_from_params(a, h, reflexive_params(a, ps.x2, ps.x3));
    CHECK(satisfies(a, r, {1, 2}));
  }
}

TEST_CASE("null-space characterizations") {
  Rng rng(34);
  for (int trial = 0; trial < 40; ++trial) {
    const auto [m, n] = random_shape(rng, 4);
    const Mat a = random_mixed_rank(m, n, Qi, rng, 2);
    const Mat a_star = adjoint(a);
    for (const Mat& g : sample_class(a, {1, 2, 3}, 2, rng)) {
      const auto ng = null_space(g);
      const auto na = null_space(a_star);
      CHECK(ng.size() == na.size());
      for (const auto& v : na) CHECK((g * v).is_zero());
      for (const auto& v : ng) CHECK((a_star * v).is_zero());
    }
    // x in a{1} with N(a*) inside N(x): x = y a a^dagger.
    const Mat y = sample_class(a, {1}, 1, rng).front();
    const Mat x = y * a * *moore_penrose(a);
    for (const auto& v : null_space(a_star)) REQUIRE((x * v).is_zero());
    CHECK(satisfies(a, x, {1, 2, 3}));
    CHECK(satisfies(a, squeeze(a, x), {1, 2, 3}));
  }
}

TEST_CASE("least-squares and minimum-norm semantics over Q(i)") {
  Rng rng(35);
  for (int trial = 0; trial < 25; ++trial) {
    const auto [m, n] = random_shape(rng, 3);
    const Mat a = random_mixed_rank(m, n, Qi, rng, 2);
    const Mat g = sample_class(a, {1, 3}, 1, rng).front();
    const Mat b = random_matrix(m, 1, Qi, rng, 3);
    const Rational best = norm2(a * (g * b) - b);
    for (int k = 0; k < 10; ++k) CHECK(best <= norm2(a * random_matrix(n, 1, Qi, rng, 3) - b));

    const Mat gm = sample_class(a, {1, 4}, 1, rng).front();
    const Mat x0 = random_matrix(n, 1, Qi, rng, 3);
    const Mat rhs = a * x0;
    const Rational min_norm = norm2(gm * rhs);
    CHECK(a * (gm * rhs) == rhs);
    const auto kernel = null_space(a);
    for (int k = 0; k < 10; ++k) {
      Mat x = x0;
      for (const auto& v : kernel) x += random_scalar(rng, Qi, 3) * v;
      CHECK(min_norm <= norm2(x));
    }
  }
}

TEST_CASE("Moore-Penrose inverse is unique and transports under adjoint") {
  Rng rng(36);
  for (int trial = 0; trial < 40; ++trial) {
    const auto [m, n] = random_shape(rng, 4);
    const Mat a = random_mixed_rank(m, n, Qi, rng, 3);
    const auto ad = moore_penrose(a);
    REQUIRE(ad.has_value());
    CHECK(penrose_all(a, *ad));
    CHECK(solve_class(a, {1, 2, 3, 4}) == ad);
    CHECK(moore_penrose(adjoint(a)) == adjoint(*ad));
    for (const Mat& g : sample_class(a, {1, 2, 3}, 2, rng))
      CHECK(satisfies(adjoint(a), dual_transport(g), {1, 2, 4}));
  }
}
