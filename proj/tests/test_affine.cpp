#include "doctest.h"

#include <set>

#include "starlab/affine.hpp"
#include "starlab/errors.hpp"

using namespace starlab;

namespace {

const RingSpec Qi = RingSpec::gaussian();

Mat I(const RingSpec& r, std::size_t n) { return Mat::identity(r, n); }

// Penrose (1) and (3) for unknown X with fixed a (m x n): aXa = a, aX - X*a* = 0.
std::vector<LinearConstraint> eq13(const Mat& a) {
  const RingSpec& r = a.ring();
  const std::size_t m = a.rows();
  return {
      {{x_term(a, a)}, a},
      {{x_term(a, I(r, m)), xstar_term(-I(r, m), adjoint(a))}, Mat::zero(r, m, m)},
  };
}

}  // namespace

TEST_CASE("solve_affine examples") {
  SUBCASE("X = 0") {
    const std::vector<LinearConstraint> cs{{{x_term(I(Qi, 1), I(Qi, 1))}, Mat::zero(Qi, 1, 1)}};
    const auto s = solve_affine(Qi, 1, 1, cs);
    REQUIRE_FALSE(s.empty);
    CHECK(s.particular.is_zero());
    CHECK(s.basis.empty());
  }
  SUBCASE("AX = I with A = [[2]]") {
    const std::vector<LinearConstraint> cs{{{x_term(Mat::of(Qi, {{2}}), I(Qi, 1))}, I(Qi, 1)}};
    const auto s = solve_affine(Qi, 1, 1, cs);
    REQUIRE_FALSE(s.empty);
    CHECK(s.particular == Mat::parse(Qi, {{"1/2"}}));
    CHECK(s.basis.empty());
  }
  SUBCASE("AXA = A with A = diag(1, 0) has a 3-dimensional solution set") {
    for (const RingSpec ring : {Qi, RingSpec::prime(2), RingSpec::prime(5)}) {
      const Mat a = Mat::of(ring, {{1, 0}, {0, 0}});
      const std::vector<LinearConstraint> cs{{{x_term(a, a)}, a}};
      const auto s = solve_affine(ring, 2, 2, cs);
      REQUIRE_FALSE(s.empty);
      CHECK(s.particular == a);
      CHECK(s.dimension() == 3);
      CHECK_FALSE(s.real_coefficients);
    }
  }
  SUBCASE("inconsistent system") {
    const Mat zero = Mat::zero(Qi, 1, 1);
    const std::vector<LinearConstraint> cs{{{x_term(zero, zero)}, I(Qi, 1)}};
    CHECK(solve_affine(Qi, 1, 1, cs).empty);
  }
}

TEST_CASE("solve_affine rejects inconsistent shapes") {
  const std::vector<LinearConstraint> cs{{{x_term(I(Qi, 2), I(Qi, 2))}, Mat::zero(Qi, 3, 2)}};
  CHECK_THROWS_AS(solve_affine(Qi, 2, 2, cs), ShapeError);
  const std::vector<LinearConstraint> mixed{
      {{x_term(I(RingSpec::prime(3), 2), I(Qi, 2))}, Mat::zero(Qi, 2, 2)}};
  CHECK_THROWS_AS(solve_affine(Qi, 2, 2, mixed), ShapeError);
}

TEST_CASE("adjoint terms over Q(i) split into real coordinates") {
  // X* = X for 2x2: Hermitian matrices, real dimension 4.
  const std::vector<LinearConstraint> cs{
      {{x_term(I(Qi, 2), I(Qi, 2)), xstar_term(-I(Qi, 2), I(Qi, 2))}, Mat::zero(Qi, 2, 2)}};
  const auto s = solve_affine(Qi, 2, 2, cs);
  REQUIRE_FALSE(s.empty);
  CHECK(s.real_coefficients);
  CHECK(s.dimension() == 4);
  for (const auto& v : s.basis) CHECK(adjoint(v) == v);
  // Over Z_p the involution is transpose: symmetric 2x2, dimension 3.
  const RingSpec z3 = RingSpec::prime(3);
  const std::vector<LinearConstraint> sym{
      {{x_term(I(z3, 2), I(z3, 2)), xstar_term(-I(z3, 2), I(z3, 2))}, Mat::zero(z3, 2, 2)}};
  const auto t = solve_affine(z3, 2, 2, sym);
  CHECK_FALSE(t.real_coefficients);
  CHECK(t.dimension() == 3);
}

TEST_CASE("solutions substitute exactly and the basis is independent") {
  Rng rng(99);
  for (const RingSpec ring : {Qi, RingSpec::prime(3)}) {
    for (int trial = 0; trial < 40; ++trial) {
      const auto m = static_cast<std::size_t>(rng.uniform(1, 3));
      const auto n = static_cast<std::size_t>(rng.uniform(1, 3));
      const Mat a = random_mixed_rank(m, n, ring, rng, 3);
      const auto cs = eq13(a);
      const auto s = solve_affine(ring, n, m, cs);
      // {1,3}-inverses always exist over Q(i); over Z_3 isotropic vectors can block them.
      if (!ring.is_finite()) REQUIRE_FALSE(s.empty);
      if (s.empty) continue;
      CHECK(satisfies_all(cs, s.particular));
      for (int k = 0; k < 5; ++k) CHECK(satisfies_all(cs, s.sample(rng)));
      const std::vector<LinearConstraint> homog{
          {cs[0].terms, Mat::zero(ring, m, n)}, {cs[1].terms, Mat::zero(ring, m, m)}};
      for (const auto& v : s.basis) CHECK(satisfies_all(homog, v));
      if (!s.basis.empty()) {
        // Stack basis vectors as columns over the coefficient field (real
        // coordinates when split) and check full column rank.
        const std::size_t cells = n * m * (s.real_coefficients ? 2 : 1);
        Mat stacked(s.real_coefficients ? Qi : ring, cells, s.basis.size());
        for (std::size_t k = 0; k < s.basis.size(); ++k)
          for (std::size_t c = 0; c < n * m; ++c) {
            const Scalar& e = s.basis[k](c / m, c % m);
            if (s.real_coefficients) {
              stacked(2 * c, k) = Scalar::gaussian(e.real());
              stacked(2 * c + 1, k) = Scalar::gaussian(e.imag());
            } else {
              stacked(c, k) = e;
            }
          }
        CHECK(rank(stacked) == s.basis.size());
      }
    }
  }
}

TEST_CASE("brute force over Z_2 agrees with the affine solution set") {
  const RingSpec z2 = RingSpec::prime(2);
  for (std::uint64_t ai = 0; ai < 16; ++ai) {
    const Mat a = matrix_from_index(z2, 2, 2, ai);
    const Mat b = matrix_from_index(z2, 2, 2, (ai * 7 + 3) % 16);
    // Penrose (1), aX = bX and X*a = Xa*.
    const std::vector<LinearConstraint> cs{
        {{x_term(a, a)}, a},
        {{x_term(a, I(z2, 2)), x_term(-b, I(z2, 2))}, Mat::zero(z2, 2, 2)},
        {{xstar_term(I(z2, 2), a), x_term(-I(z2, 2), adjoint(a))}, Mat::zero(z2, 2, 2)},
    };
    const auto s = solve_affine(z2, 2, 2, cs);
    std::set<std::uint64_t> brute;
    for (std::uint64_t xi = 0; xi < 16; ++xi)
      if (satisfies_all(cs, matrix_from_index(z2, 2, 2, xi))) brute.insert(xi);
    std::set<std::uint64_t> solved;
    s.for_each([&](const Mat& x) { solved.insert(index_of(x)); }, 1 << 10);
    CHECK(brute == solved);
  }
  // Rectangular unknowns 1x2 and 2x1.
  for (std::uint64_t ai = 0; ai < 4; ++ai) {
    const Mat a = matrix_from_index(z2, 2, 1, ai);
    const auto cs = eq13(a);
    const auto s = solve_affine(z2, 1, 2, cs);
    std::set<std::uint64_t> brute, solved;
    for (std::uint64_t xi = 0; xi < 4; ++xi)
      if (satisfies_all(cs, matrix_from_index(z2, 1, 2, xi))) brute.insert(xi);
    s.for_each([&](const Mat& x) { solved.insert(index_of(x)); }, 1 << 10);
    CHECK(brute == solved);
  }
}

TEST_CASE("col_space_leq agrees with solvability of B X = A") {
  Rng rng(5);
  for (const RingSpec ring : {Qi, RingSpec::prime(2), RingSpec::prime(5)}) {
    for (int trial = 0; trial < 60; ++trial) {
      const auto m = static_cast<std::size_t>(rng.uniform(1, 3));
      const auto n = static_cast<std::size_t>(rng.uniform(1, 3));
      const auto k = static_cast<std::size_t>(rng.uniform(1, 3));
      const Mat b = random_mixed_rank(m, k, ring, rng, 2);
      const Mat a = rng.coin() ? b * random_matrix(k, n, ring, rng, 2)
                               : random_mixed_rank(m, n, ring, rng, 2);
      const std::vector<LinearConstraint> cs{{{x_term(b, I(ring, n))}, a}};
      CHECK(col_space_leq(a, b) == !solve_affine(ring, k, n, cs).empty);
    }
  }
}
