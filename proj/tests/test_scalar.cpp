#include "doctest.h"

#include "starlab/errors.hpp"
#include "starlab/random.hpp"
#include "starlab/scalar.hpp"

using namespace starlab;

namespace {

const RingSpec Qi = RingSpec::gaussian();

Scalar q(long re, long im = 0) { return Scalar::gaussian(re, im); }

}  // namespace

TEST_CASE("parse_scalar reads the wire grammar") {
  CHECK(parse_scalar("0", Qi) == Scalar::zero(Qi));
  const Scalar s = parse_scalar("1/2+3/4i", Qi);
  CHECK(s.real() == Rational(1, 2));
  CHECK(s.imag() == Rational(3, 4));
  CHECK(parse_scalar("7", RingSpec::prime(5)) == Scalar::residue(2, 5));
  CHECK(parse_scalar("-3", RingSpec::prime(5)) == Scalar::residue(2, 5));
  CHECK(parse_scalar("-2/4", Qi) == Scalar::gaussian(Rational(-1, 2)));
  CHECK(parse_scalar("3i", Qi) == q(0, 3));
  CHECK(parse_scalar("-1/3i", Qi) == Scalar::gaussian(0, Rational(-1, 3)));
  CHECK(parse_scalar("-1-1i", Qi) == q(-1, -1));
  CHECK(parse_scalar("12345678901234567890/2", Qi).real() ==
        Rational(Integer("6172839450617283945")));
}

TEST_CASE("parse_scalar rejects malformed text") {
  CHECK_THROWS_AS(parse_scalar("", Qi), ParseError);
  CHECK_THROWS_AS(parse_scalar("i", Qi), ParseError);
  CHECK_THROWS_AS(parse_scalar("1/0", Qi), ParseError);
  CHECK_THROWS_AS(parse_scalar("1/-2", Qi), ParseError);
  CHECK_THROWS_AS(parse_scalar("1+-2i", Qi), ParseError);
  CHECK_THROWS_AS(parse_scalar("abc", Qi), ParseError);
  CHECK_THROWS_AS(parse_scalar("1.5", Qi), ParseError);
  CHECK_THROWS_AS(parse_scalar("1/2", RingSpec::prime(5)), ParseError);
  CHECK_THROWS_AS(parse_scalar("2i", RingSpec::prime(5)), ParseError);
}

TEST_CASE("RingSpec::prime validates the modulus") {
  CHECK_NOTHROW(RingSpec::prime(2));
  CHECK_NOTHROW(RingSpec::prime(97));
  CHECK_THROWS_AS(RingSpec::prime(1), ParseError);
  CHECK_THROWS_AS(RingSpec::prime(9), ParseError);
  CHECK_THROWS_AS(RingSpec::prime(101), ParseError);
}

TEST_CASE("format_scalar produces canonical text") {
  CHECK(format_scalar(parse_scalar("1/2+3/4i", Qi)) == "1/2+3/4i");
  CHECK(format_scalar(parse_scalar("1/2-3/4i", Qi)) == "1/2-3/4i");
  CHECK(format_scalar(q(0, 1)) == "1i");
  CHECK(format_scalar(q(0, -1)) == "-1i");
  CHECK(format_scalar(q(0)) == "0");
  CHECK(format_scalar(Scalar::residue(9, 7)) == "2");
}

TEST_CASE("conj examples") {
  CHECK(parse_scalar("1/2+3/4i", Qi).conj() == parse_scalar("1/2-3/4i", Qi));
  CHECK(Scalar::residue(5, 7).conj() == Scalar::residue(5, 7));
  CHECK(Scalar::zero(Qi).conj() == Scalar::zero(Qi));
}

TEST_CASE("mixing rings is rejected") {
  CHECK_THROWS_AS(Scalar::residue(1, 5) + Scalar::residue(1, 7), ShapeError);
  CHECK_THROWS_AS(Scalar::residue(1, 5) * q(1), ShapeError);
  CHECK_THROWS_AS(Scalar::zero(Qi).inverse(), std::domain_error);
}

TEST_CASE("field axioms and involution laws on random triples") {
  Rng rng(20240521);
  for (const RingSpec ring : {Qi, RingSpec::prime(2), RingSpec::prime(3), RingSpec::prime(97)}) {
    for (int trial = 0; trial < 300; ++trial) {
      const Scalar x = random_scalar(rng, ring, 7);
      const Scalar y = random_scalar(rng, ring, 7);
      const Scalar z = random_scalar(rng, ring, 7);
      CHECK((x + y) + z == x + (y + z));
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK(x + y == y + x);
      CHECK(x * y == y * x);
      CHECK(x - x == Scalar::zero(ring));
      CHECK(x * Scalar::one(ring) == x);
      if (!x.is_zero()) CHECK(x * x.inverse() == Scalar::one(ring));
      CHECK(x.conj().conj() == x);
      CHECK((x + y).conj() == x.conj() + y.conj());
      CHECK((x * y).conj() == x.conj() * y.conj());
      CHECK(parse_scalar(format_scalar(x), ring) == x);
    }
  }
}
