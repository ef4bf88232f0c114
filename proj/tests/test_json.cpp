#include "doctest.h"

#include <cstdio>
#include <filesystem>

#include "starlab/errors.hpp"
#include "starlab/json_io.hpp"
#include "starlab/random.hpp"

using namespace starlab;

TEST_CASE("matrix JSON layout") {
  const Mat a = Mat::parse(RingSpec::gaussian(), {{"1/2+1i", "0"}, {"-3", "2i"}});
  const Json j = matrix_to_json(a);
  CHECK(j.dump() ==
        R"({"ring":{"kind":"gaussian_rational"},"rows":2,"cols":2,)"
        R"("entries":[["1/2+1i","0"],["-3","2i"]]})");
  const Mat z = Mat::of(RingSpec::prime(5), {{4, 1}});
  CHECK(matrix_to_json(z).dump() ==
        R"({"ring":{"kind":"prime_field","p":5},"rows":1,"cols":2,"entries":[["4","1"]]})");
}

TEST_CASE("round trip through text") {
  Rng rng(7);
  for (const RingSpec ring : {RingSpec::gaussian(), RingSpec::prime(2), RingSpec::prime(7)}) {
    for (int t = 0; t < 20; ++t) {
      const Mat a = random_matrix(1 + t % 3, 1 + t % 4, ring, rng, 5);
      const Mat back = matrix_from_json(parse_json(matrix_to_json(a).dump(2)));
      CHECK(back == a);
      CHECK(back.ring() == a.ring());
    }
  }
}

TEST_CASE("integer entries are accepted") {
  const Mat a = matrix_from_json(parse_json(
      R"({"ring":{"kind":"prime_field","p":3},"rows":1,"cols":2,"entries":[[4,"-1"]]})"));
  CHECK(a == Mat::of(RingSpec::prime(3), {{1, 2}}));
}

TEST_CASE("malformed documents") {
  CHECK_THROWS_AS(parse_json("{"), ParseError);
  CHECK_THROWS_AS(matrix_from_json(parse_json("[]")), ParseError);
  CHECK_THROWS_AS(matrix_from_json(parse_json(R"({"ring":{"kind":"x"},"rows":1,"cols":1,"entries":[["1"]]})")),
                  ParseError);
  CHECK_THROWS_AS(matrix_from_json(parse_json(
                      R"({"ring":{"kind":"prime_field","p":4},"rows":1,"cols":1,"entries":[["1"]]})")),
                  ParseError);
  CHECK_THROWS_AS(matrix_from_json(parse_json(
                      R"({"ring":{"kind":"gaussian_rational"},"rows":2,"cols":1,"entries":[["1"]]})")),
                  ShapeError);
  CHECK_THROWS_AS(matrix_from_json(parse_json(
                      R"({"ring":{"kind":"gaussian_rational"},"rows":1,"cols":2,"entries":[["1","x"]]})")),
                  ParseError);
  CHECK_THROWS_AS(matrix_from_json(parse_json(
                      R"({"ring":{"kind":"gaussian_rational"},"rows":1,"cols":1,"entries":[[true]]})")),
                  ParseError);
  CHECK_THROWS_AS(load_matrix("/nonexistent/a.json"), ParseError);
}

TEST_CASE("load_matrix reads files and inline text") {
  const Mat a = Mat::of(RingSpec::prime(2), {{1, 0}, {1, 1}});
  const auto path = (std::filesystem::temp_directory_path() / "starlab_test_json.json").string();
  write_file(path, matrix_to_json(a).dump());
  CHECK(load_matrix(path) == a);
  CHECK(load_matrix("  " + matrix_to_json(a).dump()) == a);
  std::remove(path.c_str());
}

TEST_CASE("ring names") {
  CHECK(parse_ring_name("Q(i)") == RingSpec::gaussian());
  CHECK(parse_ring_name("gaussian") == RingSpec::gaussian());
  CHECK(parse_ring_name("Z_5") == RingSpec::prime(5));
  CHECK(parse_ring_name("z3") == RingSpec::prime(3));
  CHECK(parse_ring_name("7") == RingSpec::prime(7));
  CHECK_THROWS_AS(parse_ring_name("Z_6"), ParseError);
  CHECK_THROWS_AS(parse_ring_name("R"), ParseError);
}
