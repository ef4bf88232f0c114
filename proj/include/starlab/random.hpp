#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>

#include "starlab/matrix.hpp"

namespace starlab {

/// Seeded generator with named substreams. Draws are platform independent
/// (no std::*_distribution, whose output is implementation defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  /// Independent stream derived from this generator's seed and `name`;
  /// does not advance this generator.
  Rng split(std::string_view name) const;
  Rng split(std::uint64_t index) const;

  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool coin() { return (next() >> 63) != 0; }

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

/// Random scalar. Over Q(i) the real and imaginary parts are num/den with
/// num in [-bound, bound] and den in [1, max(bound, 1)].
Scalar random_scalar(Rng& rng, const RingSpec& ring, unsigned bound);

Mat random_matrix(std::size_t rows, std::size_t cols, const RingSpec& ring, Rng& rng,
                  unsigned bound);
Mat random_matrix(std::size_t rows, std::size_t cols, const RingSpec& ring, std::uint64_t seed,
                  unsigned bound);

/// Product of random rows x inner and inner x cols factors, so rank <= inner.
Mat random_matrix_of_rank(std::size_t rows, std::size_t cols, std::size_t inner,
                          const RingSpec& ring, Rng& rng, unsigned bound);

/// Random matrix whose rank bound is itself drawn from [0, min(rows, cols)];
/// inner dimension 0 yields the zero matrix.
Mat random_mixed_rank(std::size_t rows, std::size_t cols, const RingSpec& ring, Rng& rng,
                      unsigned bound);

}  // namespace starlab
