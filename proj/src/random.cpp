#include "starlab/random.hpp"

#include <algorithm>

namespace starlab {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

Rng::Rng(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

Rng Rng::split(std::string_view name) const {
  return Rng(splitmix64(seed_ ^ fnv1a(name)));
}

Rng Rng::split(std::uint64_t index) const {
  return Rng(splitmix64(splitmix64(seed_) + index));
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t draw;
  do draw = next();
  while (draw >= limit);
  return lo + static_cast<std::int64_t>(draw % span);
}

Scalar random_scalar(Rng& rng, const RingSpec& ring, unsigned bound) {
  if (ring.is_finite()) return Scalar::residue(rng.uniform(0, ring.p - 1), ring.p);
  const std::int64_t b = bound;
  const std::int64_t d = std::max<std::int64_t>(b, 1);
  const auto part = [&] {
    const std::int64_t num = rng.uniform(-b, b);
    const std::int64_t den = rng.uniform(1, d);
    return Rational(static_cast<long>(num), static_cast<unsigned long>(den));
  };
  Rational re = part();
  Rational im = part();
  return Scalar::gaussian(std::move(re), std::move(im));
}

Mat random_matrix(std::size_t rows, std::size_t cols, const RingSpec& ring, Rng& rng,
                  unsigned bound) {
  Mat m(ring, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_scalar(rng, ring, bound);
  return m;
}

Mat random_matrix(std::size_t rows, std::size_t cols, const RingSpec& ring, std::uint64_t seed,
                  unsigned bound) {
  Rng rng(seed);
  return random_matrix(rows, cols, ring, rng, bound);
}

Mat random_matrix_of_rank(std::size_t rows, std::size_t cols, std::size_t inner,
                          const RingSpec& ring, Rng& rng, unsigned bound) {
  if (inner == 0) return Mat::zero(ring, rows, cols);
  return random_matrix(rows, inner, ring, rng, bound) * random_matrix(inner, cols, ring, rng, bound);
}

Mat random_mixed_rank(std::size_t rows, std::size_t cols, const RingSpec& ring, Rng& rng,
                      unsigned bound) {
  const auto inner = static_cast<std::size_t>(rng.uniform(0, std::min(rows, cols)));
  return random_matrix_of_rank(rows, cols, inner, ring, rng, bound);
}

}  // namespace starlab
