#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace starlab {

using Rational = mpq_class;
using Integer = mpz_class;

enum class RingKind { gaussian_rational, prime_field };

/// Coefficient ring of a matrix: Q(i) with complex conjugation, or Z_p with
/// the identity involution (2 <= p <= 97, p prime).
struct RingSpec {
  RingKind kind = RingKind::gaussian_rational;
  std::uint32_t p = 0;

  static RingSpec gaussian() { return {}; }
  /// Throws ParseError if p is not a prime in [2, 97].
  static RingSpec prime(std::uint32_t p);

  bool is_finite() const { return kind == RingKind::prime_field; }

  friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

std::string to_string(const RingSpec& ring);

/// An element of Q(i) or Z_p, always in canonical form: rationals in lowest
/// terms with positive denominator, residues in [0, p). Equality is therefore
/// structural.
class Scalar {
 public:
  /// Gaussian-rational zero.
  Scalar() = default;

  static Scalar zero(const RingSpec& ring);
  static Scalar one(const RingSpec& ring);
  static Scalar from_int(long value, const RingSpec& ring);
  static Scalar gaussian(Rational re, Rational im = 0);
  static Scalar residue(long long value, std::uint32_t p);

  RingSpec ring() const;
  bool is_zero() const;

  /// Real and imaginary parts (imaginary part is zero over Z_p; the real part is
  /// the residue).
  Rational real() const;
  Rational imag() const;
  /// Residue of a prime-field element. Throws ShapeError on Q(i).
  std::uint32_t residue_value() const;

  Scalar conj() const;
  /// |s|^2 for Q(i). Throws ShapeError on Z_p, which carries no norm.
  Rational norm2() const;
  /// Multiplicative inverse; throws std::domain_error on zero.
  Scalar inverse() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs) { return *this *= rhs.inverse(); }

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  struct Gauss {
    Rational re, im;
  };
  struct Residue {
    std::uint32_t value;
    std::uint32_t p;
  };

  explicit Scalar(Gauss g) : v_(std::move(g)) {}
  explicit Scalar(Residue r) : v_(r) {}

  std::variant<Gauss, Residue> v_{Gauss{}};
};

/// Parses the scalar wire grammar:
///   rat      ::= int | int "/" posint
///   gaussian ::= rat | rat ("+"|"-") urat "i" | rat "i"
///   prime    ::= int                       (reduced mod p)
/// Throws ParseError on malformed text or a zero denominator.
Scalar parse_scalar(std::string_view text, const RingSpec& ring);

/// Canonical text; parse_scalar(format_scalar(s), ring) == s.
std::string format_scalar(const Scalar& s);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace starlab
