#include "starlab/scalar.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "starlab/errors.hpp"

namespace starlab {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

[[noreturn]] void ring_mismatch() {
  throw ShapeError("scalar ring mismatch");
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// int ::= ["-"] digits
Integer parse_int(std::string_view s, std::string_view whole) {
  std::string_view digits = s;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (!all_digits(digits))
    throw ParseError("malformed scalar '" + std::string(whole) + "'");
  return Integer(std::string(s));
}

Rational parse_rat(std::string_view s, std::string_view whole) {
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(s, whole));
  const Integer num = parse_int(s.substr(0, slash), whole);
  const std::string_view den_text = s.substr(slash + 1);
  if (!all_digits(den_text))
    throw ParseError("malformed scalar '" + std::string(whole) + "'");
  const Integer den(std::string{den_text});
  if (den == 0)
    throw ParseError("zero denominator in '" + std::string(whole) + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string format_rat(const Rational& r) {
  return r.get_str();
}

}  // namespace

RingSpec RingSpec::prime(std::uint32_t p) {
  if (p > 97 || !is_prime(p))
    throw ParseError("prime field modulus must be a prime in [2, 97], got " +
                     std::to_string(p));
  return {RingKind::prime_field, p};
}

std::string to_string(const RingSpec& ring) {
  if (ring.kind == RingKind::gaussian_rational) return "Q(i)";
  return "Z_" + std::to_string(ring.p);
}

Scalar Scalar::zero(const RingSpec& ring) {
  return from_int(0, ring);
}

Scalar Scalar::one(const RingSpec& ring) {
  return from_int(1, ring);
}

Scalar Scalar::from_int(long value, const RingSpec& ring) {
  if (ring.kind == RingKind::prime_field) return residue(value, ring.p);
  return gaussian(Rational(value), Rational(0));
}

Scalar Scalar::gaussian(Rational re, Rational im) {
  re.canonicalize();
  im.canonicalize();
  return Scalar(Gauss{std::move(re), std::move(im)});
}

Scalar Scalar::residue(long long value, std::uint32_t p) {
  const long long m = static_cast<long long>(p);
  long long r = value % m;
  if (r < 0) r += m;
  return Scalar(Residue{static_cast<std::uint32_t>(r), p});
}

RingSpec Scalar::ring() const {
  if (const auto* r = std::get_if<Residue>(&v_)) return {RingKind::prime_field, r->p};
  return RingSpec::gaussian();
}

bool Scalar::is_zero() const {
  if (const auto* r = std::get_if<Residue>(&v_)) return r->value == 0;
  const auto& g = std::get<Gauss>(v_);
  return sgn(g.re) == 0 && sgn(g.im) == 0;
}

Rational Scalar::real() const {
  if (const auto* r = std::get_if<Residue>(&v_)) return Rational(r->value);
  return std::get<Gauss>(v_).re;
}

Rational Scalar::imag() const {
  if (std::holds_alternative<Residue>(v_)) return Rational(0);
  return std::get<Gauss>(v_).im;
}

std::uint32_t Scalar::residue_value() const {
  if (const auto* r = std::get_if<Residue>(&v_)) return r->value;
  throw ShapeError("residue_value on a Q(i) scalar");
}

Scalar Scalar::conj() const {
  if (std::holds_alternative<Residue>(v_)) return *this;
  const auto& g = std::get<Gauss>(v_);
  return Scalar(Gauss{g.re, -g.im});
}

Rational Scalar::norm2() const {
  if (std::holds_alternative<Residue>(v_))
    throw ShapeError("norm2 is only defined over Q(i)");
  const auto& g = std::get<Gauss>(v_);
  return Rational(g.re * g.re + g.im * g.im);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero scalar");
  if (const auto* r = std::get_if<Residue>(&v_)) {
    // Extended Euclid on small moduli.
    long long t = 0, new_t = 1, rem = r->p, new_rem = r->value;
    while (new_rem != 0) {
      const long long quot = rem / new_rem;
      t = std::exchange(new_t, t - quot * new_t);
      rem = std::exchange(new_rem, rem - quot * new_rem);
    }
    return residue(t, r->p);
  }
  const auto& g = std::get<Gauss>(v_);
  Rational n = g.re * g.re + g.im * g.im;
  return Scalar(Gauss{Rational(g.re / n), Rational(-g.im / n)});
}

Scalar Scalar::operator-() const {
  if (const auto* r = std::get_if<Residue>(&v_))
    return Scalar(Residue{r->value == 0 ? 0 : r->p - r->value, r->p});
  const auto& g = std::get<Gauss>(v_);
  return Scalar(Gauss{-g.re, -g.im});
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  if (auto* r = std::get_if<Residue>(&v_)) {
    const auto* o = std::get_if<Residue>(&rhs.v_);
    if (o == nullptr || o->p != r->p) ring_mismatch();
    r->value = (r->value + o->value) % r->p;
    return *this;
  }
  const auto* o = std::get_if<Gauss>(&rhs.v_);
  if (o == nullptr) ring_mismatch();
  auto& g = std::get<Gauss>(v_);
  g.re += o->re;
  g.im += o->im;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  return *this += -rhs;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  if (auto* r = std::get_if<Residue>(&v_)) {
    const auto* o = std::get_if<Residue>(&rhs.v_);
    if (o == nullptr || o->p != r->p) ring_mismatch();
    r->value = static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(r->value) * o->value) % r->p);
    return *this;
  }
  const auto* o = std::get_if<Gauss>(&rhs.v_);
  if (o == nullptr) ring_mismatch();
  auto& g = std::get<Gauss>(v_);
  if (sgn(g.im) == 0 && sgn(o->im) == 0) {
    g.re *= o->re;
    return *this;
  }
  Rational re = g.re * o->re - g.im * o->im;
  Rational im = g.re * o->im + g.im * o->re;
  g.re = std::move(re);
  g.im = std::move(im);
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.v_.index() != b.v_.index()) return false;
  if (const auto* r = std::get_if<Scalar::Residue>(&a.v_)) {
    const auto& o = std::get<Scalar::Residue>(b.v_);
    return r->p == o.p && r->value == o.value;
  }
  const auto& g = std::get<Scalar::Gauss>(a.v_);
  const auto& o = std::get<Scalar::Gauss>(b.v_);
  return g.re == o.re && g.im == o.im;
}

Scalar parse_scalar(std::string_view text, const RingSpec& ring) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw ParseError("empty scalar");

  if (ring.kind == RingKind::prime_field) {
    const Integer v = parse_int(s, text);
    Integer r = v % ring.p;
    if (r < 0) r += ring.p;
    return Scalar::residue(r.get_si(), ring.p);
  }

  if (s.back() != 'i') return Scalar::gaussian(parse_rat(s, text), 0);

  std::string_view body = s.substr(0, s.size() - 1);
  // The separating sign is the last '+'/'-' past the first character.
  const auto split = body.find_last_of("+-");
  if (split == std::string_view::npos || split == 0) return Scalar::gaussian(0, parse_rat(body, text));
  std::string_view im_text = body.substr(split + 1);
  if (im_text.empty() || !std::isdigit(static_cast<unsigned char>(im_text.front())))
    throw ParseError("malformed scalar '" + std::string(text) + "'");
  Rational re = parse_rat(body.substr(0, split), text);
  Rational im = parse_rat(im_text, text);
  if (body[split] == '-') im = -im;
  return Scalar::gaussian(std::move(re), std::move(im));
}

std::string format_scalar(const Scalar& s) {
  if (s.ring().kind == RingKind::prime_field) return std::to_string(s.residue_value());
  const Rational re = s.real();
  const Rational im = s.imag();
  if (sgn(im) == 0) return format_rat(re);
  if (sgn(re) == 0) return format_rat(im) + "i";
  if (sgn(im) > 0) return format_rat(re) + "+" + format_rat(im) + "i";
  return format_rat(re) + "-" + format_rat(Rational(-im)) + "i";
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << format_scalar(s);
}

}  // namespace starlab
