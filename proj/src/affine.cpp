#include "starlab/affine.hpp"

#include <string>

#include "elimination.hpp"
#include "starlab/errors.hpp"

namespace starlab {

namespace {

void check_shapes(const RingSpec& ring, std::size_t rows, std::size_t cols,
                  const LinearConstraint& c) {
  for (const auto& t : c.terms) {
    const std::size_t xr = t.adjoint ? cols : rows;
    const std::size_t xc = t.adjoint ? rows : cols;
    if (!(t.left.ring() == ring) || !(t.right.ring() == ring) || !(c.rhs.ring() == ring))
      throw ShapeError("solve_affine: coefficient ring mismatch");
    if (t.left.cols() != xr || t.right.rows() != xc || t.left.rows() != c.rhs.rows() ||
        t.right.cols() != c.rhs.cols())
      throw ShapeError("solve_affine: term of shape (" + std::to_string(t.left.rows()) + "x" +
                       std::to_string(t.left.cols()) + ")·X(" + std::to_string(xr) + "x" +
                       std::to_string(xc) + ")·(" + std::to_string(t.right.rows()) + "x" +
                       std::to_string(t.right.cols()) + ") does not match rhs " +
                       std::to_string(c.rhs.rows()) + "x" + std::to_string(c.rhs.cols()));
  }
}

}  // namespace

AffineSolutionSet solve_affine(const RingSpec& ring, std::size_t rows, std::size_t cols,
                               std::span<const LinearConstraint> constraints) {
  bool split = false;
  for (const auto& c : constraints) {
    check_shapes(ring, rows, cols, c);
    for (const auto& t : c.terms) split |= t.adjoint && !ring.is_finite();
  }

  const std::size_t cells = rows * cols;
  const std::size_t unknowns = split ? 2 * cells : cells;
  std::size_t equations = 0;
  for (const auto& c : constraints) equations += c.rhs.rows() * c.rhs.cols() * (split ? 2 : 1);

  // Over Q(i) with a split, all coefficients are real and stored as Q(i)
  // scalars with zero imaginary part.
  const Scalar zero = Scalar::zero(ring);
  detail::Dense sys{equations, unknowns + 1, std::vector<Scalar>(equations * (unknowns + 1), zero)};

  std::size_t eq = 0;
  for (const auto& c : constraints) {
    for (std::size_t i = 0; i < c.rhs.rows(); ++i) {
      for (std::size_t j = 0; j < c.rhs.cols(); ++j) {
        const std::size_t re_row = eq;
        const std::size_t im_row = eq + 1;
        for (const auto& t : c.terms) {
          // (L X R)_{ij} = sum_{k,l} L_{ik} X_{kl} R_{lj};
          // (L X* R)_{ij} = sum_{k,l} L_{ik} conj(X_{lk}) R_{lj}.
          for (std::size_t k = 0; k < t.left.cols(); ++k) {
            const Scalar& lik = t.left(i, k);
            if (lik.is_zero()) continue;
            for (std::size_t l = 0; l < t.right.rows(); ++l) {
              const Scalar& rlj = t.right(l, j);
              if (rlj.is_zero()) continue;
              const Scalar kappa = lik * rlj;
              const std::size_t cell = t.adjoint ? l * cols + k : k * cols + l;
              if (!split) {
                sys.at(eq, cell) += kappa;
                continue;
              }
              const Scalar re = Scalar::gaussian(kappa.real());
              const Scalar im = Scalar::gaussian(kappa.imag());
              const std::size_t u = 2 * cell;
              const std::size_t v = u + 1;
              if (!t.adjoint) {
                // kappa (u + iv)
                sys.at(re_row, u) += re;
                sys.at(re_row, v) -= im;
                sys.at(im_row, u) += im;
                sys.at(im_row, v) += re;
              } else {
                // kappa (u - iv)
                sys.at(re_row, u) += re;
                sys.at(re_row, v) += im;
                sys.at(im_row, u) += im;
                sys.at(im_row, v) -= re;
              }
            }
          }
        }
        if (split) {
          sys.at(re_row, unknowns) = Scalar::gaussian(c.rhs(i, j).real());
          sys.at(im_row, unknowns) = Scalar::gaussian(c.rhs(i, j).imag());
          eq += 2;
        } else {
          sys.at(eq, unknowns) = c.rhs(i, j);
          eq += 1;
        }
      }
    }
  }

  const auto pivots = detail::gauss_jordan(sys, unknowns, nullptr);

  AffineSolutionSet out;
  out.real_coefficients = split;
  out.particular = Mat(ring, rows, cols);
  // Inconsistent iff some row reduces to 0 = nonzero.
  for (std::size_t r = pivots.size(); r < sys.rows; ++r)
    if (!sys.at(r, unknowns).is_zero()) return out;
  out.empty = false;

  // Assemble a Q(i) cell value from its (u, v) unknown values.
  const auto write_cell = [&](Mat& x, std::size_t var, const Scalar& value) {
    if (!split) {
      x(var / cols, var % cols) += value;
      return;
    }
    const std::size_t cell = var / 2;
    const Scalar part = (var % 2 == 0) ? value : value * Scalar::gaussian(0, 1);
    x(cell / cols, cell % cols) += part;
  };

  std::vector<bool> is_pivot(unknowns, false);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    is_pivot[pivots[r]] = true;
    write_cell(out.particular, pivots[r], sys.at(r, unknowns));
  }
  for (std::size_t free = 0; free < unknowns; ++free) {
    if (is_pivot[free]) continue;
    Mat dir(ring, rows, cols);
    write_cell(dir, free, Scalar::one(ring));
    for (std::size_t r = 0; r < pivots.size(); ++r)
      if (!sys.at(r, free).is_zero()) write_cell(dir, pivots[r], -sys.at(r, free));
    out.basis.push_back(std::move(dir));
  }
  return out;
}

Mat AffineSolutionSet::point(std::span<const Scalar> coeffs) const {
  if (empty) throw PreconditionError("point() on an empty solution set");
  if (coeffs.size() != basis.size()) throw ShapeError("point(): coefficient count mismatch");
  Mat x = particular;
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (!coeffs[k].is_zero()) x += coeffs[k] * basis[k];
  return x;
}

Mat AffineSolutionSet::sample(Rng& rng) const {
  if (empty) throw PreconditionError("sample() on an empty solution set");
  const RingSpec& ring = particular.ring();
  std::vector<Scalar> coeffs;
  coeffs.reserve(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (ring.is_finite()) {
      coeffs.push_back(Scalar::residue(rng.uniform(0, ring.p - 1), ring.p));
    } else if (real_coefficients) {
      coeffs.push_back(Scalar::gaussian(static_cast<long>(rng.uniform(-2, 2))));
    } else {
      coeffs.push_back(Scalar::gaussian(static_cast<long>(rng.uniform(-2, 2)),
                                        static_cast<long>(rng.uniform(-2, 2))));
    }
  }
  return point(coeffs);
}

void AffineSolutionSet::for_each(const std::function<void(const Mat&)>& visit,
                                 std::uint64_t cap) const {
  if (empty) return;
  const RingSpec& ring = particular.ring();
  if (!ring.is_finite()) throw PreconditionError("for_each requires a prime field");
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (total > cap / ring.p) throw PreconditionError("solution set exceeds enumeration cap");
    total *= ring.p;
  }
  std::vector<Scalar> coeffs(basis.size(), Scalar::zero(ring));
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rest = idx;
    for (auto& c : coeffs) {
      c = Scalar::residue(static_cast<long long>(rest % ring.p), ring.p);
      rest /= ring.p;
    }
    visit(point(coeffs));
  }
}

Mat apply(const LinearConstraint& c, const Mat& x) {
  Mat sum = Mat::zero(c.rhs.ring(), c.rhs.rows(), c.rhs.cols());
  for (const auto& t : c.terms) sum += t.left * (t.adjoint ? adjoint(x) : x) * t.right;
  return sum;
}

bool satisfies_all(std::span<const LinearConstraint> constraints, const Mat& x) {
  for (const auto& c : constraints)
    if (!(apply(c, x) == c.rhs)) return false;
  return true;
}

}  // namespace starlab
