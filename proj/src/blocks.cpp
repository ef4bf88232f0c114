#include "starlab/blocks.hpp"

#include "starlab/affine.hpp"
#include "starlab/errors.hpp"

namespace starlab {

namespace {

Mat I(const RingSpec& ring, std::size_t n) { return Mat::identity(ring, n); }

void require_valid(const IdempotentDecomposition& dec, const char* who) {
  const ValidationReport r = validate(dec);
  if (!r.valid())
    throw PreconditionError(std::string(who) + ": invalid decomposition (" + r.violations() + ")");
}

bool same_parts(const IdempotentDecomposition& x, const IdempotentDecomposition& y) {
  return x.parts == y.parts;
}

IdempotentDecomposition adjoint_decomp(const IdempotentDecomposition& d) {
  IdempotentDecomposition out{{}, d.self_adjoint};
  for (const Mat& e : d.parts) out.parts.push_back(adjoint(e));
  return out;
}

void require_idempotent(const Mat& e, const char* who, const char* name) {
  if (!e.is_square() || !is_idempotent(e))
    throw PreconditionError(std::string(who) + ": " + name + " is not idempotent");
}

}  // namespace

IdempotentDecomposition IdempotentDecomposition::split(const Mat& e, bool self_adjoint) {
  return {{e, I(e.ring(), e.rows()) - e}, self_adjoint};
}

IdempotentDecomposition IdempotentDecomposition::trivial(const RingSpec& ring, std::size_t n) {
  return {{I(ring, n)}, true};
}

ValidationReport validate(const IdempotentDecomposition& dec) {
  ValidationReport r;
  if (dec.parts.empty()) {
    r.checks.push_back({"nonempty", false});
    return r;
  }
  const Mat& first = dec.parts.front();
  bool shapes = first.is_square();
  for (const Mat& e : dec.parts)
    shapes = shapes && e.rows() == first.rows() && e.cols() == first.rows() && e.ring() == first.ring();
  r.checks.push_back({"square parts of one size", shapes});
  if (!shapes) return r;

  const std::size_t k = dec.parts.size();
  Mat sum = Mat::zero(first.ring(), first.rows(), first.rows());
  r.all_self_adjoint = true;
  for (std::size_t i = 0; i < k; ++i) {
    const Mat& e = dec.parts[i];
    const std::string ei = "e" + std::to_string(i + 1);
    r.checks.push_back({ei + "^2 = " + ei, is_idempotent(e)});
    for (std::size_t j = 0; j < k; ++j)
      if (i != j)
        r.checks.push_back({ei + " e" + std::to_string(j + 1) + " = 0", (e * dec.parts[j]).is_zero()});
    const bool sa = is_self_adjoint(e);
    r.all_self_adjoint = r.all_self_adjoint && sa;
    if (dec.self_adjoint) r.checks.push_back({ei + "* = " + ei, sa});
    sum += e;
  }
  r.checks.push_back({"sum = 1", sum == I(first.ring(), first.rows())});
  return r;
}

BlockView blocks(const Mat& x, const IdempotentDecomposition& rd,
                 const IdempotentDecomposition& cd) {
  require_valid(rd, "blocks");
  require_valid(cd, "blocks");
  if (rd.n() != x.rows() || cd.n() != x.cols())
    throw ShapeError("blocks: decomposition sizes do not match the matrix");
  BlockView v{rd, cd, {}};
  for (const Mat& e : rd.parts) {
    auto& row = v.blocks.emplace_back();
    for (const Mat& f : cd.parts) row.push_back(e * x * f);
  }
  return v;
}

Mat assemble(const BlockView& view) {
  if (view.blocks.empty() || view.blocks.front().empty())
    throw ShapeError("assemble: empty block view");
  Mat sum = Mat::zero(view.blocks[0][0].ring(), view.blocks[0][0].rows(), view.blocks[0][0].cols());
  for (const auto& row : view.blocks)
    for (const Mat& b : row) sum += b;
  return sum;
}

BlockView block_product(const BlockView& x, const BlockView& z) {
  if (!same_parts(x.col_decomp, z.row_decomp))
    throw PreconditionError("block_product: inner decompositions differ");
  BlockView out{x.row_decomp, z.col_decomp, {}};
  const std::size_t inner = x.col_decomp.parts.size();
  for (std::size_t i = 0; i < x.blocks.size(); ++i) {
    auto& row = out.blocks.emplace_back();
    for (std::size_t j = 0; j < z.blocks.front().size(); ++j) {
      Mat s = x.blocks[i][0] * z.blocks[0][j];
      for (std::size_t l = 1; l < inner; ++l) s += x.blocks[i][l] * z.blocks[l][j];
      row.push_back(std::move(s));
    }
  }
  return out;
}

BlockView block_adjoint(const BlockView& x) {
  BlockView out{adjoint_decomp(x.col_decomp), adjoint_decomp(x.row_decomp), {}};
  const std::size_t rows = x.blocks.size();
  const std::size_t cols = x.blocks.front().size();
  out.blocks.assign(cols, std::vector<Mat>(rows));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out.blocks[j][i] = adjoint(x.blocks[i][j]);
  return out;
}

std::optional<Mat> pq_inverse(const Mat& a, const Mat& p, const Mat& q) {
  require_idempotent(p, "pq_inverse", "p");
  require_idempotent(q, "pq_inverse", "q");
  if (p.rows() != a.rows() || q.rows() != a.cols())
    throw ShapeError("pq_inverse: p must be m x m and q n x n for m x n a");
  if (!(p * a * q == a)) return std::nullopt;
  const RingSpec& ring = a.ring();
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  const std::vector<LinearConstraint> cs{
      {{x_term(I(ring, n), I(ring, m)), x_term(-q, p)}, Mat::zero(ring, n, m)},
      {{x_term(a, I(ring, m))}, p},
      {{x_term(I(ring, n), a)}, q},
  };
  const auto set = solve_affine(ring, n, m, cs);
  if (set.empty) return std::nullopt;
  if (!set.basis.empty())
    throw InvariantViolation("pq_inverse: solution not unique for a = " + to_string(a));
  const Mat& x = set.particular;
  if (!(a * x == p && x * a == q && q * x * p == x))
    throw InvariantViolation("pq_inverse: solver output fails re-verification");
  return x;
}

Mat solve_in_coset(const Mat& a, const Mat& p, const Mat& q, const Mat& b, Side side) {
  const auto inv = pq_inverse(a, p, q);
  if (!inv) throw PreconditionError("solve_in_coset: a is not (p,q)-invertible");
  const RingSpec& ring = a.ring();
  Mat x;
  AffineSolutionSet set;
  if (side == Side::left) {
    if (b.rows() != a.rows() || !(p * b == b))
      throw PreconditionError("solve_in_coset: b is not in pR");
    x = *inv * b;
    const std::size_t k = b.cols();
    const std::vector<LinearConstraint> cs{
        {{x_term(a, I(ring, k))}, b},
        {{x_term(I(ring, a.cols()), I(ring, k)), x_term(-q, I(ring, k))}, Mat::zero(ring, a.cols(), k)},
    };
    set = solve_affine(ring, a.cols(), k, cs);
  } else {
    if (b.cols() != a.cols() || !(b * q == b))
      throw PreconditionError("solve_in_coset: b is not in Rq");
    x = b * *inv;
    const std::size_t k = b.rows();
    const std::vector<LinearConstraint> cs{
        {{x_term(I(ring, k), a)}, b},
        {{x_term(I(ring, k), I(ring, a.rows())), x_term(-I(ring, k), p)}, Mat::zero(ring, k, a.rows())},
    };
    set = solve_affine(ring, k, a.rows(), cs);
  }
  if (set.empty || !set.basis.empty() || !(set.particular == x))
    throw InvariantViolation("solve_in_coset: coset solution is not the unique " +
                             std::string(to_string(side)) + " solution");
  return x;
}

}  // namespace starlab
