#include "starlab/matrix.hpp"

#include <ostream>
#include <sstream>

#include "elimination.hpp"
#include "starlab/errors.hpp"

namespace starlab {

namespace detail {

std::vector<std::size_t> gauss_jordan(Dense& a, std::size_t pivot_cols, Dense* track) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  const auto swap_rows = [](Dense& d, std::size_t r1, std::size_t r2) {
    for (std::size_t j = 0; j < d.cols; ++j) std::swap(d.at(r1, j), d.at(r2, j));
  };
  for (std::size_t col = 0; col < pivot_cols && row < a.rows; ++col) {
    std::size_t pr = row;
    while (pr < a.rows && a.at(pr, col).is_zero()) ++pr;
    if (pr == a.rows) continue;
    if (pr != row) {
      swap_rows(a, pr, row);
      if (track) swap_rows(*track, pr, row);
    }
    const Scalar inv = a.at(row, col).inverse();
    for (std::size_t j = col; j < a.cols; ++j) a.at(row, j) *= inv;
    if (track)
      for (std::size_t j = 0; j < track->cols; ++j) track->at(row, j) *= inv;
    for (std::size_t r = 0; r < a.rows; ++r) {
      if (r == row || a.at(r, col).is_zero()) continue;
      const Scalar f = a.at(r, col);
      for (std::size_t j = col; j < a.cols; ++j) {
        if (!a.at(row, j).is_zero()) a.at(r, j) -= f * a.at(row, j);
      }
      if (track)
        for (std::size_t j = 0; j < track->cols; ++j)
          if (!track->at(row, j).is_zero()) track->at(r, j) -= f * track->at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace detail

namespace {

detail::Dense to_dense(const Mat& a) {
  detail::Dense d{a.rows(), a.cols(), {a.entries().begin(), a.entries().end()}};
  return d;
}

Mat from_dense(const RingSpec& ring, detail::Dense d) {
  return Mat(ring, d.rows, d.cols, std::move(d.data));
}

void require_same_ring(const Mat& a, const Mat& b) {
  if (!(a.ring() == b.ring()))
    throw ShapeError("matrices over different rings: " + to_string(a.ring()) + " vs " +
                     to_string(b.ring()));
}

}  // namespace

Mat::Mat(RingSpec ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(ring)) {
  if (rows == 0 || cols == 0) throw ShapeError("matrix dimensions must be at least 1");
}

Mat::Mat(RingSpec ring, std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : ring_(ring), rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows == 0 || cols == 0) throw ShapeError("matrix dimensions must be at least 1");
  if (data_.size() != rows * cols) throw ShapeError("entry count does not match shape");
  for (const auto& s : data_)
    if (!(s.ring() == ring)) throw ShapeError("entry ring does not match matrix ring");
}

Mat Mat::identity(RingSpec ring, std::size_t n) {
  Mat m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(ring);
  return m;
}

Mat Mat::of(RingSpec ring, std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t m = rows.size();
  const std::size_t n = m == 0 ? 0 : rows.begin()->size();
  std::vector<Scalar> data;
  data.reserve(m * n);
  for (const auto& row : rows) {
    if (row.size() != n) throw ShapeError("ragged matrix literal");
    for (long v : row) data.push_back(Scalar::from_int(v, ring));
  }
  return Mat(ring, m, n, std::move(data));
}

Mat Mat::parse(RingSpec ring, const std::vector<std::vector<std::string>>& rows) {
  const std::size_t m = rows.size();
  if (m == 0) throw ParseError("matrix has no rows");
  const std::size_t n = rows.front().size();
  if (n == 0) throw ParseError("matrix has no columns");
  std::vector<Scalar> data;
  data.reserve(m * n);
  for (const auto& row : rows) {
    if (row.size() != n) throw ParseError("ragged matrix rows");
    for (const auto& text : row) data.push_back(parse_scalar(text, ring));
  }
  return Mat(ring, m, n, std::move(data));
}

bool Mat::is_zero() const {
  for (const auto& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

Mat& Mat::operator+=(const Mat& rhs) {
  require_same_shape(*this, rhs, "addition");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
  return *this;
}

Mat& Mat::operator-=(const Mat& rhs) {
  require_same_shape(*this, rhs, "subtraction");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
  return *this;
}

Mat Mat::operator-() const {
  Mat out = *this;
  for (auto& s : out.data_) s = -s;
  return out;
}

Mat operator*(const Mat& lhs, const Mat& rhs) {
  require_same_ring(lhs, rhs);
  if (lhs.cols_ != rhs.rows_)
    throw ShapeError("product of " + std::to_string(lhs.rows_) + "x" + std::to_string(lhs.cols_) +
                     " and " + std::to_string(rhs.rows_) + "x" + std::to_string(rhs.cols_));
  Mat out(lhs.ring_, lhs.rows_, rhs.cols_);
  for (std::size_t i = 0; i < lhs.rows_; ++i)
    for (std::size_t k = 0; k < lhs.cols_; ++k) {
      const Scalar& l = lhs(i, k);
      if (l.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const Scalar& r = rhs(k, j);
        if (!r.is_zero()) out(i, j) += l * r;
      }
    }
  return out;
}

Mat operator*(const Scalar& s, Mat m) {
  for (auto& e : m.data_) e *= s;
  return m;
}

void require_same_shape(const Mat& a, const Mat& b, const char* what) {
  require_same_ring(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeError(std::string(what) + ": shape " + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                     std::to_string(b.cols()));
}

Mat adjoint(const Mat& a) {
  Mat out(a.ring(), a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j).conj();
  return out;
}

Mat hstack(const Mat& a, const Mat& b) {
  require_same_ring(a, b);
  if (a.rows() != b.rows()) throw ShapeError("hstack: row counts differ");
  Mat out(a.ring(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
  }
  return out;
}

Mat vstack(const Mat& a, const Mat& b) {
  return adjoint(hstack(adjoint(a), adjoint(b)));
}

bool is_idempotent(const Mat& e) {
  return e.is_square() && e * e == e;
}

bool is_self_adjoint(const Mat& e) {
  return e.is_square() && adjoint(e) == e;
}

Rational norm2(const Mat& a) {
  Rational sum = 0;
  for (const auto& s : a.entries()) sum += s.norm2();
  return sum;
}

std::string to_string(const Mat& a) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < a.rows(); ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < a.cols(); ++j) os << (j ? "," : "") << a(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Mat& a) {
  return os << to_string(a);
}

Rref rref(const Mat& a) {
  detail::Dense reduced = to_dense(a);
  detail::Dense track = to_dense(Mat::identity(a.ring(), a.rows()));
  auto pivots = detail::gauss_jordan(reduced, a.cols(), &track);
  return {from_dense(a.ring(), std::move(reduced)), std::move(pivots),
          from_dense(a.ring(), std::move(track))};
}

std::size_t rank(const Mat& a) {
  detail::Dense d = to_dense(a);
  return detail::gauss_jordan(d, a.cols(), nullptr).size();
}

std::vector<Mat> null_space(const Mat& a) {
  detail::Dense d = to_dense(a);
  const auto pivots = detail::gauss_jordan(d, a.cols(), nullptr);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Mat> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Mat v(a.ring(), a.cols(), 1);
    v(free, 0) = Scalar::one(a.ring());
    for (std::size_t r = 0; r < pivots.size(); ++r) v(pivots[r], 0) = -d.at(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool col_space_leq(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw ShapeError("col_space_leq: row counts differ");
  return rank(hstack(b, a)) == rank(b);
}

bool row_space_leq(const Mat& a, const Mat& b) {
  if (a.cols() != b.cols()) throw ShapeError("row_space_leq: column counts differ");
  return col_space_leq(adjoint(a), adjoint(b));
}

std::uint64_t universe_size(const RingSpec& ring, std::size_t rows, std::size_t cols,
                            std::uint64_t cap) {
  if (!ring.is_finite()) throw PreconditionError("enumeration requires a prime field");
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < rows * cols; ++k) {
    if (total > cap / ring.p) return 0;
    total *= ring.p;
  }
  return total <= cap ? total : 0;
}

Mat matrix_from_index(const RingSpec& ring, std::size_t rows, std::size_t cols,
                      std::uint64_t index) {
  Mat m(ring, rows, cols);
  for (std::size_t k = rows * cols; k-- > 0;) {
    m(k / cols, k % cols) = Scalar::residue(static_cast<long long>(index % ring.p), ring.p);
    index /= ring.p;
  }
  if (index != 0) throw PreconditionError("matrix index out of range");
  return m;
}

std::uint64_t index_of(const Mat& a) {
  if (!a.ring().is_finite()) throw PreconditionError("index_of requires a prime field");
  std::uint64_t idx = 0;
  for (const auto& s : a.entries()) idx = idx * a.ring().p + s.residue_value();
  return idx;
}

}  // namespace starlab
