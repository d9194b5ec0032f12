#include "sarx/matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace sarx {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("RatMatrix: ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::columnVector(const RatVector& v) {
  RatMatrix m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

RatMatrix RatMatrix::rowVector(const RatVector& v) {
  RatMatrix m(1, v.size());
  for (std::size_t i = 0; i < v.size(); ++i) m(0, i) = v[i];
  return m;
}

RatMatrix RatMatrix::fromRows(const std::vector<RatVector>& rows, std::size_t cols) {
  RatMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("RatMatrix::fromRows: row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RatMatrix RatMatrix::unit(std::size_t n, std::size_t i) {
  RatMatrix m(n, 1);
  m(i, 0) = 1;
  return m;
}

RatVector RatMatrix::row(std::size_t r) const {
  return RatVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RatVector RatMatrix::column(std::size_t c) const {
  RatVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

RatMatrix RatMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("RatMatrix::block");
  RatMatrix m(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) m(r, c) = (*this)(r0 + r, c0 + c);
  return m;
}

void RatMatrix::setBlock(std::size_t r0, std::size_t c0, const RatMatrix& src) {
  if (r0 + src.rows_ > rows_ || c0 + src.cols_ > cols_) throw std::out_of_range("RatMatrix::setBlock");
  for (std::size_t r = 0; r < src.rows_; ++r)
    for (std::size_t c = 0; c < src.cols_; ++c) (*this)(r0 + r, c0 + c) = src(r, c);
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool RatMatrix::isZero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

Rational RatMatrix::trace() const {
  if (!isSquare()) throw std::invalid_argument("trace of non-square matrix");
  Rational t;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
  RatMatrix s = a;
  for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] += b.data_[i];
  return s;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
  RatMatrix s = a;
  for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] -= b.data_[i];
  return s;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  RatMatrix p(a.rows_, b.cols_);
  Rational t;
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (sgn(b(k, j)) == 0) continue;
        t = aik * b(k, j);
        p(i, j) += t;
      }
    }
  }
  return p;
}

RatMatrix operator*(const Rational& s, const RatMatrix& a) {
  RatMatrix p = a;
  for (auto& x : p.data_) x *= s;
  return p;
}

bool operator==(const RatMatrix& a, const RatMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string RatMatrix::toString() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c).get_str();
  }
  os << "]";
  return os.str();
}

RatMatrix vstack(const RatMatrix& top, const RatMatrix& bottom) {
  if (top.rows() == 0) return bottom;
  if (bottom.rows() == 0) return top;
  if (top.cols() != bottom.cols()) throw std::invalid_argument("vstack: column mismatch");
  RatMatrix m(top.rows() + bottom.rows(), top.cols());
  m.setBlock(0, 0, top);
  m.setBlock(top.rows(), 0, bottom);
  return m;
}

RatMatrix hstack(const RatMatrix& left, const RatMatrix& right) {
  if (left.cols() == 0) return right;
  if (right.cols() == 0) return left;
  if (left.rows() != right.rows()) throw std::invalid_argument("hstack: row mismatch");
  RatMatrix m(left.rows(), left.cols() + right.cols());
  m.setBlock(0, 0, left);
  m.setBlock(0, left.cols(), right);
  return m;
}

RatMatrix power(const RatMatrix& a, unsigned k) {
  if (!a.isSquare()) throw std::invalid_argument("power of non-square matrix");
  RatMatrix result = RatMatrix::identity(a.rows());
  for (unsigned i = 0; i < k; ++i) result = result * a;
  return result;
}

RrefResult rref(const RatMatrix& m) {
  RrefResult out{m, {}};
  RatMatrix& a = out.reduced;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t pivotRow = 0;
  for (std::size_t c = 0; c < cols && pivotRow < rows; ++c) {
    std::size_t sel = pivotRow;
    while (sel < rows && sgn(a(sel, c)) == 0) ++sel;
    if (sel == rows) continue;
    if (sel != pivotRow) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(sel, j), a(pivotRow, j));
    }
    const Rational inv = 1 / a(pivotRow, c);
    for (std::size_t j = c; j < cols; ++j) a(pivotRow, j) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivotRow || sgn(a(r, c)) == 0) continue;
      const Rational factor = a(r, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (sgn(a(pivotRow, j)) != 0) a(r, j) -= factor * a(pivotRow, j);
      }
    }
    out.pivotColumns.push_back(c);
    ++pivotRow;
  }
  return out;
}

std::size_t rank(const RatMatrix& m) { return rref(m).rank(); }

std::vector<RatMatrix> kernelBasis(const RatMatrix& m) {
  const auto r = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> isPivot(cols, false);
  for (auto c : r.pivotColumns) isPivot[c] = true;

  std::vector<RatMatrix> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (isPivot[free]) continue;
    RatMatrix v(cols, 1);
    v(free, 0) = 1;
    for (std::size_t i = 0; i < r.pivotColumns.size(); ++i) {
      v(r.pivotColumns[i], 0) = -r.reduced(i, free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

RatMatrix kernelMatrix(const RatMatrix& m) {
  const auto basis = kernelBasis(m);
  RatMatrix k(m.cols(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) k.setBlock(0, j, basis[j]);
  return k;
}

Rational determinant(const RatMatrix& m) {
  if (!m.isSquare()) throw std::invalid_argument("determinant of non-square matrix");
  RatMatrix a = m;
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = c;
    while (sel < n && sgn(a(sel, c)) == 0) ++sel;
    if (sel == n) return 0;
    if (sel != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(sel, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(a(r, c)) == 0) continue;
      const Rational factor = a(r, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(r, j) -= factor * a(c, j);
    }
  }
  return det;
}

LinearSolution solveLinear(const RatMatrix& m, const RatVector& rhs) {
  if (rhs.size() != m.rows()) throw std::invalid_argument("solveLinear: rhs length mismatch");
  const std::size_t n = m.cols();
  const auto r = rref(hstack(m, RatMatrix::columnVector(rhs)));
  LinearSolution sol;
  if (!r.pivotColumns.empty() && r.pivotColumns.back() == n) return sol;  // 0 = 1 row
  sol.consistent = true;
  sol.particular.assign(n, Rational(0));
  std::vector<bool> isPivot(n, false);
  for (std::size_t i = 0; i < r.pivotColumns.size(); ++i) {
    isPivot[r.pivotColumns[i]] = true;
    sol.particular[r.pivotColumns[i]] = r.reduced(i, n);
  }
  for (std::size_t free = 0; free < n; ++free) {
    if (isPivot[free]) continue;
    RatVector v(n);
    v[free] = 1;
    for (std::size_t i = 0; i < r.pivotColumns.size(); ++i) v[r.pivotColumns[i]] = -r.reduced(i, free);
    sol.nullspace.push_back(std::move(v));
  }
  return sol;
}

}  // namespace sarx
