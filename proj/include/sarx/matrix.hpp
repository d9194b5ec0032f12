#ifndef SARX_MATRIX_HPP
#define SARX_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "sarx/rational.hpp"

namespace sarx {

/// Dense row-major matrix over the rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RatMatrix identity(std::size_t n);
  static RatMatrix zero(std::size_t rows, std::size_t cols) { return RatMatrix(rows, cols); }
  static RatMatrix columnVector(const RatVector& v);
  static RatMatrix rowVector(const RatVector& v);
  static RatMatrix fromRows(const std::vector<RatVector>& rows, std::size_t cols);
  /// Unit column e_i (0-based) of length n.
  static RatMatrix unit(std::size_t n, std::size_t i);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool isSquare() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RatVector row(std::size_t r) const;
  RatVector column(std::size_t c) const;
  RatMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void setBlock(std::size_t r0, std::size_t c0, const RatMatrix& src);

  RatMatrix transpose() const;
  bool isZero() const;
  Rational trace() const;

  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(const Rational& s, const RatMatrix& a);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b);

  std::string toString() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RatMatrix vstack(const RatMatrix& top, const RatMatrix& bottom);
RatMatrix hstack(const RatMatrix& left, const RatMatrix& right);
RatMatrix power(const RatMatrix& a, unsigned k);

struct RrefResult {
  RatMatrix reduced;
  std::vector<std::size_t> pivotColumns;
  std::size_t rank() const { return pivotColumns.size(); }
};

/// Exact reduced row echelon form by Gauss–Jordan elimination.
RrefResult rref(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

/// Basis of {x : m x = 0}, one column vector per free variable.
std::vector<RatMatrix> kernelBasis(const RatMatrix& m);

/// Same basis packed as the columns of a single cols x k matrix.
RatMatrix kernelMatrix(const RatMatrix& m);

Rational determinant(const RatMatrix& m);

/// Solution of m x = rhs. `particular` is set when consistent; the
/// homogeneous solution space is spanned by `nullspace` columns.
struct LinearSolution {
  bool consistent = false;
  RatVector particular;
  std::vector<RatVector> nullspace;
};

LinearSolution solveLinear(const RatMatrix& m, const RatVector& rhs);

}  // namespace sarx

#endif  // SARX_MATRIX_HPP
