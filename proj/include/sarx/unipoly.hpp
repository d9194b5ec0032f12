#ifndef SARX_UNIPOLY_HPP
#define SARX_UNIPOLY_HPP

#include <string>
#include <vector>

#include "sarx/matrix.hpp"
#include "sarx/rational.hpp"

namespace sarx {

/// Univariate polynomial over Q, coefficients stored in ascending degree.
/// The zero polynomial has no coefficients; otherwise the last one is nonzero.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(RatVector ascending);
  UniPoly(std::initializer_list<Rational> ascending) : UniPoly(RatVector(ascending)) {}

  static UniPoly constant(const Rational& c) { return UniPoly(RatVector{c}); }
  /// c * z^k
  static UniPoly monomial(const Rational& c, unsigned k);

  bool isZero() const { return coeffs_.empty(); }
  /// Degree, or -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const RatVector& coefficients() const { return coeffs_; }
  /// Coefficient of z^k, zero past the degree.
  Rational coeff(unsigned k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
  Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

  UniPoly monic() const;
  Rational evaluate(const Rational& x) const;
  /// Matrix substitution p(A) by Horner's scheme.
  RatMatrix evaluate(const RatMatrix& a) const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Rational& s, const UniPoly& a);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Canonical text in descending degree, e.g. "1/1*z^2 + -8/1*z + 15/1".
  std::string toString(const std::string& var = "z") const;

 private:
  void trim();
  RatVector coeffs_;
};

struct DivResult {
  UniPoly quotient;
  UniPoly remainder;
};

/// Euclidean division; throws on a zero divisor.
DivResult divide(const UniPoly& a, const UniPoly& b);

/// Monic gcd. Throws std::invalid_argument when both inputs are zero.
UniPoly uniGcd(const UniPoly& a, const UniPoly& b);

/// Bezout certificate: s*a + t*b == gcd (gcd monic).
struct ExtendedGcd {
  UniPoly gcd;
  UniPoly s;
  UniPoly t;
};
ExtendedGcd extendedGcd(const UniPoly& a, const UniPoly& b);

bool coprime(const UniPoly& a, const UniPoly& b);

/// det(zI - A) via the Faddeev–LeVerrier recurrence.
UniPoly charPoly(const RatMatrix& a);

}  // namespace sarx

#endif  // SARX_UNIPOLY_HPP
