#include "sarx/unipoly.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace sarx {

UniPoly::UniPoly(RatVector ascending) : coeffs_(std::move(ascending)) { trim(); }

UniPoly UniPoly::monomial(const Rational& c, unsigned k) {
  RatVector v(k + 1);
  v[k] = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

UniPoly UniPoly::monic() const {
  if (isZero()) return *this;
  const Rational lc = leading();
  RatVector v = coeffs_;
  for (auto& c : v) c /= lc;
  return UniPoly(std::move(v));
}

Rational UniPoly::evaluate(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatMatrix UniPoly::evaluate(const RatMatrix& a) const {
  if (!a.isSquare()) throw std::invalid_argument("UniPoly::evaluate: non-square matrix");
  const std::size_t n = a.rows();
  RatMatrix acc(n, n);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * a;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += *it;
  }
  return acc;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  RatVector v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
  return UniPoly(std::move(v));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  RatVector v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
  return UniPoly(std::move(v));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.isZero() || b.isZero()) return {};
  RatVector v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UniPoly(std::move(v));
}

UniPoly operator*(const Rational& s, const UniPoly& a) {
  RatVector v = a.coeffs_;
  for (auto& c : v) c *= s;
  return UniPoly(std::move(v));
}

std::string UniPoly::toString(const std::string& var) const {
  if (isZero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (sgn(c) == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << toFractionString(c);
    if (k >= 1) os << "*" << var;
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

DivResult divide(const UniPoly& a, const UniPoly& b) {
  if (b.isZero()) throw std::invalid_argument("polynomial division by zero");
  if (a.degree() < b.degree()) return {UniPoly{}, a};
  RatVector rem = a.coefficients();
  const RatVector& d = b.coefficients();
  const std::size_t db = d.size() - 1;
  RatVector quot(rem.size() - db);
  const Rational lcInv = 1 / d.back();
  for (std::size_t k = rem.size(); k-- > db;) {
    if (sgn(rem[k]) == 0) continue;
    const Rational factor = rem[k] * lcInv;
    quot[k - db] = factor;
    for (std::size_t i = 0; i <= db; ++i) rem[k - db + i] -= factor * d[i];
  }
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly uniGcd(const UniPoly& a, const UniPoly& b) {
  if (a.isZero() && b.isZero()) throw std::invalid_argument("uniGcd: both arguments are zero");
  UniPoly x = a;
  UniPoly y = b;
  while (!y.isZero()) {
    UniPoly r = divide(x, y).remainder;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

ExtendedGcd extendedGcd(const UniPoly& a, const UniPoly& b) {
  if (a.isZero() && b.isZero()) throw std::invalid_argument("extendedGcd: both arguments are zero");
  UniPoly r0 = a, r1 = b;
  UniPoly s0 = UniPoly::constant(1), s1;
  UniPoly t0, t1 = UniPoly::constant(1);
  while (!r1.isZero()) {
    auto [q, r] = divide(r0, r1);
    UniPoly s2 = s0 - q * s1;
    UniPoly t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const Rational lcInv = 1 / r0.leading();
  return {lcInv * r0, lcInv * s0, lcInv * t0};
}

bool coprime(const UniPoly& a, const UniPoly& b) {
  if (a.isZero() && b.isZero()) return false;
  return uniGcd(a, b).degree() == 0;
}

UniPoly charPoly(const RatMatrix& a) {
  if (!a.isSquare()) throw std::invalid_argument("charPoly: non-square matrix");
  const std::size_t n = a.rows();
  RatVector c(n + 1);
  c[n] = 1;
  RatMatrix m(n, n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
    c[n - k] = -(a * m).trace() / static_cast<long>(k);
  }
  return UniPoly(std::move(c));
}

}  // namespace sarx
