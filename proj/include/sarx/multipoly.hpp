#ifndef SARX_MULTIPOLY_HPP
#define SARX_MULTIPOLY_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "sarx/rational.hpp"
#include "sarx/unipoly.hpp"

namespace sarx {

/// Exponent vector, one slot per ring variable.
using Monomial = std::vector<unsigned>;

unsigned totalDegree(const Monomial& m);
bool divides(const Monomial& a, const Monomial& b);
Monomial monomialLcm(const Monomial& a, const Monomial& b);
Monomial monomialProduct(const Monomial& a, const Monomial& b);
/// b / a, assuming divides(a, b).
Monomial monomialQuotient(const Monomial& b, const Monomial& a);
bool coprimeMonomials(const Monomial& a, const Monomial& b);

class MonomialOrder {
 public:
  enum class Kind { Lex, GradedReverseLex, EliminationBlock };

  /// Lex with x_0 > x_1 > ...
  static MonomialOrder lex(std::size_t nvars);
  /// Lex ranking variables as listed in `ranking` (first is largest).
  static MonomialOrder lex(std::vector<std::size_t> ranking);
  static MonomialOrder grevlex(std::size_t nvars);
  /// Block order: `dropVariables` form the first block, compared first;
  /// grevlex inside each block.
  static MonomialOrder elimination(std::size_t nvars, const std::vector<std::size_t>& dropVariables);

  Kind kind() const { return kind_; }
  std::size_t variableCount() const { return ranking_.size(); }
  const std::vector<std::size_t>& ranking() const { return ranking_; }
  std::size_t blockSize() const { return blockSize_; }

  /// Negative, zero or positive as a <, =, > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  /// True when every monomial containing a dropped variable ranks above
  /// every monomial free of them.
  bool eliminates(const std::vector<std::size_t>& dropVariables) const;

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.blockSize_ == b.blockSize_ && a.ranking_ == b.ranking_;
  }

 private:
  MonomialOrder(Kind kind, std::vector<std::size_t> ranking, std::size_t blockSize)
      : kind_(kind), ranking_(std::move(ranking)), blockSize_(blockSize) {}
  int compareGrevlex(const Monomial& a, const Monomial& b, std::size_t from, std::size_t to) const;

  Kind kind_;
  std::vector<std::size_t> ranking_;
  std::size_t blockSize_;
};

/// Sparse multivariate polynomial over Q. Terms are kept sorted by the
/// polynomial's monomial order (ascending; the leading term is last).
class MultiPoly {
  struct TermLess {
    std::shared_ptr<const MonomialOrder> order;
    bool operator()(const Monomial& a, const Monomial& b) const { return order->less(a, b); }
  };

 public:
  using Terms = std::map<Monomial, Rational, TermLess>;

  MultiPoly() : MultiPoly(std::vector<std::string>{}) {}
  explicit MultiPoly(std::vector<std::string> variables);
  MultiPoly(std::vector<std::string> variables, const MonomialOrder& order);

  static MultiPoly constant(const std::vector<std::string>& variables, const Rational& c);
  static MultiPoly variable(const std::vector<std::string>& variables, std::size_t index);
  static MultiPoly term(const std::vector<std::string>& variables, const Rational& c, Monomial m);

  const std::vector<std::string>& variables() const { return *vars_; }
  std::size_t variableCount() const { return vars_->size(); }
  const MonomialOrder& order() const { return *terms_.key_comp().order; }
  const Terms& terms() const { return terms_; }

  void addTerm(const Monomial& m, const Rational& c);

  bool isZero() const { return terms_.empty(); }
  bool isConstant() const;
  std::size_t termCount() const { return terms_.size(); }
  unsigned totalDegree() const;
  unsigned degreeIn(std::size_t var) const;

  /// Leading monomial / coefficient under the polynomial's order (nonzero only).
  const Monomial& leadingMonomial() const;
  const Rational& leadingCoefficient() const;
  MultiPoly monic() const;

  MultiPoly withOrder(const MonomialOrder& order) const;
  /// Re-express over a variable list containing all variables used here.
  MultiPoly embed(const std::vector<std::string>& variables, const MonomialOrder& order) const;
  MultiPoly embed(const std::vector<std::string>& variables) const;

  Rational evaluate(const RatVector& point) const;
  /// Substitute values for every variable except `keep`, giving a
  /// univariate polynomial in that variable.
  UniPoly specializeToUni(std::size_t keep, const RatVector& point) const;
  /// Substitute values for the listed variables; they stay in the ring with
  /// exponent zero.
  MultiPoly substitute(const std::vector<std::size_t>& indices, const RatVector& values) const;

  MultiPoly pow(unsigned k) const;
  /// this * c * x^m
  MultiPoly mulTerm(const Rational& c, const Monomial& m) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator-(const MultiPoly& a);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const Rational& s, const MultiPoly& a);
  /// Same ring and same term set (orders may differ).
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  /// Terms in descending order, e.g. "1/1*z^2 + -8/1*z + 15/1".
  std::string toString() const;

 private:
  void checkRing(const MultiPoly& o) const;

  std::shared_ptr<const std::vector<std::string>> vars_;
  Terms terms_;
};

/// Polynomial in z with coefficients that are polynomials in the other
/// variables: returns coeffs[k] = coefficient of z^k.
std::vector<MultiPoly> coefficientsIn(const MultiPoly& f, std::size_t var);

}  // namespace sarx

#endif  // SARX_MULTIPOLY_HPP
