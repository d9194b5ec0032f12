#ifndef SARX_GROEBNER_HPP
#define SARX_GROEBNER_HPP

#include <string>
#include <vector>

#include "sarx/multipoly.hpp"

namespace sarx {

/// Full reduction of f modulo `divisors` (all in f's ring and order).
MultiPoly normalForm(const MultiPoly& f, const std::vector<MultiPoly>& divisors);

/// Reduced Groebner basis of the ideal spanned by `generators` under `order`.
/// Elements are monic and sorted by ascending leading monomial. Zero
/// generators are ignored; the zero ideal yields an empty basis.
std::vector<MultiPoly> buchberger(const std::vector<MultiPoly>& generators, const MonomialOrder& order);

/// Polynomial ideal with its reduced basis computed at construction.
class Ideal {
 public:
  Ideal(std::vector<std::string> variables, std::vector<MultiPoly> generators, const MonomialOrder& order);
  Ideal(std::vector<std::string> variables, std::vector<MultiPoly> generators);

  const std::vector<std::string>& variables() const { return vars_; }
  const std::vector<MultiPoly>& generators() const { return generators_; }
  const std::vector<MultiPoly>& basis() const { return basis_; }
  const MonomialOrder& order() const { return order_; }

  bool isZero() const { return basis_.empty(); }
  bool isUnit() const;
  bool contains(const MultiPoly& f) const;

 private:
  std::vector<std::string> vars_;
  std::vector<MultiPoly> generators_;
  MonomialOrder order_;
  std::vector<MultiPoly> basis_;
};

/// Basis of I ∩ Q[kept variables], returned over the kept variables only
/// (original relative order, grevlex). Throws std::invalid_argument if the
/// ideal's order is not an elimination order for `dropVariables`.
std::vector<MultiPoly> eliminationIdeal(const Ideal& ideal, const std::vector<std::size_t>& dropVariables);

/// Ideal generated by all pairwise products of the two bases.
Ideal idealProduct(const Ideal& a, const Ideal& b);

/// Ideal equality by mutual normal-form reduction.
bool idealEquals(const Ideal& a, const Ideal& b);

}  // namespace sarx

#endif  // SARX_GROEBNER_HPP
