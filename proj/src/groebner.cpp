#include "sarx/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace sarx {

MultiPoly normalForm(const MultiPoly& f, const std::vector<MultiPoly>& divisors) {
  MultiPoly rest = f;
  MultiPoly remainder(f.variables(), f.order());
  while (!rest.isZero()) {
    const Monomial lead = rest.leadingMonomial();
    const Rational lc = rest.leadingCoefficient();
    bool reduced = false;
    for (const MultiPoly& g : divisors) {
      if (g.isZero() || !divides(g.leadingMonomial(), lead)) continue;
      rest -= g.mulTerm(lc / g.leadingCoefficient(), monomialQuotient(lead, g.leadingMonomial()));
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder.addTerm(lead, lc);
      rest.addTerm(lead, -lc);
    }
  }
  return remainder;
}

namespace {

struct CriticalPair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

MultiPoly sPolynomial(const MultiPoly& f, const MultiPoly& g, const Monomial& lcm) {
  MultiPoly a = f.mulTerm(1 / f.leadingCoefficient(), monomialQuotient(lcm, f.leadingMonomial()));
  MultiPoly b = g.mulTerm(1 / g.leadingCoefficient(), monomialQuotient(lcm, g.leadingMonomial()));
  return a - b;
}

// Drop elements whose leading monomial is divisible by another's, then
// reduce each against the rest.
std::vector<MultiPoly> reduceBasis(const std::vector<MultiPoly>& g, const MonomialOrder& order) {
  std::vector<MultiPoly> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& li = g[i].leadingMonomial();
      const Monomial& lj = g[j].leadingMonomial();
      if (divides(lj, li) && (lj != li || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i].monic());
  }
  std::vector<MultiPoly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<MultiPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    reduced.push_back(normalForm(minimal[i], others).monic());
  }
  std::sort(reduced.begin(), reduced.end(), [&](const MultiPoly& a, const MultiPoly& b) {
    return order.less(a.leadingMonomial(), b.leadingMonomial());
  });
  return reduced;
}

}  // namespace

std::vector<MultiPoly> buchberger(const std::vector<MultiPoly>& generators, const MonomialOrder& order) {
  std::vector<MultiPoly> g;
  for (const MultiPoly& f : generators) {
    if (f.isZero()) continue;
    if (f.order().variableCount() != order.variableCount())
      throw std::invalid_argument("buchberger: generator ring does not match the order");
    MultiPoly h = f.withOrder(order).monic();
    if (h.isConstant()) return {MultiPoly::constant(f.variables(), 1).withOrder(order)};
    g.push_back(std::move(h));
  }
  if (g.empty()) return {};

  std::vector<CriticalPair> pairs;
  auto addPairsFor = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i)
      pairs.push_back({i, j, monomialLcm(g[i].leadingMonomial(), g[j].leadingMonomial())});
  };
  for (std::size_t j = 1; j < g.size(); ++j) addPairsFor(j);

  auto pending = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    return std::any_of(pairs.begin(), pairs.end(),
                       [&](const CriticalPair& p) { return p.i == a && p.j == b; });
  };

  while (!pairs.empty()) {
    // Normal strategy: smallest lcm first, ties broken by pair indices.
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const CriticalPair& a, const CriticalPair& b) {
      const int c = order.compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      return std::tie(a.j, a.i) < std::tie(b.j, b.i);
    });
    const CriticalPair pair = *best;
    pairs.erase(best);

    const Monomial& li = g[pair.i].leadingMonomial();
    const Monomial& lj = g[pair.j].leadingMonomial();
    if (coprimeMonomials(li, lj)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == pair.i || k == pair.j) continue;
      if (divides(g[k].leadingMonomial(), pair.lcm) && !pending(pair.i, k) && !pending(pair.j, k)) chain = true;
    }
    if (chain) continue;

    MultiPoly h = normalForm(sPolynomial(g[pair.i], g[pair.j], pair.lcm), g);
    if (h.isZero()) continue;
    h = h.monic();
    if (h.isConstant()) return {MultiPoly::constant(h.variables(), 1).withOrder(order)};
    g.push_back(std::move(h));
    addPairsFor(g.size() - 1);
  }
  return reduceBasis(g, order);
}

Ideal::Ideal(std::vector<std::string> variables, std::vector<MultiPoly> generators, const MonomialOrder& order)
    : vars_(std::move(variables)), order_(order) {
  if (order_.variableCount() != vars_.size()) throw std::invalid_argument("Ideal: order/variable count mismatch");
  for (MultiPoly& f : generators) {
    if (f.variables() != vars_) throw std::invalid_argument("Ideal: generator has different variables");
    generators_.push_back(f.withOrder(order_));
  }
  basis_ = buchberger(generators_, order_);
}

Ideal::Ideal(std::vector<std::string> variables, std::vector<MultiPoly> generators)
    : Ideal(variables, std::move(generators), MonomialOrder::grevlex(variables.size())) {}

bool Ideal::isUnit() const { return basis_.size() == 1 && basis_.front().isConstant(); }

bool Ideal::contains(const MultiPoly& f) const {
  if (f.variables() != vars_) throw std::invalid_argument("Ideal::contains: variable mismatch");
  return normalForm(f.withOrder(order_), basis_).isZero();
}

std::vector<MultiPoly> eliminationIdeal(const Ideal& ideal, const std::vector<std::size_t>& dropVariables) {
  if (!ideal.order().eliminates(dropVariables))
    throw std::invalid_argument("eliminationIdeal: order is not an elimination order for the requested variables");
  std::vector<bool> dropped(ideal.variables().size(), false);
  for (std::size_t v : dropVariables) dropped.at(v) = true;
  std::vector<std::string> kept;
  for (std::size_t v = 0; v < dropped.size(); ++v)
    if (!dropped[v]) kept.push_back(ideal.variables()[v]);
  const MonomialOrder keptOrder = MonomialOrder::grevlex(kept.size());

  std::vector<MultiPoly> out;
  for (const MultiPoly& g : ideal.basis()) {
    bool free = true;
    for (std::size_t v : dropVariables)
      if (g.degreeIn(v) != 0) free = false;
    if (free) out.push_back(g.embed(kept, keptOrder));
  }
  // Elements of the restricted basis form a reduced basis under the
  // restricted order; recompute to normalize sorting under grevlex.
  return buchberger(out, keptOrder);
}

Ideal idealProduct(const Ideal& a, const Ideal& b) {
  if (a.variables() != b.variables()) throw std::invalid_argument("idealProduct: variable mismatch");
  std::vector<MultiPoly> gens;
  for (const MultiPoly& f : a.basis())
    for (const MultiPoly& g : b.basis()) gens.push_back(f.withOrder(a.order()) * g.withOrder(a.order()));
  return Ideal(a.variables(), std::move(gens), a.order());
}

bool idealEquals(const Ideal& a, const Ideal& b) {
  if (a.variables() != b.variables()) return false;
  for (const MultiPoly& f : a.basis())
    if (!b.contains(f)) return false;
  for (const MultiPoly& f : b.basis())
    if (!a.contains(f)) return false;
  return true;
}

}  // namespace sarx
