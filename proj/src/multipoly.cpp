#include "sarx/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sarx {

unsigned totalDegree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0u); }

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial monomialLcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Monomial monomialProduct(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Monomial monomialQuotient(const Monomial& b, const Monomial& a) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[i] - a[i];
  return r;
}

bool coprimeMonomials(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) return false;
  return true;
}

// ---- MonomialOrder ----

MonomialOrder MonomialOrder::lex(std::size_t nvars) {
  std::vector<std::size_t> r(nvars);
  std::iota(r.begin(), r.end(), 0);
  return lex(std::move(r));
}

MonomialOrder MonomialOrder::lex(std::vector<std::size_t> ranking) {
  const std::size_t n = ranking.size();
  return MonomialOrder(Kind::Lex, std::move(ranking), n);
}

MonomialOrder MonomialOrder::grevlex(std::size_t nvars) {
  std::vector<std::size_t> r(nvars);
  std::iota(r.begin(), r.end(), 0);
  return MonomialOrder(Kind::GradedReverseLex, std::move(r), nvars);
}

MonomialOrder MonomialOrder::elimination(std::size_t nvars, const std::vector<std::size_t>& dropVariables) {
  std::vector<bool> dropped(nvars, false);
  for (std::size_t v : dropVariables) {
    if (v >= nvars) throw std::out_of_range("elimination order: variable index out of range");
    dropped[v] = true;
  }
  std::vector<std::size_t> ranking;
  for (std::size_t v = 0; v < nvars; ++v)
    if (dropped[v]) ranking.push_back(v);
  const std::size_t k = ranking.size();
  for (std::size_t v = 0; v < nvars; ++v)
    if (!dropped[v]) ranking.push_back(v);
  return MonomialOrder(Kind::EliminationBlock, std::move(ranking), k);
}

int MonomialOrder::compareGrevlex(const Monomial& a, const Monomial& b, std::size_t from,
                                  std::size_t to) const {
  unsigned da = 0, db = 0;
  for (std::size_t i = from; i < to; ++i) {
    da += a[ranking_[i]];
    db += b[ranking_[i]];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = to; i-- > from;) {
    const std::size_t v = ranking_[i];
    if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;
  }
  return 0;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::Lex:
      for (std::size_t v : ranking_)
        if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
      return 0;
    case Kind::GradedReverseLex:
      return compareGrevlex(a, b, 0, ranking_.size());
    case Kind::EliminationBlock: {
      const int c = compareGrevlex(a, b, 0, blockSize_);
      return c != 0 ? c : compareGrevlex(a, b, blockSize_, ranking_.size());
    }
  }
  return 0;
}

bool MonomialOrder::eliminates(const std::vector<std::size_t>& dropVariables) const {
  std::vector<std::size_t> drop = dropVariables;
  std::sort(drop.begin(), drop.end());
  drop.erase(std::unique(drop.begin(), drop.end()), drop.end());
  if (drop.empty()) return true;
  std::size_t prefix = 0;
  switch (kind_) {
    case Kind::Lex:
      prefix = drop.size();
      break;
    case Kind::EliminationBlock:
      prefix = blockSize_;
      break;
    case Kind::GradedReverseLex:
      return drop.size() == ranking_.size();
  }
  if (prefix != drop.size()) return false;
  std::vector<std::size_t> head(ranking_.begin(), ranking_.begin() + static_cast<long>(prefix));
  std::sort(head.begin(), head.end());
  return head == drop;
}

// ---- MultiPoly ----

MultiPoly::MultiPoly(std::vector<std::string> variables)
    : MultiPoly(variables, MonomialOrder::grevlex(variables.size())) {}

MultiPoly::MultiPoly(std::vector<std::string> variables, const MonomialOrder& order)
    : vars_(std::make_shared<const std::vector<std::string>>(std::move(variables))),
      terms_(TermLess{std::make_shared<const MonomialOrder>(order)}) {
  if (order.variableCount() != vars_->size())
    throw std::invalid_argument("MultiPoly: order/variable count mismatch");
}

MultiPoly MultiPoly::constant(const std::vector<std::string>& variables, const Rational& c) {
  return term(variables, c, Monomial(variables.size(), 0));
}

MultiPoly MultiPoly::variable(const std::vector<std::string>& variables, std::size_t index) {
  Monomial m(variables.size(), 0);
  m.at(index) = 1;
  return term(variables, 1, std::move(m));
}

MultiPoly MultiPoly::term(const std::vector<std::string>& variables, const Rational& c, Monomial m) {
  MultiPoly p(variables);
  p.addTerm(m, c);
  return p;
}

void MultiPoly::addTerm(const Monomial& m, const Rational& c) {
  if (m.size() != vars_->size()) throw std::invalid_argument("MultiPoly: monomial length mismatch");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

bool MultiPoly::isConstant() const {
  return terms_.empty() || (terms_.size() == 1 && sarx::totalDegree(terms_.begin()->first) == 0);
}

unsigned MultiPoly::totalDegree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, sarx::totalDegree(m));
  return d;
}

unsigned MultiPoly::degreeIn(std::size_t var) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.at(var));
  return d;
}

const Monomial& MultiPoly::leadingMonomial() const {
  if (terms_.empty()) throw std::logic_error("leadingMonomial of zero polynomial");
  return terms_.rbegin()->first;
}

const Rational& MultiPoly::leadingCoefficient() const {
  if (terms_.empty()) throw std::logic_error("leadingCoefficient of zero polynomial");
  return terms_.rbegin()->second;
}

MultiPoly MultiPoly::monic() const {
  if (isZero()) return *this;
  const Rational inv = 1 / leadingCoefficient();
  return inv * *this;
}

MultiPoly MultiPoly::withOrder(const MonomialOrder& order) const {
  MultiPoly r(*vars_, order);
  r.vars_ = vars_;
  for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, c);
  return r;
}

MultiPoly MultiPoly::embed(const std::vector<std::string>& variables, const MonomialOrder& order) const {
  std::vector<std::size_t> target(vars_->size());
  for (std::size_t i = 0; i < vars_->size(); ++i) {
    auto it = std::find(variables.begin(), variables.end(), (*vars_)[i]);
    if (it == variables.end()) {
      // A variable that never occurs may be dropped.
      if (degreeIn(i) == 0) {
        target[i] = variables.size();
        continue;
      }
      throw std::invalid_argument("MultiPoly::embed: variable '" + (*vars_)[i] + "' missing from target ring");
    }
    target[i] = static_cast<std::size_t>(it - variables.begin());
  }
  MultiPoly r(variables, order);
  for (const auto& [m, c] : terms_) {
    Monomial mm(variables.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (target[i] < variables.size()) mm[target[i]] = m[i];
    r.addTerm(mm, c);
  }
  return r;
}

MultiPoly MultiPoly::embed(const std::vector<std::string>& variables) const {
  return embed(variables, MonomialOrder::grevlex(variables.size()));
}

static Rational powRational(const Rational& x, unsigned e) {
  Rational r = 1;
  for (unsigned i = 0; i < e; ++i) r *= x;
  return r;
}

Rational MultiPoly::evaluate(const RatVector& point) const {
  if (point.size() != vars_->size()) throw std::invalid_argument("MultiPoly::evaluate: point length mismatch");
  Rational acc;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] != 0) t *= powRational(point[i], m[i]);
    acc += t;
  }
  return acc;
}

UniPoly MultiPoly::specializeToUni(std::size_t keep, const RatVector& point) const {
  if (point.size() != vars_->size()) throw std::invalid_argument("MultiPoly::specializeToUni: point length mismatch");
  RatVector coeffs(degreeIn(keep) + 1);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (i != keep && m[i] != 0) t *= powRational(point[i], m[i]);
    coeffs[m[keep]] += t;
  }
  return UniPoly(std::move(coeffs));
}

MultiPoly MultiPoly::substitute(const std::vector<std::size_t>& indices, const RatVector& values) const {
  if (indices.size() != values.size()) throw std::invalid_argument("MultiPoly::substitute: size mismatch");
  MultiPoly r(*vars_, order());
  r.vars_ = vars_;
  for (const auto& [m, c] : terms_) {
    Monomial mm = m;
    Rational t = c;
    for (std::size_t k = 0; k < indices.size(); ++k) {
      t *= powRational(values[k], mm.at(indices[k]));
      mm[indices[k]] = 0;
    }
    r.addTerm(mm, t);
  }
  return r;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly r = constant(*vars_, 1).withOrder(order());
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

MultiPoly MultiPoly::mulTerm(const Rational& c, const Monomial& m) const {
  MultiPoly r(*vars_, order());
  r.vars_ = vars_;
  if (sgn(c) == 0) return r;
  // Multiplying by a monomial preserves the order, so append in sequence.
  for (const auto& [mono, coeff] : terms_) r.terms_.emplace_hint(r.terms_.end(), monomialProduct(mono, m), coeff * c);
  return r;
}

void MultiPoly::checkRing(const MultiPoly& o) const {
  if (vars_ != o.vars_ && *vars_ != *o.vars_)
    throw std::invalid_argument("MultiPoly: operands live in different rings");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  checkRing(o);
  for (const auto& [m, c] : o.terms_) addTerm(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  checkRing(o);
  for (const auto& [m, c] : o.terms_) addTerm(m, -c);
  return *this;
}

MultiPoly operator-(const MultiPoly& a) { return Rational(-1) * a; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.checkRing(b);
  MultiPoly r(a.variables(), a.order());
  r.vars_ = a.vars_;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.addTerm(monomialProduct(ma, mb), ca * cb);
  return r;
}

MultiPoly operator*(const Rational& s, const MultiPoly& a) {
  MultiPoly r(a.variables(), a.order());
  r.vars_ = a.vars_;
  if (sgn(s) == 0) return r;
  for (const auto& [m, c] : a.terms_) r.terms_.emplace_hint(r.terms_.end(), m, c * s);
  return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.variables() != b.variables() || a.terms_.size() != b.terms_.size()) return false;
  for (const auto& [m, c] : a.terms_) {
    auto it = b.terms_.find(m);
    if (it == b.terms_.end() || it->second != c) return false;
  }
  return true;
}

std::string MultiPoly::toString() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << toFractionString(it->second);
    for (std::size_t i = 0; i < it->first.size(); ++i) {
      const unsigned e = it->first[i];
      if (e == 0) continue;
      os << "*" << (*vars_)[i];
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

std::vector<MultiPoly> coefficientsIn(const MultiPoly& f, std::size_t var) {
  std::vector<MultiPoly> out(f.degreeIn(var) + 1, MultiPoly(f.variables(), f.order()));
  for (const auto& [m, c] : f.terms()) {
    Monomial mm = m;
    const unsigned k = mm[var];
    mm[var] = 0;
    out[k].addTerm(mm, c);
  }
  if (f.isZero()) out.clear();
  return out;
}

}  // namespace sarx
