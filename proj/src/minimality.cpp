#include "sarx/minimality.hpp"

#include <stdexcept>

#include "sarx/coupling_recursion.hpp"

namespace sarx {

namespace {

RatVector coefficientRow(const SarxModel& model, const std::string& q) { return model.coefficients(q).row(0); }

void requireSiso(const SarxModel& model, const char* what) {
  if (!model.isSiso()) throw std::invalid_argument(std::string(what) + " requires a SISO model");
}

}  // namespace

const PairPolynomials& Theorem2Data::pair(const std::string& from, const std::string& to) const {
  auto it = pairs.find({from, to});
  if (it == pairs.end()) throw std::invalid_argument("no coupling data for pair (" + from + ", " + to + ")");
  return it->second;
}

Theorem2Data theorem2Polynomials(const SarxModel& model) {
  requireSiso(model, "theorem2Polynomials");
  const std::size_t ny = model.ny(), nu = model.nu();
  const Rational zero(0), one(1);
  Theorem2Data data;
  for (const std::string& q : model.labels()) {
    const RatVector h = coefficientRow(model, q);
    data.chi.emplace(q, UniPoly(denominatorPoly(h, ny, zero, one)));
    data.upsilon.emplace(q, UniPoly(autoregressivePoly(h, ny, zero)));
  }
  for (const std::string& from : model.labels()) {
    for (const std::string& to : model.labels()) {
      const auto seq = couplingSequence(coefficientRow(model, from), coefficientRow(model, to), ny, nu, zero, one);
      PairPolynomials pp;
      for (const auto& psi : seq.psi) pp.psi.emplace_back(psi);
      pp.d = seq.d;
      pp.phi = UniPoly(seq.phi);
      data.pairs.emplace(ModePair{from, to}, std::move(pp));
    }
  }
  return data;
}

std::vector<ModePair> orderedPairs(const std::vector<std::string>& labels, bool includeDiagonal) {
  std::vector<ModePair> out;
  for (const auto& a : labels)
    for (const auto& b : labels)
      if (includeDiagonal || a != b) out.emplace_back(a, b);
  return out;
}

std::optional<ConditionAWitness> checkConditionA(const Theorem2Data& data, const std::vector<ModePair>& pairs) {
  for (const ModePair& pr : pairs) {
    const UniPoly& chi = data.chi.at(pr.first);
    const UniPoly& phi = data.pair(pr.first, pr.second).phi;
    UniPoly g = uniGcd(chi, phi);
    if (g.degree() == 0) return ConditionAWitness{pr, std::move(g)};
  }
  return std::nullopt;
}

Rational conditionBScalar(const SarxModel& model, const std::string& q2, const std::string& q3) {
  const std::size_t ny = model.ny(), n = model.ny() + model.nu();
  const Rational& lead2 = model.coefficient(q2, n);
  if (isZero(lead2)) throw std::invalid_argument("conditionBScalar: h_{q2}^n is zero");
  return model.coefficient(q3, ny) - (model.coefficient(q3, n) / lead2) * model.coefficient(q2, ny);
}

std::vector<UniPoly> rowRecoveryPolynomials(const SarxModel& model, const std::string& q) {
  requireSiso(model, "rowRecoveryPolynomials");
  const std::size_t ny = model.ny(), nu = model.nu(), n = ny + nu;
  const Rational& lead = model.coefficient(q, n);
  if (isZero(lead)) throw std::invalid_argument("rowRecoveryPolynomials: h_q^n is zero");
  const Rational inv = Rational(1) / lead;
  std::vector<UniPoly> gamma;
  for (std::size_t i = 1; i <= nu; ++i) {
    UniPoly acc = UniPoly::monomial(1, static_cast<unsigned>(nu - i));
    for (std::size_t j = 1; j < i; ++j) acc = acc - model.coefficient(q, n - i + j) * gamma[j - 1];
    gamma.push_back(inv * acc);
  }
  return gamma;
}

std::optional<ConditionBWitness> checkConditionB(const Theorem2Data& data, const SarxModel& model) {
  requireSiso(model, "checkConditionB");
  const std::size_t n = model.ny() + model.nu();
  for (const ModePair& pr : orderedPairs(model.labels(), false)) {
    const auto& [q2, q3] = pr;
    if (isZero(model.coefficient(q2, n))) continue;
    if (!coprime(data.upsilon.at(q3), data.chi.at(q2))) continue;
    Rational s = conditionBScalar(model, q2, q3);
    if (!isZero(s)) return ConditionBWitness{pr, std::move(s)};
  }
  return std::nullopt;
}

MinimalityVerdict checkStrongMinimality(const SarxModel& model, MinimalityMethod method, bool diagonalPairs) {
  MinimalityVerdict v;
  v.stateDimension = model.dim();
  if (method != MinimalityMethod::Exact) {
    requireSiso(model, "the coprimality route");
    const Theorem2Data data = theorem2Polynomials(model);
    v.theorem2Evaluated = true;
    v.conditionA = checkConditionA(data, orderedPairs(model.labels(), diagonalPairs));
    v.conditionB = checkConditionB(data, model);
    v.sufficientConditionsHold = v.conditionA.has_value() && v.conditionB.has_value();
  }
  if (method != MinimalityMethod::Theorem2) {
    v.certificate = isMinimalLss(associatedLss(model));
    v.exactEvaluated = true;
    v.strongMinimal = v.certificate->minimal;
    v.crossCheckFailed = v.theorem2Evaluated && v.sufficientConditionsHold && !v.certificate->minimal;
  } else if (v.sufficientConditionsHold) {
    v.strongMinimal = true;
  }
  return v;
}

SufficientMinimality sarxMinimalitySufficient(const SarxModel& model) {
  requireSiso(model, "sarxMinimalitySufficient");
  for (const std::string& q : model.labels())
    if (arxIsMinimal(model, q)) return {true, "arx-subsystem", q};
  if (isMinimalLss(associatedLss(model)).minimal) return {true, "strong-minimality", std::nullopt};
  return {false, "unknown", std::nullopt};
}

TypeConsistency checkTypeConsistency(const SarxModel& a, const SarxModel& b, std::size_t trials,
                                     std::uint64_t seed) {
  requireSiso(a, "checkTypeConsistency");
  requireSiso(b, "checkTypeConsistency");
  TypeConsistency out;
  out.bothCertifiedMinimal = sarxMinimalitySufficient(a).certified && sarxMinimalitySufficient(b).certified;
  if (a.labels() != b.labels()) return out;
  out.sampleEquivalent = equivalentOnSamples(a, b, trials, seed);
  const bool sameType = a.ny() == b.ny() && a.nu() == b.nu();
  out.consistent = sameType || !out.sampleEquivalent;
  return out;
}

}  // namespace sarx
