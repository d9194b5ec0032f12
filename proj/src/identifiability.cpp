#include "sarx/identifiability.hpp"

#include <algorithm>
#include <stdexcept>

#include "sarx/coupling_recursion.hpp"
#include "sarx/groebner.hpp"

namespace sarx {

PolyParametrization::PolyParametrization(std::vector<std::string> variables, std::size_t ny, std::size_t nu,
                                         std::size_t p, std::size_t m,
                                         std::map<std::string, std::vector<MultiPoly>> modes)
    : vars_(std::move(variables)), ny_(ny), nu_(nu), p_(p), m_(m) {
  if (nu_ == 0 || nu_ > ny_) throw std::invalid_argument("parametrization type requires 0 < nu <= ny");
  if (p_ == 0 || m_ == 0) throw std::invalid_argument("parametrization dimensions must be positive");
  if (modes.empty()) throw std::invalid_argument("parametrization needs at least one mode");
  for (auto& [q, entries] : modes) {
    if (entries.size() != p_ * dim())
      throw std::invalid_argument("mode '" + q + "' has " + std::to_string(entries.size()) +
                                  " coefficient polynomials, expected " + std::to_string(p_ * dim()));
    std::vector<MultiPoly> normalized;
    for (const MultiPoly& f : entries) normalized.push_back(f.embed(vars_));
    modes_.emplace(q, std::move(normalized));
  }
}

PolyParametrization PolyParametrization::constant(const SarxModel& model) {
  std::map<std::string, std::vector<MultiPoly>> modes;
  const std::vector<std::string> none;
  for (const auto& [q, h] : model.modes()) {
    std::vector<MultiPoly> entries;
    for (std::size_t r = 0; r < h.rows(); ++r)
      for (std::size_t c = 0; c < h.cols(); ++c) entries.push_back(MultiPoly::constant(none, h(r, c)));
    modes.emplace(q, std::move(entries));
  }
  return PolyParametrization(none, model.ny(), model.nu(), model.p(), model.m(), std::move(modes));
}

std::vector<std::string> PolyParametrization::labels() const {
  std::vector<std::string> out;
  for (const auto& [q, e] : modes_) out.push_back(q);
  return out;
}

const MultiPoly& PolyParametrization::coefficient(const std::string& q, std::size_t i) const {
  if (!isSiso()) throw std::invalid_argument("scalar coefficient polynomials need a SISO parametrization");
  auto it = modes_.find(q);
  if (it == modes_.end()) throw std::invalid_argument("unknown mode '" + q + "'");
  if (i == 0 || i > dim()) throw std::out_of_range("coefficient index out of range");
  return it->second[i - 1];
}

SarxModel PolyParametrization::instantiate(const RatVector& theta) const {
  if (theta.size() != vars_.size())
    throw std::invalid_argument("parameter vector has length " + std::to_string(theta.size()) + ", expected " +
                                std::to_string(vars_.size()));
  std::map<std::string, RatMatrix> modes;
  for (const auto& [q, entries] : modes_) {
    RatMatrix h(p_, dim());
    for (std::size_t r = 0; r < p_; ++r)
      for (std::size_t c = 0; c < dim(); ++c) h(r, c) = entries[r * dim() + c].evaluate(theta);
    modes.emplace(q, std::move(h));
  }
  return SarxModel(ny_, nu_, p_, m_, std::move(modes));
}

namespace {

std::string freshVariableName(const std::vector<std::string>& taken) {
  std::string name = "z";
  while (std::find(taken.begin(), taken.end(), name) != taken.end()) name += "_";
  return name;
}

MultiPoly assemble(const ZPoly<MultiPoly>& coeffs, const MultiPoly& z, const MultiPoly& zero) {
  MultiPoly out = zero;
  MultiPoly power = MultiPoly::constant(zero.variables(), 1);
  for (const MultiPoly& c : coeffs) {
    out += c * power;
    power = power * z;
  }
  return out;
}

}  // namespace

SymbolicTheorem2Data symbolicTheorem2(const PolyParametrization& par) {
  if (!par.isSiso()) throw std::invalid_argument("symbolicTheorem2 requires a SISO parametrization");
  SymbolicTheorem2Data out;
  out.ring = par.variables();
  out.zIndex = out.ring.size();
  out.ring.push_back(freshVariableName(par.variables()));
  const MultiPoly zero(out.ring);
  const MultiPoly one = MultiPoly::constant(out.ring, 1);
  const MultiPoly z = MultiPoly::variable(out.ring, out.zIndex);

  std::map<std::string, std::vector<MultiPoly>> rows;
  for (const auto& [q, entries] : par.modes()) {
    std::vector<MultiPoly> lifted;
    for (const MultiPoly& f : entries) lifted.push_back(f.embed(out.ring));
    rows.emplace(q, std::move(lifted));
  }
  const std::size_t ny = par.ny(), nu = par.nu();
  for (const auto& [q, h] : rows) {
    out.chi.emplace(q, assemble(denominatorPoly(h, ny, zero, one), z, zero));
    out.upsilon.emplace(q, assemble(autoregressivePoly(h, ny, zero), z, zero));
  }
  for (const auto& [from, hFrom] : rows)
    for (const auto& [to, hTo] : rows) {
      const auto seq = couplingSequence(hFrom, hTo, ny, nu, zero, one);
      out.phi.emplace(ModePair{from, to}, assemble(seq.phi, z, zero));
    }
  return out;
}

bool IdentifiableRegion::contains(const RatVector& theta) const {
  return std::any_of(s.begin(), s.end(), [&](const MultiPoly& f) { return !isZero(f.evaluate(theta)); });
}

IdentifiableRegion procedure1(const PolyParametrization& par, bool diagonalPairs) {
  if (!par.isSiso()) throw std::invalid_argument("procedure1 requires a SISO parametrization");
  const SymbolicTheorem2Data sym = symbolicTheorem2(par);
  const std::size_t d = par.parameterCount();
  const std::size_t ny = par.ny(), n = par.ny() + par.nu();
  const MonomialOrder elim = MonomialOrder::elimination(d + 1, {sym.zIndex});
  const MonomialOrder paramOrder = MonomialOrder::grevlex(d);

  IdentifiableRegion region;
  region.variables = par.variables();
  std::vector<MultiPoly> unionA, unionB;
  for (const ModePair& pr : orderedPairs(par.labels(), diagonalPairs)) {
    const auto& [q, qh] = pr;
    PairIntermediates inter;
    inter.sA = eliminationIdeal(Ideal(sym.ring, {sym.chi.at(q), sym.phi.at(pr)}, elim), {sym.zIndex});
    inter.sBPrime = eliminationIdeal(Ideal(sym.ring, {sym.chi.at(q), sym.upsilon.at(qh)}, elim), {sym.zIndex});
    const MultiPoly& leadQ = par.coefficient(q, n);
    inter.scaling = leadQ * (par.coefficient(qh, ny) * leadQ - par.coefficient(q, ny) * par.coefficient(qh, n));
    for (const MultiPoly& f : inter.sBPrime) {
      MultiPoly g = f * inter.scaling;
      if (!g.isZero()) inter.sB.push_back(std::move(g));
    }
    unionA.insert(unionA.end(), inter.sA.begin(), inter.sA.end());
    unionB.insert(unionB.end(), inter.sB.begin(), inter.sB.end());
    region.pairs.emplace(pr, std::move(inter));
  }
  const Ideal ia(region.variables, unionA, paramOrder);
  const Ideal ib(region.variables, unionB, paramOrder);
  region.iA = ia.basis();
  region.iB = ib.basis();
  region.s = idealProduct(ia, ib).basis();
  return region;
}

RegionMembership verifyRegionMembership(const PolyParametrization& par, const IdentifiableRegion& region,
                                        const RatVector& theta) {
  if (theta.size() != region.variables.size())
    throw std::invalid_argument("parameter vector length does not match the region's variables");
  RegionMembership out;
  out.inside = region.contains(theta);
  if (out.inside) {
    const auto verdict = checkStrongMinimality(par.instantiate(theta), MinimalityMethod::Exact);
    out.strongMinimal = verdict.strongMinimal;
    out.consistent = verdict.strongMinimal.value_or(false);
  }
  return out;
}

std::string toString(InjectivityEvidence::Kind kind) {
  switch (kind) {
    case InjectivityEvidence::Kind::ProvenAffine:
      return "proven-affine";
    case InjectivityEvidence::Kind::Asserted:
      return "asserted";
    case InjectivityEvidence::Kind::NoCollisionFound:
      return "no-collision-found";
    case InjectivityEvidence::Kind::Collision:
      return "collision";
  }
  return "no-collision-found";
}

Rational sampleParameterValue(std::mt19937_64& rng) {
  static const int denominators[] = {1, 2, 3};
  std::uniform_int_distribution<int> num(-10, 10);
  std::uniform_int_distribution<int> den(0, 2);
  while (true) {
    const int a = num(rng);
    const int b = denominators[den(rng)];
    if (a == 0) continue;
    Rational r(a, b);
    r.canonicalize();
    return r;
  }
}

RatVector sampleParameter(std::size_t d, std::mt19937_64& rng) {
  RatVector theta(d);
  for (auto& v : theta) v = sampleParameterValue(rng);
  return theta;
}

namespace {

struct AffinePart {
  RatMatrix linear;       // linear parts of the affine coefficient polynomials
  bool wholeMapAffine = true;
};

AffinePart affinePart(const PolyParametrization& par) {
  const std::size_t d = par.parameterCount();
  AffinePart out;
  std::vector<RatVector> rows;
  for (const auto& [q, entries] : par.modes())
    for (const MultiPoly& f : entries) {
      if (f.totalDegree() > 1) {
        out.wholeMapAffine = false;
        continue;
      }
      RatVector row(d);
      for (const auto& [mono, c] : f.terms())
        for (std::size_t v = 0; v < d; ++v)
          if (mono[v] == 1) row[v] = c;
      rows.push_back(std::move(row));
    }
  out.linear = RatMatrix::fromRows(rows, d);
  return out;
}

std::vector<RatVector> collisionCandidates(const RatVector& theta, std::mt19937_64& rng) {
  const std::size_t d = theta.size();
  std::vector<RatVector> out;
  if (d <= 8) {
    for (unsigned mask = 1; mask < (1u << d); ++mask) {
      RatVector t = theta;
      for (std::size_t i = 0; i < d; ++i)
        if (mask & (1u << i)) t[i] = -t[i];
      out.push_back(std::move(t));
    }
  } else {
    for (std::size_t i = 0; i < d; ++i) {
      RatVector t = theta;
      t[i] = -t[i];
      out.push_back(std::move(t));
    }
    RatVector all = theta;
    for (auto& v : all) v = -v;
    out.push_back(std::move(all));
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      RatVector t = theta;
      std::swap(t[i], t[j]);
      out.push_back(std::move(t));
    }
  out.push_back(sampleParameter(d, rng));
  return out;
}

}  // namespace

InjectivityEvidence injectivityProbe(const PolyParametrization& par, std::size_t trials, std::uint64_t seed) {
  InjectivityEvidence ev;
  const std::size_t d = par.parameterCount();
  // Affine coefficient polynomials whose linear parts already have full rank
  // separate any two distinct parameter vectors.
  const AffinePart affine = affinePart(par);
  if (d == 0 || rank(affine.linear) == d) {
    ev.kind = InjectivityEvidence::Kind::ProvenAffine;
    return ev;
  }
  std::mt19937_64 rng(seed);
  if (affine.wholeMapAffine) {
    // Moving along the kernel of the linear part leaves every coefficient unchanged.
    const RatVector theta = sampleParameter(d, rng);
    RatVector other = theta;
    const RatVector step = kernelBasis(affine.linear).front().column(0);
    for (std::size_t i = 0; i < d; ++i) other[i] += step[i];
    ev.kind = InjectivityEvidence::Kind::Collision;
    ev.collision = std::make_pair(theta, other);
    return ev;
  }
  for (std::size_t t = 0; t < trials; ++t) {
    ++ev.trials;
    const RatVector theta = sampleParameter(d, rng);
    const SarxModel base = par.instantiate(theta);
    for (const RatVector& other : collisionCandidates(theta, rng)) {
      if (other == theta) continue;
      if (par.instantiate(other) == base) {
        ev.kind = InjectivityEvidence::Kind::Collision;
        ev.collision = std::make_pair(theta, other);
        return ev;
      }
    }
  }
  ev.kind = InjectivityEvidence::Kind::NoCollisionFound;
  return ev;
}

GenericityResult genericityWitness(const PolyParametrization& par, std::size_t samples, std::uint64_t seed) {
  GenericityResult out;
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    ++out.attempts;
    const RatVector theta = sampleParameter(par.parameterCount(), rng);
    const auto verdict = checkStrongMinimality(par.instantiate(theta), MinimalityMethod::Exact);
    if (verdict.strongMinimal.value_or(false)) {
      out.witness = theta;
      return out;
    }
    ++out.failures;
  }
  return out;
}

IdentifiabilityReport identifiabilityVerdict(const PolyParametrization& par, const IdentifiableRegion& region,
                                             const InjectivityEvidence& evidence) {
  IdentifiabilityReport r;
  r.regionNonempty = !region.empty();
  r.injectivity = evidence.kind;
  if (!par.isSiso()) r.missingHypotheses.push_back("siso");
  if (!evidence.affirmative()) r.missingHypotheses.push_back("injectivity");
  if (!r.regionNonempty) r.missingHypotheses.push_back("strongly-minimal-region");
  r.identifiable = r.missingHypotheses.empty();
  return r;
}

}  // namespace sarx
