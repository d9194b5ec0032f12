#ifndef SARX_IDENTIFIABILITY_HPP
#define SARX_IDENTIFIABILITY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sarx/minimality.hpp"
#include "sarx/multipoly.hpp"
#include "sarx/sarx_model.hpp"

namespace sarx {

/// Polynomial map from parameters to SARX coefficients. Each mode holds
/// p * (p*ny + m*nu) polynomials in row-major order.
class PolyParametrization {
 public:
  PolyParametrization(std::vector<std::string> variables, std::size_t ny, std::size_t nu, std::size_t p,
                      std::size_t m, std::map<std::string, std::vector<MultiPoly>> modes);

  /// Parametrization with no free variables that always yields `model`.
  static PolyParametrization constant(const SarxModel& model);

  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t parameterCount() const { return vars_.size(); }
  std::size_t ny() const { return ny_; }
  std::size_t nu() const { return nu_; }
  std::size_t p() const { return p_; }
  std::size_t m() const { return m_; }
  std::size_t dim() const { return p_ * ny_ + m_ * nu_; }
  bool isSiso() const { return p_ == 1 && m_ == 1; }
  std::vector<std::string> labels() const;
  const std::map<std::string, std::vector<MultiPoly>>& modes() const { return modes_; }
  /// SISO coefficient polynomial with 1-based index i.
  const MultiPoly& coefficient(const std::string& q, std::size_t i) const;

  SarxModel instantiate(const RatVector& theta) const;

 private:
  std::vector<std::string> vars_;
  std::size_t ny_, nu_, p_, m_;
  std::map<std::string, std::vector<MultiPoly>> modes_;
};

/// Coprimality polynomials with parameter-polynomial coefficients, living
/// in the ring (parameters..., z) with z last.
struct SymbolicTheorem2Data {
  std::vector<std::string> ring;
  std::size_t zIndex = 0;
  std::map<std::string, MultiPoly> chi;
  std::map<std::string, MultiPoly> upsilon;
  std::map<ModePair, MultiPoly> phi;  // keyed (from, to) as in Theorem2Data
};

SymbolicTheorem2Data symbolicTheorem2(const PolyParametrization& par);

struct PairIntermediates {
  std::vector<MultiPoly> sA;       // elimination of <chi_q, phi_{q,qhat}>
  std::vector<MultiPoly> sBPrime;  // elimination of <chi_q, upsilon_qhat>
  std::vector<MultiPoly> sB;       // sBPrime scaled by the lead/ratio polynomial
  MultiPoly scaling;
};

struct IdentifiableRegion {
  std::vector<std::string> variables;
  std::vector<MultiPoly> s;  // region: some element is nonzero
  std::vector<MultiPoly> iA;
  std::vector<MultiPoly> iB;
  std::map<ModePair, PairIntermediates> pairs;

  bool contains(const RatVector& theta) const;
  /// True when S generates the zero ideal, so no parameter qualifies.
  bool empty() const { return s.empty(); }
};

IdentifiableRegion procedure1(const PolyParametrization& par, bool diagonalPairs = false);

struct RegionMembership {
  bool inside = false;
  /// Exact strong-minimality of the instance, evaluated for points inside.
  std::optional<bool> strongMinimal;
  bool consistent = true;
};

RegionMembership verifyRegionMembership(const PolyParametrization& par, const IdentifiableRegion& region,
                                        const RatVector& theta);

struct InjectivityEvidence {
  enum class Kind { ProvenAffine, Asserted, NoCollisionFound, Collision };
  Kind kind = Kind::NoCollisionFound;
  std::optional<std::pair<RatVector, RatVector>> collision;
  std::size_t trials = 0;

  bool affirmative() const { return kind == Kind::ProvenAffine || kind == Kind::Asserted; }
};

std::string toString(InjectivityEvidence::Kind kind);

/// Exact proof for affine maps, randomized refutation otherwise.
InjectivityEvidence injectivityProbe(const PolyParametrization& par, std::size_t trials, std::uint64_t seed);

/// Rational with numerator in [-10, 10] \ {0} and denominator in {1, 2, 3}.
Rational sampleParameterValue(std::mt19937_64& rng);
RatVector sampleParameter(std::size_t d, std::mt19937_64& rng);

struct GenericityResult {
  std::optional<RatVector> witness;
  std::size_t attempts = 0;
  std::size_t failures = 0;
};

GenericityResult genericityWitness(const PolyParametrization& par, std::size_t samples, std::uint64_t seed);

struct IdentifiabilityReport {
  bool identifiable = false;
  bool regionNonempty = false;
  InjectivityEvidence::Kind injectivity = InjectivityEvidence::Kind::NoCollisionFound;
  std::vector<std::string> missingHypotheses;
};

IdentifiabilityReport identifiabilityVerdict(const PolyParametrization& par, const IdentifiableRegion& region,
                                             const InjectivityEvidence& evidence);

}  // namespace sarx

#endif  // SARX_IDENTIFIABILITY_HPP
