#ifndef SARX_MINIMALITY_HPP
#define SARX_MINIMALITY_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sarx/lss.hpp"
#include "sarx/sarx_model.hpp"
#include "sarx/unipoly.hpp"

namespace sarx {

using ModePair = std::pair<std::string, std::string>;

struct PairPolynomials {
  std::vector<UniPoly> psi;  // psi_{from,to,0..nu}
  std::vector<RatVector> d;  // d_0..d_nu
  UniPoly phi;               // phi_{from,to}
};

/// Coprimality data for SISO models. Pair keys are (from, to) in the sense
/// psi_{from,to,j}(A_from) e_1 = A_to^j e_1; condition (A) pairs chi_from
/// with phi_{from,to}.
struct Theorem2Data {
  std::map<std::string, UniPoly> chi;
  std::map<std::string, UniPoly> upsilon;
  std::map<ModePair, PairPolynomials> pairs;  // all ordered pairs, diagonal included

  const PairPolynomials& pair(const std::string& from, const std::string& to) const;
};

Theorem2Data theorem2Polynomials(const SarxModel& model);

/// Ordered pairs in label order; diagonal pairs only when requested.
std::vector<ModePair> orderedPairs(const std::vector<std::string>& labels, bool includeDiagonal);

struct ConditionAWitness {
  ModePair pair;
  UniPoly gcd;  // always 1 for a witness
};

/// First pair (q0, q1) with gcd(chi_{q0}, phi_{q0,q1}) = 1.
std::optional<ConditionAWitness> checkConditionA(const Theorem2Data& data, const std::vector<ModePair>& pairs);

struct ConditionBWitness {
  ModePair pair;      // (q2, q3)
  Rational scalar;    // h_{q3}^{ny} - (h_{q3}^{n}/h_{q2}^{n}) h_{q2}^{ny}
};

/// First pair q2 != q3 with upsilon_{q3} coprime to chi_{q2}, h_{q2}^n != 0
/// and a nonzero scalar.
std::optional<ConditionBWitness> checkConditionB(const Theorem2Data& data, const SarxModel& model);

/// h_{q3}^{ny} - (h_{q3}^{n}/h_{q2}^{n}) h_{q2}^{ny}; requires h_{q2}^n != 0.
Rational conditionBScalar(const SarxModel& model, const std::string& q2, const std::string& q3);

/// gamma_1..gamma_nu for mode q, with e_{ny+j}^T = e_{ny}^T chi_q(A_q) gamma_j(A_q).
/// Requires h_q^n != 0.
std::vector<UniPoly> rowRecoveryPolynomials(const SarxModel& model, const std::string& q);

enum class MinimalityMethod { Exact, Theorem2, Both };

struct MinimalityVerdict {
  /// Unset when only the sufficient test ran and it was inconclusive.
  std::optional<bool> strongMinimal;
  bool sufficientConditionsHold = false;
  bool theorem2Evaluated = false;
  bool exactEvaluated = false;
  /// Set when the sufficient conditions hold yet the exact test disagrees.
  bool crossCheckFailed = false;
  std::optional<ConditionAWitness> conditionA;
  std::optional<ConditionBWitness> conditionB;
  std::optional<LssMinimality> certificate;
  std::size_t stateDimension = 0;
};

MinimalityVerdict checkStrongMinimality(const SarxModel& model, MinimalityMethod method,
                                        bool diagonalPairs = false);

struct SufficientMinimality {
  bool certified = false;
  /// "arx-subsystem", "strong-minimality" or "unknown".
  std::string reason;
  std::optional<std::string> mode;
};

SufficientMinimality sarxMinimalitySufficient(const SarxModel& model);

struct TypeConsistency {
  bool consistent = true;
  bool bothCertifiedMinimal = false;
  bool sampleEquivalent = false;
};

/// Two equivalent minimal SISO models must share their type. Reports an
/// inconsistency when types differ yet the models agree on samples.
TypeConsistency checkTypeConsistency(const SarxModel& a, const SarxModel& b, std::size_t trials = 50,
                                     std::uint64_t seed = 0);

}  // namespace sarx

#endif  // SARX_MINIMALITY_HPP
