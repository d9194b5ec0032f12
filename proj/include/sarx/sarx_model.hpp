#ifndef SARX_SARX_MODEL_HPP
#define SARX_SARX_MODEL_HPP

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "sarx/matrix.hpp"
#include "sarx/unipoly.hpp"

namespace sarx {

/// Switched ARX system: one coefficient row block h_q per discrete mode,
/// y_t = h_{q_t} * phi_t with phi_t = (y_{t-1..t-ny}, u_{t-1..t-nu}).
class SarxModel {
 public:
  SarxModel(std::size_t ny, std::size_t nu, std::size_t p, std::size_t m, std::map<std::string, RatMatrix> modes);

  std::size_t ny() const { return ny_; }
  std::size_t nu() const { return nu_; }
  std::size_t p() const { return p_; }
  std::size_t m() const { return m_; }
  /// Regressor length p*ny + m*nu, also the associated state dimension.
  std::size_t dim() const { return p_ * ny_ + m_ * nu_; }
  bool isSiso() const { return p_ == 1 && m_ == 1; }

  /// Mode labels in ascending string order.
  std::vector<std::string> labels() const;
  const std::map<std::string, RatMatrix>& modes() const { return modes_; }
  bool hasMode(const std::string& q) const { return modes_.count(q) != 0; }
  const RatMatrix& coefficients(const std::string& q) const;
  /// SISO coefficient h_q^i with 1-based i in 1..ny+nu.
  const Rational& coefficient(const std::string& q, std::size_t i) const;

  friend bool operator==(const SarxModel& a, const SarxModel& b) {
    return a.ny_ == b.ny_ && a.nu_ == b.nu_ && a.p_ == b.p_ && a.m_ == b.m_ && a.modes_ == b.modes_;
  }

 private:
  std::size_t ny_, nu_, p_, m_;
  std::map<std::string, RatMatrix> modes_;
};

/// Convenience constructor for SISO models from coefficient rows.
SarxModel sisoModel(std::size_t ny, std::size_t nu, const std::map<std::string, RatVector>& rows);

struct HybridStep {
  std::string mode;
  RatVector input;

  friend bool operator==(const HybridStep&, const HybridStep&) = default;
};
using HybridWord = std::vector<HybridStep>;

/// Outputs y_0..y_{T-1} for a word of length T, zero initial conditions.
std::vector<RatVector> simulate(const SarxModel& model, const HybridWord& word);

/// Word with uniformly drawn modes and inputs in [inputLo, inputHi].
HybridWord randomWord(const std::vector<std::string>& labels, std::size_t m, std::size_t length,
                      std::mt19937_64& rng, int inputLo = -3, int inputHi = 3);

struct ArxMode {
  UniPoly numerator;    // sum_j h^{ny+j} z^{nu-j}
  UniPoly denominator;  // z^ny - sum_j h^j z^{ny-j}
};

ArxMode arxTransfer(const SarxModel& model, const std::string& q);

/// The single ARX system of mode q admits no smaller equivalent ARX: its
/// transfer function z^{ny-nu} N / chi is in lowest terms and the last input
/// coefficient is not a removable zero.
bool arxIsMinimal(const SarxModel& model, const std::string& q);

/// Drop the last input lag when its coefficients vanish in every mode.
SarxModel reduceTrailingZero(const SarxModel& model);

/// Randomized test that both models produce identical outputs on sampled
/// words. A false answer is a proof of inequivalence; true is evidence.
bool equivalentOnSamples(const SarxModel& a, const SarxModel& b, std::size_t trials, std::size_t horizon,
                         std::uint64_t seed);
/// Horizon defaults to 2 * (max ny + max nu) + 2.
bool equivalentOnSamples(const SarxModel& a, const SarxModel& b, std::size_t trials, std::uint64_t seed);

}  // namespace sarx

#endif  // SARX_SARX_MODEL_HPP
