#include "sarx/sarx_model.hpp"

#include <algorithm>
#include <stdexcept>

namespace sarx {

SarxModel::SarxModel(std::size_t ny, std::size_t nu, std::size_t p, std::size_t m,
                     std::map<std::string, RatMatrix> modes)
    : ny_(ny), nu_(nu), p_(p), m_(m), modes_(std::move(modes)) {
  if (nu_ == 0 || nu_ > ny_) throw std::invalid_argument("SARX type requires 0 < nu <= ny");
  if (p_ == 0 || m_ == 0) throw std::invalid_argument("SARX dimensions p and m must be positive");
  if (modes_.empty()) throw std::invalid_argument("SARX model needs at least one mode");
  for (const auto& [q, h] : modes_) {
    if (h.rows() != p_ || h.cols() != dim())
      throw std::invalid_argument("mode '" + q + "' has coefficient shape " + std::to_string(h.rows()) + "x" +
                                  std::to_string(h.cols()) + ", expected " + std::to_string(p_) + "x" +
                                  std::to_string(dim()));
  }
}

std::vector<std::string> SarxModel::labels() const {
  std::vector<std::string> out;
  for (const auto& [q, h] : modes_) out.push_back(q);
  return out;
}

const RatMatrix& SarxModel::coefficients(const std::string& q) const {
  auto it = modes_.find(q);
  if (it == modes_.end()) throw std::invalid_argument("unknown mode '" + q + "'");
  return it->second;
}

const Rational& SarxModel::coefficient(const std::string& q, std::size_t i) const {
  if (!isSiso()) throw std::invalid_argument("scalar coefficients need a SISO model");
  if (i == 0 || i > dim()) throw std::out_of_range("coefficient index out of range");
  return coefficients(q)(0, i - 1);
}

SarxModel sisoModel(std::size_t ny, std::size_t nu, const std::map<std::string, RatVector>& rows) {
  std::map<std::string, RatMatrix> modes;
  for (const auto& [q, r] : rows) modes.emplace(q, RatMatrix::rowVector(r));
  return SarxModel(ny, nu, 1, 1, std::move(modes));
}

std::vector<RatVector> simulate(const SarxModel& model, const HybridWord& word) {
  const std::size_t p = model.p(), m = model.m(), ny = model.ny(), nu = model.nu();
  std::vector<RatVector> ys;
  ys.reserve(word.size());
  for (std::size_t t = 0; t < word.size(); ++t) {
    const HybridStep& step = word[t];
    if (step.input.size() != m)
      throw std::invalid_argument("input at step " + std::to_string(t) + " has dimension " +
                                  std::to_string(step.input.size()) + ", expected " + std::to_string(m));
    const RatMatrix& h = model.coefficients(step.mode);
    RatVector y(p);
    for (std::size_t j = 1; j <= ny && j <= t; ++j) {
      const RatVector& past = ys[t - j];
      for (std::size_t r = 0; r < p; ++r)
        for (std::size_t k = 0; k < p; ++k) y[r] += h(r, (j - 1) * p + k) * past[k];
    }
    for (std::size_t j = 1; j <= nu && j <= t; ++j) {
      const RatVector& past = word[t - j].input;
      for (std::size_t r = 0; r < p; ++r)
        for (std::size_t k = 0; k < m; ++k) y[r] += h(r, ny * p + (j - 1) * m + k) * past[k];
    }
    ys.push_back(std::move(y));
  }
  return ys;
}

HybridWord randomWord(const std::vector<std::string>& labels, std::size_t m, std::size_t length,
                      std::mt19937_64& rng, int inputLo, int inputHi) {
  if (labels.empty()) throw std::invalid_argument("randomWord: no mode labels");
  std::uniform_int_distribution<std::size_t> pick(0, labels.size() - 1);
  std::uniform_int_distribution<int> value(inputLo, inputHi);
  HybridWord w(length);
  for (auto& step : w) {
    step.mode = labels[pick(rng)];
    step.input.resize(m);
    for (auto& u : step.input) u = value(rng);
  }
  return w;
}

ArxMode arxTransfer(const SarxModel& model, const std::string& q) {
  if (!model.isSiso()) throw std::invalid_argument("transfer functions are defined for SISO models only");
  const std::size_t ny = model.ny(), nu = model.nu();
  RatVector den(ny + 1), num(nu);
  den[ny] = 1;
  for (std::size_t j = 1; j <= ny; ++j) den[ny - j] = -model.coefficient(q, j);
  for (std::size_t j = 1; j <= nu; ++j) num[nu - j] = model.coefficient(q, ny + j);
  return {UniPoly(num), UniPoly(den)};
}

bool arxIsMinimal(const SarxModel& model, const std::string& q) {
  const ArxMode arx = arxTransfer(model, q);
  const std::size_t ny = model.ny(), nu = model.nu();
  if (nu >= 2 && isZero(model.coefficient(q, ny + nu))) return false;
  const UniPoly fullNumerator = UniPoly::monomial(1, static_cast<unsigned>(ny - nu)) * arx.numerator;
  return coprime(fullNumerator, arx.denominator);
}

SarxModel reduceTrailingZero(const SarxModel& model) {
  if (model.nu() < 2) throw std::invalid_argument("reduceTrailingZero: needs nu >= 2");
  const std::size_t keep = model.dim() - model.m();
  std::map<std::string, RatMatrix> reduced;
  for (const auto& [q, h] : model.modes()) {
    if (!h.block(0, keep, h.rows(), model.m()).isZero())
      throw std::invalid_argument("reduceTrailingZero: last input coefficients of mode '" + q + "' are nonzero");
    reduced.emplace(q, h.block(0, 0, h.rows(), keep));
  }
  return SarxModel(model.ny(), model.nu() - 1, model.p(), model.m(), std::move(reduced));
}

bool equivalentOnSamples(const SarxModel& a, const SarxModel& b, std::size_t trials, std::size_t horizon,
                         std::uint64_t seed) {
  if (a.p() != b.p() || a.m() != b.m()) throw std::invalid_argument("equivalentOnSamples: dimension mismatch");
  if (a.labels() != b.labels()) throw std::invalid_argument("equivalentOnSamples: mode sets differ");
  std::mt19937_64 rng(seed);
  const auto labels = a.labels();
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const HybridWord w = randomWord(labels, a.m(), horizon, rng);
    if (simulate(a, w) != simulate(b, w)) return false;
  }
  return true;
}

bool equivalentOnSamples(const SarxModel& a, const SarxModel& b, std::size_t trials, std::uint64_t seed) {
  const std::size_t horizon = 2 * (std::max(a.ny(), b.ny()) + std::max(a.nu(), b.nu())) + 2;
  return equivalentOnSamples(a, b, trials, horizon, seed);
}

}  // namespace sarx
