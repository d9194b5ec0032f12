// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sarx/groebner.hpp"
#include "sarx/identifiability.hpp"
#include "sarx/json_io.hpp"
#include "sarx/lss.hpp"
#include "sarx/minimality.hpp"
#include "support/random_models.hpp"
#include "support/structure_identities.hpp"

using namespace sarx;

namespace {

std::string fx(const std::string& name) { return std::string(SARX_FIXTURE_DIR) + "/" + name; }

SarxModel loadModel(const std::string& name) { return sarxFromJson(readJsonFile(fx(name))); }
PolyParametrization loadFamily(const std::string& name) { return parametrizationFromJson(readJsonFile(fx(name))); }

UniPoly poly(std::initializer_list<long> ascending) {
  std::vector<Rational> c;
  for (long v : ascending) c.emplace_back(v);
  return UniPoly(c);
}

// Collects named sub-checks; a criterion passes when all of them pass.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failed_.push_back(what);
  }
  bool ok() const { return failed_.empty(); }
  std::string summary() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < failed_.size(); ++i) os << (i ? "; " : "") << failed_[i];
    return os.str();
  }

 private:
  std::vector<std::string> failed_;
};

bool sameIdeal(const std::vector<std::string>& vars, const std::vector<MultiPoly>& a,
               const std::vector<MultiPoly>& b) {
  return idealEquals(Ideal(vars, a), Ideal(vars, b));
}

void ac1(Checks& c) {
  const SarxModel model = loadModel("two_mode.json");
  const Theorem2Data data = theorem2Polynomials(model);
  c.expect(data.chi.at("1") == poly({15, -8, 1}), "chi_1");
  c.expect(data.pair("1", "2").psi[1] == poly({-7, 1}), "psi_{1,2,1}");
  c.expect(data.upsilon.at("2") == poly({2, 1}), "upsilon_2");
  // The coupling polynomial tested against chi_1 in condition (A).
  c.expect(data.pair("1", "2").phi == poly({-6, 1}), "coupling polynomial z-6");
  const MinimalityVerdict v = checkStrongMinimality(model, MinimalityMethod::Both);
  c.expect(v.conditionB.has_value() && v.conditionB->scalar == -3, "condition (B) scalar -3");
  c.expect(v.strongMinimal.value_or(false), "strongly minimal");
}

void ac2(Checks& c) {
  const MinimalityVerdict padded = checkStrongMinimality(loadModel("padded_pair.json"), MinimalityMethod::Both);
  c.expect(padded.strongMinimal.has_value() && !*padded.strongMinimal, "counterexample not strongly minimal");
  c.expect(padded.certificate.has_value() && padded.certificate->unobservableDim > 0, "nonzero unobservable space");
  const SarxModel twoMode = loadModel("two_mode.json");
  c.expect(checkStrongMinimality(twoMode, MinimalityMethod::Exact).strongMinimal.value_or(false),
           "second model strongly minimal");
  c.expect(!arxIsMinimal(twoMode, "1") && !arxIsMinimal(twoMode, "2"), "neither ARX mode minimal");
}

void ac3(Checks& c) {
  {
    const PolyParametrization par = loadFamily("sum_family.json");
    const IdentifiableRegion region = procedure1(par);
    const auto& v = region.variables;
    const MultiPoly sum = MultiPoly::variable(v, 0) + MultiPoly::variable(v, 1);
    c.expect(sameIdeal(v, region.iA, {sum}), "family 1: I_A = <z1+z2>");
    c.expect(sameIdeal(v, region.iB, {sum.pow(3)}), "family 1: I_B = <(z1+z2)^3>");
    c.expect(sameIdeal(v, region.s, {sum.pow(4)}), "family 1: S = <(z1+z2)^4>");
    c.expect(region.contains({1, 0}), "family 1: (1,0) inside");
    c.expect(!region.contains({1, -1}), "family 1: (1,-1) outside");
  }
  {
    const PolyParametrization par = loadFamily("difference_family.json");
    const IdentifiableRegion region = procedure1(par);
    const auto& v = region.variables;
    const MultiPoly z1 = MultiPoly::variable(v, 0), z2 = MultiPoly::variable(v, 1);
    c.expect(sameIdeal(v, region.iA, {MultiPoly::constant(v, 1)}), "family 2: I_A unit");
    c.expect(sameIdeal(v, region.s, {z1 * z1, z1 * z2, z2 * z2}), "family 2: S = <z1^2, z1 z2, z2^2>");
  }
}

void ac4(Checks& c) {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<std::size_t> order(1, 3), modes(1, 3), io(1, 2);
  int mismatches = 0;
  for (int trial = 0; trial < 120; ++trial) {
    SarxModel model = testing::randomSisoSarx(rng, 3, 3);
    if (trial >= 100) {
      const std::size_t ny = order(rng);
      model = testing::randomSarx(rng, ny, std::uniform_int_distribution<std::size_t>(1, ny)(rng), io(rng), io(rng),
                                  modes(rng));
    }
    const Lss sys = associatedLss(model);
    for (int w = 0; w < 10; ++w) {
      const HybridWord word = randomWord(model.labels(), model.m(), 15, rng);
      if (simulate(model, word) != simulateLss(sys, word)) ++mismatches;
    }
  }
  c.expect(mismatches == 0, std::to_string(mismatches) + " trace mismatches");
}

void ac5(Checks& c) {
  std::mt19937_64 rng(5);
  int violations = 0, sufficient = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const MinimalityVerdict v = checkStrongMinimality(testing::randomSisoSarx(rng), MinimalityMethod::Both);
    if (!v.sufficientConditionsHold) continue;
    ++sufficient;
    if (v.crossCheckFailed || !v.strongMinimal.value_or(false)) ++violations;
  }
  c.expect(violations == 0, std::to_string(violations) + " soundness violations");
  c.expect(sufficient > 0, "no model satisfied the conditions");
}

void ac6(Checks& c) {
  for (const char* name : {"two_mode.json", "two_mode_perturbed.json", "padded_pair.json", "padded_pair_reduced.json",
                           "engine_nominal_model.json", "zero_model.json"}) {
    const std::string err = testing::checkStructureIdentities(loadModel(name));
    c.expect(err.empty(), std::string(name) + ": " + err);
  }
  std::mt19937_64 rng(6);
  int done = 0;
  while (done < 100) {
    const SarxModel model = testing::randomSisoSarx(rng);
    if (!testing::trailingNonzero(model)) continue;
    ++done;
    const std::string err = testing::checkStructureIdentities(model);
    c.expect(err.empty(), "random model " + std::to_string(done) + ": " + err);
  }
}

bool rigidityHypothesis(const SarxModel& model) {
  for (const auto& [q, h] : model.modes()) {
    const std::size_t p = model.p();
    // trailing output block or trailing input block nonzero
    if (h.block(0, p * (model.ny() - 1), p, p) != RatMatrix(p, p)) return true;
    if (h.block(0, h.cols() - model.m(), p, model.m()) != RatMatrix(p, model.m())) return true;
  }
  return false;
}

void ac7(Checks& c) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> order(1, 3), modes(1, 3), io(1, 2);
  int done = 0;
  while (done < 50) {
    const std::size_t ny = order(rng);
    const SarxModel model = done % 2 == 0 ? testing::randomSisoSarx(rng)
                                          : testing::randomSarx(rng, ny, std::uniform_int_distribution<std::size_t>(
                                                                             1, ny)(rng),
                                                                io(rng), io(rng), modes(rng));
    if (!rigidityHypothesis(model)) continue;
    ++done;
    const Lss sys = associatedLss(model);
    const IsoSolution sol = findIsomorphisms(sys, sys);
    c.expect(sol.kind == IsoSolution::Kind::UniqueIdentity,
             "model " + std::to_string(done) + ": " + toString(sol.kind));
  }
}

void ac8(Checks& c) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<std::size_t> dim(1, 5), modes(1, 3), io(1, 2);
  for (int trial = 0; trial < 50; ++trial) {
    const Lss sys = testing::randomLss(rng, dim(rng), io(rng), io(rng), modes(rng), trial % 2 == 0);
    c.expect(reachableSpan(sys) == testing::reachableByEnumeration(sys), "reachable, system " + std::to_string(trial));
    c.expect(unobservableSpace(sys) == testing::unobservableByEnumeration(sys),
             "unobservable, system " + std::to_string(trial));
  }
}

void ac9(Checks& c) {
  const PolyParametrization par = loadFamily("bilinear_family.json");
  const IdentifiableRegion region = procedure1(par);
  const HybridWord word = wordFromJson(readJsonFile(fx("bilinear_word.json")));
  std::mt19937_64 rng(9);
  std::vector<RatVector> picks;
  while (picks.size() < 2) {
    const RatVector theta = sampleParameter(2, rng);
    if (theta[0] == 2 || !region.contains(theta)) continue;
    if (!picks.empty() && picks.front() == theta) continue;
    picks.push_back(theta);
  }
  std::vector<Rational> y3;
  for (const RatVector& th : picks) {
    const Rational y = simulate(par.instantiate(th), word).at(3)[0];
    y3.push_back(y);
    c.expect(y == 2 * th[0] + th[1] * th[0] - 2 * th[1], "y3 formula");
    c.expect(Rational((y - 2 * th[0]) / (th[0] - 2)) == th[1], "recovery of the second parameter");
  }
  c.expect(y3[0] != y3[1], "distinct parameters give distinct y3");
}

void ac10(Checks& c) {
  const PolyParametrization engine = loadFamily("engine_family.json");
  const RatVector nominal = parameterFromJson(readJsonFile(fx("engine_theta.json")));
  c.expect(checkStrongMinimality(engine.instantiate(nominal), MinimalityMethod::Exact).strongMinimal.value_or(false),
           "nominal parameter strongly minimal");
  const GenericityResult g = genericityWitness(engine, 20, 0);
  c.expect(g.witness.has_value() && *g.witness != nominal, "sampled witness for the engine family");
  const GenericityResult trivial = genericityWitness(loadFamily("trivial_family.json"), 20, 0);
  c.expect(trivial.witness.has_value(), "sampled witness for the trivial family");
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* title;
    double limitSeconds;
    std::function<void(Checks&)> body;
  };
  const std::vector<Criterion> criteria = {
      {"AC1", "worked two-mode example reproduced", 1, ac1},
      {"AC2", "counterexamples discriminated", 1, ac2},
      {"AC3", "identifiable region of the two-parameter families", 10, ac3},
      {"AC4", "SARX and associated LSS traces agree", 0, ac4},
      {"AC5", "sufficient conditions are sound", 0, ac5},
      {"AC6", "companion-structure identities", 0, ac6},
      {"AC7", "self-isomorphism is the identity", 0, ac7},
      {"AC8", "closure subspaces match word enumeration", 0, ac8},
      {"AC9", "two-parameter family distinguishable from y3", 0, ac9},
      {"AC10", "genericity witnesses", 0, ac10},
  };
  const auto suiteStart = std::chrono::steady_clock::now();
  int failures = 0;
  for (const Criterion& cr : criteria) {
    Checks checks;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.body(checks);
    } catch (const std::exception& e) {
      checks.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (cr.limitSeconds > 0 && secs > cr.limitSeconds) checks.expect(false, "time limit exceeded");
    const bool ok = checks.ok();
    failures += !ok;
    std::cout << cr.id << " " << (ok ? "PASS" : "FAIL") << " " << cr.title << " (" << secs << " s)";
    if (!ok) std::cout << " -- failed: " << checks.summary();
    std::cout << std::endl;
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - suiteStart).count();
  std::cout << "total " << total << " s, " << failures << " criteria failed" << std::endl;
  return failures == 0 && total < 120 ? 0 : 1;
}
