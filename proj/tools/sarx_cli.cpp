#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

#include "sarx/identifiability.hpp"
#include "sarx/json_io.hpp"
#include "sarx/lss.hpp"
#include "sarx/minimality.hpp"

namespace {

using sarx::Json;

struct Options {
  std::string format = "json";
  std::uint64_t seed = 0;
  std::string method = "both";
  bool diagonalPairs = false;
  bool compareLss = false;
  bool assumeInjective = false;
  std::size_t samples = 20;
  std::size_t trials = 50;
  std::string modelPath, wordPath, otherPath, paramPath;
  std::vector<std::string> thetaPoints;
};

// Exit codes: 0 positive verdict, 1 negative verdict, 2 input error.
constexpr int kInputError = 2;

void emit(const Json& report, const Options& opt) {
  if (opt.format == "text") {
    std::cout << sarx::renderText(report);
  } else {
    std::cout << report.dump(2) << "\n";
  }
}

sarx::MinimalityMethod parseMethod(const std::string& m) {
  if (m == "exact") return sarx::MinimalityMethod::Exact;
  if (m == "theorem2") return sarx::MinimalityMethod::Theorem2;
  return sarx::MinimalityMethod::Both;
}

int cmdCheckMin(const Options& opt) {
  const sarx::SarxModel model = sarx::sarxFromJson(sarx::readJsonFile(opt.modelPath));
  const auto method = parseMethod(opt.method);
  if (method != sarx::MinimalityMethod::Exact && !model.isSiso())
    throw sarx::InputError("the theorem2 and both methods need a SISO model; use --method exact");
  const auto verdict = sarx::checkStrongMinimality(model, method, opt.diagonalPairs);
  Json report = sarx::toJson(verdict);
  if (verdict.theorem2Evaluated) report["polynomials"] = sarx::toJson(sarx::theorem2Polynomials(model));
  emit(report, opt);
  return verdict.strongMinimal.value_or(false) ? 0 : 1;
}

int cmdCheckSufficient(const Options& opt) {
  const sarx::SarxModel model = sarx::sarxFromJson(sarx::readJsonFile(opt.modelPath));
  if (!model.isSiso()) throw sarx::InputError("check-sufficient needs a SISO model");
  const auto r = sarx::sarxMinimalitySufficient(model);
  Json arx = Json::object();
  for (const auto& q : model.labels()) arx[q] = sarx::arxIsMinimal(model, q);
  Json report = {{"result", r.certified ? "minimal-certified" : "unknown"},
                 {"reason", r.reason},
                 {"mode", r.mode ? Json(*r.mode) : Json(nullptr)},
                 {"arx_minimal", arx}};
  emit(report, opt);
  return r.certified ? 0 : 1;
}

int cmdSimulate(const Options& opt) {
  const sarx::SarxModel model = sarx::sarxFromJson(sarx::readJsonFile(opt.modelPath));
  const sarx::HybridWord word = sarx::wordFromJson(sarx::readJsonFile(opt.wordPath));
  std::vector<sarx::RatVector> trace;
  try {
    trace = sarx::simulate(model, word);
  } catch (const std::invalid_argument& e) {
    throw sarx::InputError(e.what());
  }
  Json report = {{"outputs", sarx::toJson(trace)}};
  int code = 0;
  if (opt.compareLss) {
    const bool agrees = sarx::simulateLss(sarx::associatedLss(model), word) == trace;
    report["lss_agrees"] = agrees;
    code = agrees ? 0 : 1;
  }
  emit(report, opt);
  return code;
}

int cmdToLss(const Options& opt) {
  const sarx::SarxModel model = sarx::sarxFromJson(sarx::readJsonFile(opt.modelPath));
  emit(sarx::toJson(sarx::associatedLss(model)), opt);
  return 0;
}

int cmdIso(const Options& opt) {
  const sarx::Lss a = sarx::lssOrSarxFromJson(sarx::readJsonFile(opt.modelPath));
  const sarx::Lss b = sarx::lssOrSarxFromJson(sarx::readJsonFile(opt.otherPath));
  sarx::IsoSolution iso;
  try {
    iso = sarx::findIsomorphisms(a, b);
  } catch (const std::invalid_argument& e) {
    throw sarx::InputError(e.what());
  }
  emit(sarx::toJson(iso), opt);
  return iso.kind == sarx::IsoSolution::Kind::None ? 1 : 0;
}

sarx::PolyParametrization loadParametrization(const Options& opt) {
  return sarx::parametrizationFromJson(sarx::readJsonFile(opt.paramPath));
}

sarx::RatVector parsePoint(const std::string& text, std::size_t d) {
  sarx::RatVector v;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    try {
      v.push_back(sarx::parseRational(item));
    } catch (const std::invalid_argument& e) {
      throw sarx::InputError(e.what());
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (v.size() != d)
    throw sarx::InputError("point '" + text + "' has " + std::to_string(v.size()) + " entries, expected " +
                           std::to_string(d));
  return v;
}

int cmdParamAnalyze(const Options& opt) {
  const auto par = loadParametrization(opt);
  if (!par.isSiso()) throw sarx::InputError("param-analyze needs a SISO parametrization");
  const auto region = sarx::procedure1(par, opt.diagonalPairs);
  Json report = sarx::toJson(region);
  if (!opt.thetaPoints.empty()) {
    Json members = Json::array();
    for (const auto& text : opt.thetaPoints) {
      const auto theta = parsePoint(text, par.parameterCount());
      const auto m = sarx::verifyRegionMembership(par, region, theta);
      members.push_back({{"theta", sarx::toJson(theta)},
                         {"inside", m.inside},
                         {"strong_minimal", m.strongMinimal ? Json(*m.strongMinimal) : Json(nullptr)}});
    }
    report["membership"] = members;
  }
  sarx::InjectivityEvidence ev;
  if (opt.assumeInjective) {
    ev.kind = sarx::InjectivityEvidence::Kind::Asserted;
  } else {
    ev = sarx::injectivityProbe(par, opt.trials, opt.seed);
  }
  report["identifiability"] = sarx::toJson(sarx::identifiabilityVerdict(par, region, ev));
  emit(report, opt);
  return region.empty() ? 1 : 0;
}

int cmdParamGeneric(const Options& opt) {
  const auto par = loadParametrization(opt);
  const auto g = sarx::genericityWitness(par, opt.samples, opt.seed);
  emit(sarx::toJson(g), opt);
  return g.witness ? 0 : 1;
}

int cmdParamInjective(const Options& opt) {
  const auto par = loadParametrization(opt);
  const auto ev = sarx::injectivityProbe(par, opt.trials, opt.seed);
  emit(sarx::toJson(ev), opt);
  return ev.kind == sarx::InjectivityEvidence::Kind::Collision ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact minimality and identifiability analysis of switched ARX systems"};
  app.require_subcommand(1);
  Options opt;

  auto addCommon = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--seed", opt.seed, "Random seed (SARX_SEED overrides)");
  };

  auto* checkMin = app.add_subcommand("check-min", "Decide strong minimality of a SARX model");
  checkMin->add_option("model", opt.modelPath, "SARX model JSON")->required();
  checkMin->add_option("--method", opt.method, "exact, theorem2 or both")
      ->check(CLI::IsMember({"exact", "theorem2", "both"}));
  checkMin->add_flag("--diagonal-pairs", opt.diagonalPairs, "Allow q0 = q1 in condition (A)");
  addCommon(checkMin);

  auto* checkSuff = app.add_subcommand("check-sufficient", "One-sided certificate of plain minimality");
  checkSuff->add_option("model", opt.modelPath, "SARX model JSON")->required();
  addCommon(checkSuff);

  auto* sim = app.add_subcommand("simulate", "Simulate a SARX model on a hybrid word");
  sim->add_option("model", opt.modelPath, "SARX model JSON")->required();
  sim->add_option("word", opt.wordPath, "Word JSON")->required();
  sim->add_flag("--compare-lss", opt.compareLss, "Also simulate the associated LSS and compare");
  addCommon(sim);

  auto* toLss = app.add_subcommand("to-lss", "Print the associated linear switched system");
  toLss->add_option("model", opt.modelPath, "SARX model JSON")->required();
  addCommon(toLss);

  auto* iso = app.add_subcommand("iso", "Classify isomorphisms between two systems");
  iso->add_option("a", opt.modelPath, "SARX or LSS JSON")->required();
  iso->add_option("b", opt.otherPath, "SARX or LSS JSON")->required();
  addCommon(iso);

  auto* analyze = app.add_subcommand("param-analyze", "Compute the identifiable sub-parametrization");
  analyze->add_option("param", opt.paramPath, "Parametrization JSON")->required();
  analyze->add_flag("--diagonal-pairs", opt.diagonalPairs, "Include pairs with q = qhat");
  analyze->add_option("--theta", opt.thetaPoints, "Comma-separated parameter point to test (repeatable)");
  analyze->add_flag("--assume-injective", opt.assumeInjective, "Treat the parametrization as injective");
  analyze->add_option("--trials", opt.trials, "Injectivity probe trials");
  addCommon(analyze);

  auto* generic = app.add_subcommand("param-generic", "Search for a strongly minimal parameter value");
  generic->add_option("param", opt.paramPath, "Parametrization JSON")->required();
  generic->add_option("--samples", opt.samples, "Number of sampled parameter values");
  addCommon(generic);

  auto* injective = app.add_subcommand("param-injective", "Probe injectivity of a parametrization");
  injective->add_option("param", opt.paramPath, "Parametrization JSON")->required();
  injective->add_option("--trials", opt.trials, "Number of sampled base points");
  addCommon(injective);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  if (const char* env = std::getenv("SARX_SEED")) {
    try {
      opt.seed = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "error: SARX_SEED must be a nonnegative integer\n";
      return kInputError;
    }
  }

  try {
    if (*checkMin) return cmdCheckMin(opt);
    if (*checkSuff) return cmdCheckSufficient(opt);
    if (*sim) return cmdSimulate(opt);
    if (*toLss) return cmdToLss(opt);
    if (*iso) return cmdIso(opt);
    if (*analyze) return cmdParamAnalyze(opt);
    if (*generic) return cmdParamGeneric(opt);
    if (*injective) return cmdParamInjective(opt);
  } catch (const sarx::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
