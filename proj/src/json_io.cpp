#include "sarx/json_io.hpp"

#include <fstream>
#include <sstream>

namespace sarx {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw InputError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing field '") + key + "'");
  return *it;
}

std::size_t countField(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw InputError(std::string("field '") + key + "' must be a nonnegative integer");
  return v.get<std::size_t>();
}

RatMatrix matrixFromJson(const Json& j, const std::string& what) {
  if (!j.is_array()) throw InputError(what + " must be a list of rows");
  std::vector<RatVector> rows;
  for (const Json& r : j) rows.push_back(rationalVectorFromJson(r));
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (const auto& r : rows)
    if (r.size() != cols) throw InputError(what + " has rows of different lengths");
  return RatMatrix::fromRows(rows, cols);
}

template <class F>
auto wrapInput(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const InputError&) {
    throw;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  } catch (const std::out_of_range& e) {
    throw InputError(e.what());
  }
}

MultiPoly polyFromJson(const Json& j, const std::vector<std::string>& vars) {
  if (j.is_string() || j.is_number()) return MultiPoly::constant(vars, rationalFromJson(j));
  MultiPoly p(vars);
  for (const Json& t : field(j, "terms")) {
    const Rational c = rationalFromJson(field(t, "c"));
    const Json& e = field(t, "e");
    if (!e.is_array() || e.size() != vars.size())
      throw InputError("term exponent list must have one entry per variable");
    Monomial m;
    for (const Json& x : e) {
      if (!x.is_number_integer() || x.get<long long>() < 0) throw InputError("exponents must be nonnegative integers");
      m.push_back(x.get<unsigned>());
    }
    p.addTerm(m, c);
  }
  return p;
}

Json polyToJson(const MultiPoly& f) {
  if (f.isConstant()) return toFractionString(f.isZero() ? Rational(0) : f.terms().begin()->second);
  Json terms = Json::array();
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it)
    terms.push_back({{"c", toFractionString(it->second)}, {"e", it->first}});
  return {{"terms", terms}};
}

Json polyList(const std::vector<MultiPoly>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(p.toString());
  return out;
}

}  // namespace

Json readJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("'" + path + "': " + e.what());
  }
}

Rational rationalFromJson(const Json& j) {
  if (j.is_string()) {
    try {
      return parseRational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }
  if (j.is_number_integer()) return Rational(mpz_class(j.dump(), 10));
  if (j.is_number_float()) return parseRational(j.dump());
  throw InputError("expected a rational (string or number), got " + j.dump());
}

RatVector rationalVectorFromJson(const Json& j) {
  if (!j.is_array()) throw InputError("expected a list of rationals");
  RatVector v;
  for (const Json& x : j) v.push_back(rationalFromJson(x));
  return v;
}

Json toJson(const RatVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(toFractionString(x));
  return out;
}

Json toJson(const RatMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(toJson(m.row(r)));
  return out;
}

SarxModel sarxFromJson(const Json& j) {
  return wrapInput([&] {
    const std::size_t ny = countField(j, "ny"), nu = countField(j, "nu");
    const std::size_t p = countField(j, "p"), m = countField(j, "m");
    const Json& modes = field(j, "modes");
    if (!modes.is_object()) throw InputError("'modes' must be an object keyed by mode label");
    std::map<std::string, RatMatrix> h;
    for (const auto& [q, rows] : modes.items()) h.emplace(q, matrixFromJson(rows, "mode '" + q + "'"));
    return SarxModel(ny, nu, p, m, std::move(h));
  });
}

Json toJson(const SarxModel& model) {
  Json modes = Json::object();
  for (const auto& [q, h] : model.modes()) modes[q] = toJson(h);
  return {{"ny", model.ny()}, {"nu", model.nu()}, {"p", model.p()}, {"m", model.m()}, {"modes", modes}};
}

Lss lssFromJson(const Json& j) {
  return wrapInput([&] {
    const Json& modes = field(j, "modes");
    if (!modes.is_object()) throw InputError("'modes' must be an object keyed by mode label");
    std::map<std::string, LssMode> ms;
    for (const auto& [q, md] : modes.items())
      ms.emplace(q, LssMode{matrixFromJson(field(md, "A"), "A of mode '" + q + "'"),
                            matrixFromJson(field(md, "B"), "B of mode '" + q + "'"),
                            matrixFromJson(field(md, "C"), "C of mode '" + q + "'")});
    return Lss(std::move(ms), rationalVectorFromJson(field(j, "x0")));
  });
}

Json toJson(const Lss& sys) {
  Json modes = Json::object();
  for (const auto& [q, md] : sys.modes()) modes[q] = {{"A", toJson(md.a)}, {"B", toJson(md.b)}, {"C", toJson(md.c)}};
  return {{"n", sys.n()}, {"m", sys.m()}, {"p", sys.p()}, {"modes", modes}, {"x0", toJson(sys.x0())}};
}

Lss lssOrSarxFromJson(const Json& j) {
  if (j.is_object() && j.contains("ny")) return associatedLss(sarxFromJson(j));
  return lssFromJson(j);
}

HybridWord wordFromJson(const Json& j) {
  return wrapInput([&] {
    const Json& steps = j.is_array() ? j : field(j, "word");
    if (!steps.is_array()) throw InputError("'word' must be a list of steps");
    HybridWord w;
    for (const Json& s : steps) {
      const Json& q = field(s, "q");
      w.push_back({q.is_string() ? q.get<std::string>() : q.dump(), rationalVectorFromJson(field(s, "u"))});
    }
    return w;
  });
}

Json toJson(const HybridWord& w) {
  Json steps = Json::array();
  for (const auto& s : w) steps.push_back({{"q", s.mode}, {"u", toJson(s.input)}});
  return {{"word", steps}};
}

PolyParametrization parametrizationFromJson(const Json& j) {
  return wrapInput([&] {
    std::vector<std::string> vars;
    for (const Json& v : field(j, "vars")) vars.push_back(v.get<std::string>());
    const std::size_t ny = countField(j, "ny"), nu = countField(j, "nu");
    const std::size_t p = countField(j, "p"), m = countField(j, "m");
    const Json& modes = field(j, "modes");
    if (!modes.is_object()) throw InputError("'modes' must be an object keyed by mode label");
    std::map<std::string, std::vector<MultiPoly>> polys;
    for (const auto& [q, entries] : modes.items()) {
      if (!entries.is_array()) throw InputError("mode '" + q + "' must list coefficient polynomials");
      std::vector<MultiPoly> list;
      for (const Json& e : entries) {
        if (e.is_array()) {
          for (const Json& x : e) list.push_back(polyFromJson(x, vars));
        } else {
          list.push_back(polyFromJson(e, vars));
        }
      }
      polys.emplace(q, std::move(list));
    }
    return PolyParametrization(vars, ny, nu, p, m, std::move(polys));
  });
}

Json toJson(const PolyParametrization& par) {
  Json modes = Json::object();
  for (const auto& [q, entries] : par.modes()) {
    Json list = Json::array();
    for (const auto& f : entries) list.push_back(polyToJson(f));
    modes[q] = list;
  }
  return {{"vars", par.variables()}, {"ny", par.ny()}, {"nu", par.nu()},
          {"p", par.p()},            {"m", par.m()},   {"modes", modes}};
}

RatVector parameterFromJson(const Json& j) {
  return wrapInput([&] { return rationalVectorFromJson(j.is_object() ? field(j, "theta") : j); });
}

Json toJson(const std::vector<RatVector>& trace) {
  Json out = Json::array();
  for (const auto& y : trace) out.push_back(toJson(y));
  return out;
}

std::string pairKey(const ModePair& pr) { return pr.first + "|" + pr.second; }

Json toJson(const Theorem2Data& data) {
  Json chi = Json::object(), ups = Json::object(), phi = Json::object(), psi = Json::object();
  for (const auto& [q, p] : data.chi) chi[q] = p.toString();
  for (const auto& [q, p] : data.upsilon) ups[q] = p.toString();
  for (const auto& [pr, pp] : data.pairs) {
    if (pr.first == pr.second) continue;
    phi[pairKey(pr)] = pp.phi.toString();
    Json seq = Json::array();
    for (const auto& s : pp.psi) seq.push_back(s.toString());
    psi[pairKey(pr)] = seq;
  }
  return {{"chi", chi}, {"upsilon", ups}, {"phi", phi}, {"psi", psi}};
}

Json toJson(const MinimalityVerdict& v) {
  Json out;
  out["strong_minimal"] = v.strongMinimal ? Json(*v.strongMinimal) : Json(nullptr);
  if (v.theorem2Evaluated) {
    Json a = {{"holds", v.conditionA.has_value()}, {"witness", nullptr}};
    if (v.conditionA) a["witness"] = {v.conditionA->pair.first, v.conditionA->pair.second};
    Json b = {{"holds", v.conditionB.has_value()}, {"witness", nullptr}, {"scalar", nullptr}};
    if (v.conditionB) {
      b["witness"] = {v.conditionB->pair.first, v.conditionB->pair.second};
      b["scalar"] = toFractionString(v.conditionB->scalar);
    }
    out["theorem2"] = {{"A", a}, {"B", b}, {"sufficient", v.sufficientConditionsHold}};
  } else {
    out["theorem2"] = nullptr;
  }
  Json cert = {{"state_dimension", v.stateDimension}};
  if (v.certificate) {
    cert["reachable_dimension"] = v.certificate->reachableDim;
    cert["unobservable_dimension"] = v.certificate->unobservableDim;
  }
  if (v.theorem2Evaluated && v.exactEvaluated) cert["cross_check_failed"] = v.crossCheckFailed;
  out["certificates"] = cert;
  return out;
}

Json toJson(const IsoSolution& iso) {
  Json out = {{"kind", toString(iso.kind)}, {"family_dimension", iso.familyDimension}};
  out["witness"] = iso.witness ? toJson(*iso.witness) : Json(nullptr);
  return out;
}

Json toJson(const IdentifiableRegion& region) {
  Json pairs = Json::object();
  for (const auto& [pr, inter] : region.pairs)
    pairs[pairKey(pr)] = {{"S_A", polyList(inter.sA)},
                          {"S_B_prime", polyList(inter.sBPrime)},
                          {"S_B", polyList(inter.sB)},
                          {"scaling", inter.scaling.toString()}};
  Json out;
  out["vars"] = region.variables;
  out["S"] = polyList(region.s);
  out["theta_hat"] = "exists P in S with P(theta) != 0";
  out["empty"] = region.empty();
  out["intermediates"] = {{"I_A", polyList(region.iA)}, {"I_B", polyList(region.iB)}, {"pairs", pairs}};
  return out;
}

Json toJson(const InjectivityEvidence& ev) {
  Json out = {{"result", toString(ev.kind)}, {"trials", ev.trials}, {"collision", nullptr}};
  if (ev.collision) out["collision"] = {toJson(ev.collision->first), toJson(ev.collision->second)};
  return out;
}

Json toJson(const GenericityResult& g) {
  Json out = {{"found", g.witness.has_value()}, {"witness", nullptr}, {"attempts", g.attempts}, {"failures", g.failures}};
  if (g.witness) out["witness"] = toJson(*g.witness);
  return out;
}

Json toJson(const IdentifiabilityReport& r) {
  return {{"identifiable", r.identifiable},
          {"region_nonempty", r.regionNonempty},
          {"injectivity", toString(r.injectivity)},
          {"missing_hypotheses", r.missingHypotheses}};
}

namespace {

void render(const Json& j, const std::string& indent, std::ostringstream& os) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    const std::string key = j.is_object() ? it.key() : "-";
    const bool nested = (v.is_object() && !v.empty()) ||
                        (v.is_array() && !v.empty() && (v.front().is_object() || v.front().is_array()));
    if (nested) {
      os << indent << key << ":\n";
      render(v, indent + "  ", os);
    } else if (v.is_string()) {
      os << indent << key << ": " << v.get<std::string>() << "\n";
    } else {
      os << indent << key << ": " << v.dump() << "\n";
    }
  }
}

}  // namespace

std::string renderText(const Json& j) {
  std::ostringstream os;
  if (j.is_object() || j.is_array()) {
    render(j, "", os);
  } else {
    os << j.dump() << "\n";
  }
  return os.str();
}

}  // namespace sarx
