#ifndef SARX_JSON_IO_HPP
#define SARX_JSON_IO_HPP

#include <json.hpp>

#include <stdexcept>
#include <string>

#include "sarx/identifiability.hpp"
#include "sarx/lss.hpp"
#include "sarx/minimality.hpp"
#include "sarx/sarx_model.hpp"

namespace sarx {

using Json = nlohmann::ordered_json;

/// Malformed or inconsistent input data.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json readJsonFile(const std::string& path);

Rational rationalFromJson(const Json& j);
RatVector rationalVectorFromJson(const Json& j);
Json toJson(const RatVector& v);
Json toJson(const RatMatrix& m);

SarxModel sarxFromJson(const Json& j);
Json toJson(const SarxModel& model);

Lss lssFromJson(const Json& j);
Json toJson(const Lss& sys);

/// Accepts either schema; SARX files are embedded via associatedLss.
Lss lssOrSarxFromJson(const Json& j);

HybridWord wordFromJson(const Json& j);
Json toJson(const HybridWord& w);

PolyParametrization parametrizationFromJson(const Json& j);
Json toJson(const PolyParametrization& par);
/// A list of rationals, or an object with a "theta" list.
RatVector parameterFromJson(const Json& j);

Json toJson(const std::vector<RatVector>& trace);
Json toJson(const Theorem2Data& data);
Json toJson(const MinimalityVerdict& verdict);
Json toJson(const IsoSolution& iso);
Json toJson(const IdentifiableRegion& region);
Json toJson(const InjectivityEvidence& ev);
Json toJson(const GenericityResult& g);
Json toJson(const IdentifiabilityReport& r);

std::string pairKey(const ModePair& pr);

/// Indented "key: value" rendering used for --format text.
std::string renderText(const Json& j);

}  // namespace sarx

#endif  // SARX_JSON_IO_HPP
