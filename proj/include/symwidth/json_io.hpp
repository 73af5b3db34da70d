#pragma once

// Machine-readable documents. Rationals are strings "p" or "p/q"; surds are
// {"sqrt": "q"}; infinity is the string "inf". Objects keep insertion order
// so output is byte-stable.

#include <json.hpp>

#include "symwidth/cremona.hpp"
#include "symwidth/exceptional.hpp"
#include "symwidth/sixfold.hpp"

namespace symwidth::io {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json to_json(const Rational& q);
Json to_json(const Magnitude& m);
Json to_json(const HomologyClass& x);
Json to_json(const PeriodVector& w);
Json to_json(const LatticeMap& phi);
Json to_json(const ConeVerdict& v);
Json to_json(const ReductionOutcome& r, bool with_trace);
Json to_json(const ExceptionalSet& set);
Json to_json(const ProjectedClass& p);
Json to_json(const WidthResult& w);
Json to_json(const UpperBoundResult& u);
Json to_json(const ProductClass& p);
Json to_json(const ProductTopology& t);
Json to_json(const WidthGapCertificate& cert);
Json to_json(const Refusal& r);

Rational rational_from_json(const Json& j);
Magnitude magnitude_from_json(const Json& j);
HomologyClass class_from_json(const Json& j);
PeriodVector period_from_json(const Json& j);
LatticeMap lattice_map_from_json(const Json& j);
ConeVerdict cone_verdict_from_json(const Json& j);
WidthGapCertificate certificate_from_json(const Json& j);

/// {"schema_version": 1, "command": ..., "status": ..., "result": ...}
Json document(const std::string& command, const std::string& status, Json result);

}  // namespace symwidth::io
