#include "symwidth/json_io.hpp"

namespace symwidth::io {

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw ParseError(std::string("missing field '") + name + "'");
  return j.at(name);
}

std::vector<Rational> rationals_from(const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("expected a non-empty array of rationals");
  std::vector<Rational> out;
  for (const auto& item : j) out.push_back(rational_from_json(item));
  return out;
}

std::size_t size_from(const Json& j) {
  if (!j.is_number_unsigned()) throw ParseError("expected a non-negative integer");
  return j.get<std::size_t>();
}

ConeStatus cone_status_from(const std::string& s) {
  for (auto status : {ConeStatus::member, ConeStatus::not_positive_square, ConeStatus::wrong_orientation,
                      ConeStatus::violated}) {
    if (s == to_string(status)) return status;
  }
  throw ParseError("unknown cone status '" + s + "'");
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const Magnitude& m) {
  if (m.is_infinite()) return "inf";
  if (m.is_rational()) return to_string(m.rational_value());
  return Json{{"sqrt", to_string(m.radicand())}};
}

Json to_json(const HomologyClass& x) {
  Json out = Json::array();
  for (const auto& c : x.coeffs()) out.push_back(to_string(c));
  return out;
}

Json to_json(const PeriodVector& w) {
  Json out = Json::array();
  for (const auto& c : w.areas()) out.push_back(to_string(c));
  return out;
}

Json to_json(const LatticeMap& phi) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < phi.dim(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < phi.dim(); ++c) row.push_back(phi(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const ConeVerdict& v) {
  Json out;
  out["status"] = to_string(v.status);
  out["violator"] = v.violator ? to_json(*v.violator) : Json(nullptr);
  out["checked_bound"] = v.checked_bound;
  return out;
}

Json to_json(const ReductionOutcome& r, bool with_trace) {
  Json out;
  out["verdict"] = r.status == ReductionStatus::reduced ? "reduced" : "no-nonnegative-reduced-form";
  out["input"] = to_json(r.trace.input);
  out["output"] = to_json(r.vector);
  out["positive_entries"] = has_positive_entries(r.vector);
  out["trace_length"] = r.trace.steps.size();
  out["obstruction"] = r.obstruction ? to_json(*r.obstruction) : Json(nullptr);
  if (with_trace) {
    Json steps = Json::array();
    for (const auto& step : r.trace.steps) {
      if (const auto* sort = std::get_if<SortStep>(&step)) {
        steps.push_back(Json{{"move", "sort-permutation"}, {"source", sort->source}});
      } else {
        steps.push_back(Json{{"move", "cremona-step"}});
      }
    }
    out["steps"] = std::move(steps);
  }
  return out;
}

Json to_json(const ExceptionalSet& set) {
  Json out;
  out["k"] = set.k;
  out["degree_bound"] = set.degree_bound;
  out["complete"] = set.complete;
  out["count"] = set.classes.size();
  Json classes = Json::array();
  for (const auto& c : set.classes) classes.push_back(to_json(c));
  out["classes"] = std::move(classes);
  return out;
}

Json to_json(const ProjectedClass& p) { return Json{{"class", to_json(p.cls)}, {"c1", to_json(p.c1)}}; }

Json to_json(const WidthResult& w) {
  Json out;
  out["value"] = w.value ? to_json(*w.value) : Json(nullptr);
  out["witness"] = to_string(w.witness);
  out["obstructing_class"] = w.obstructing_class ? to_json(*w.obstructing_class) : Json(nullptr);
  out["checked_bound"] = w.checked_bound;
  return out;
}

Json to_json(const UpperBoundResult& u) {
  Json out;
  out["uniruled_class"] = to_json(u.uniruled_class);
  out["bound"] = to_json(u.bound);
  out["strict_margin"] = to_json(u.strict_margin);
  out["canonical_pairing"] = to_json(u.canonical_pairing);
  out["k_minus_negative"] = u.k_minus_negative;
  return out;
}

Json to_json(const ProductClass& p) {
  return Json{{"base", to_json(p.base)}, {"sphere_area", to_json(p.sphere_area)}};
}

Json to_json(const ProductTopology& t) {
  return Json{{"k", t.k}, {"signature", t.signature}, {"p1_coefficient", t.p1_coefficient}, {"w2", t.w2}};
}

Json to_json(const WidthGapCertificate& cert) {
  Json out;
  out["inputs"] = Json{{"k", cert.k},
                       {"l", cert.l},
                       {"period", to_json(cert.input_period)},
                       {"sphere_area", to_json(cert.sphere_area)},
                       {"phi", to_json(cert.phi)}};
  out["period"] = to_json(cert.period);
  out["tail_halvings"] = cert.tail_halvings;
  out["upper_bound"] = to_json(cert.upper_bound);
  out["cohomologous_pair"] = Json{{"standard_side", to_json(cert.standard_side)},
                                  {"exotic_side", to_json(cert.exotic_side)}};
  out["exotic_width_lower"] = to_json(cert.exotic_width_lower);
  out["standard_width_upper"] = to_json(cert.standard_width_upper);
  out["gap"] = Json{{"minuend", to_json(cert.gap.minuend)},
                    {"subtrahend", to_json(cert.gap.subtrahend)},
                    {"sign", cert.gap.sign()},
                    {"approx", cert.gap.approx()}};
  out["chern_differ"] = cert.chern_differ;
  out["chern_witness"] = to_json(cert.chern_witness);
  out["transported_chern_witness"] = to_json(cert.transported_chern_witness);
  out["cone_verdicts"] = Json{{"standard", to_json(cert.standard_cone)}, {"exotic", to_json(cert.exotic_cone)}};
  out["topology"] = to_json(cert.topology);
  out["hypotheses"] = cert.hypotheses;
  return out;
}

Json to_json(const Refusal& r) {
  Json out;
  out["reason"] = to_string(r.reason);
  out["message"] = r.message;
  out["violator"] = r.violator ? to_json(*r.violator) : Json(nullptr);
  return out;
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("expected a rational string");
}

Magnitude magnitude_from_json(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return Magnitude::infinity();
  if (j.is_object()) return Magnitude::sqrt_of(rational_from_json(field(j, "sqrt")));
  return Magnitude::of(rational_from_json(j));
}

HomologyClass class_from_json(const Json& j) { return HomologyClass(rationals_from(j)); }

PeriodVector period_from_json(const Json& j) { return PeriodVector(rationals_from(j)); }

LatticeMap lattice_map_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("expected a square integer matrix");
  const std::size_t n = j.size();
  std::vector<std::int64_t> entries;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != n) throw ParseError("matrix is not square");
    for (const auto& e : row) {
      if (!e.is_number_integer()) throw ParseError("matrix entries must be integers");
      entries.push_back(e.get<std::int64_t>());
    }
  }
  return LatticeMap(n - 1, std::move(entries));
}

ConeVerdict cone_verdict_from_json(const Json& j) {
  ConeVerdict v;
  v.status = cone_status_from(field(j, "status").get<std::string>());
  const auto& violator = field(j, "violator");
  if (!violator.is_null()) v.violator = class_from_json(violator);
  v.checked_bound = field(j, "checked_bound").get<long>();
  return v;
}

WidthGapCertificate certificate_from_json(const Json& j) {
  try {
    WidthGapCertificate cert;
    const auto& inputs = field(j, "inputs");
    cert.k = size_from(field(inputs, "k"));
    cert.l = size_from(field(inputs, "l"));
    cert.input_period = period_from_json(field(inputs, "period"));
    cert.sphere_area = rational_from_json(field(inputs, "sphere_area"));
    cert.phi = lattice_map_from_json(field(inputs, "phi"));
    cert.period = period_from_json(field(j, "period"));
    cert.tail_halvings = field(j, "tail_halvings").get<unsigned>();

    const auto& upper = field(j, "upper_bound");
    cert.upper_bound.uniruled_class = class_from_json(field(upper, "uniruled_class"));
    cert.upper_bound.bound = rational_from_json(field(upper, "bound"));
    cert.upper_bound.strict_margin = rational_from_json(field(upper, "strict_margin"));
    cert.upper_bound.canonical_pairing = rational_from_json(field(upper, "canonical_pairing"));
    cert.upper_bound.k_minus_negative = field(upper, "k_minus_negative").get<bool>();

    const auto& pair = field(j, "cohomologous_pair");
    auto product = [](const Json& p) {
      return ProductClass{period_from_json(field(p, "base")), rational_from_json(field(p, "sphere_area"))};
    };
    cert.standard_side = product(field(pair, "standard_side"));
    cert.exotic_side = product(field(pair, "exotic_side"));

    cert.exotic_width_lower = magnitude_from_json(field(j, "exotic_width_lower"));
    cert.standard_width_upper = rational_from_json(field(j, "standard_width_upper"));
    const auto& gap = field(j, "gap");
    cert.gap = MagnitudeDifference{magnitude_from_json(field(gap, "minuend")),
                                   magnitude_from_json(field(gap, "subtrahend"))};
    cert.chern_differ = field(j, "chern_differ").get<bool>();
    cert.chern_witness = rational_from_json(field(j, "chern_witness"));
    cert.transported_chern_witness = rational_from_json(field(j, "transported_chern_witness"));

    const auto& cones = field(j, "cone_verdicts");
    cert.standard_cone = cone_verdict_from_json(field(cones, "standard"));
    cert.exotic_cone = cone_verdict_from_json(field(cones, "exotic"));

    const auto& topology = field(j, "topology");
    cert.topology.k = size_from(field(topology, "k"));
    cert.topology.signature = field(topology, "signature").get<int>();
    cert.topology.p1_coefficient = field(topology, "p1_coefficient").get<int>();
    cert.topology.w2 = field(topology, "w2").get<std::vector<int>>();
    cert.hypotheses = field(j, "hypotheses").get<std::vector<std::string>>();
    return cert;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed certificate: ") + e.what());
  }
}

Json document(const std::string& command, const std::string& status, Json result) {
  Json out;
  out["schema_version"] = kSchemaVersion;
  out["command"] = command;
  out["status"] = status;
  out["result"] = std::move(result);
  return out;
}

}  // namespace symwidth::io
