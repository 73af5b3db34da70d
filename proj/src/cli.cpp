#include "symwidth/cli.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>

#include "symwidth/cone.hpp"
#include "symwidth/cremona.hpp"
#include "symwidth/exceptional.hpp"
#include "symwidth/sixfold.hpp"
#include "symwidth/width.hpp"

namespace symwidth::cli {

namespace {

using io::Json;

/// Usage-level failure: reported as a one-line diagnostic with exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::size_t k = 0;
  std::size_t l = 0;
  std::string period;
  std::string klass;
  std::string sphere_area;
  std::string phi;
  std::string model = "rational";
  std::string in_file;
  std::string out_file;
  long degree_bound = 6;
  bool json = false;
  bool trace = false;

  const CLI::Option* k_opt = nullptr;
  const CLI::Option* l_opt = nullptr;
};

bool given(const CLI::Option* o) { return o != nullptr && o->count() > 0; }

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t");
  const auto last = s.find_last_not_of(" \t");
  return first == std::string::npos ? std::string() : s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) parts.push_back(trim(item));
  if (!text.empty() && text.back() == ',') parts.emplace_back();
  return parts;
}

PeriodVector period_option(const Options& opt) {
  if (opt.period.empty()) throw UsageError("--period is required");
  PeriodVector w(parse_rational_list(opt.period));
  if (given(opt.k_opt) && w.k() != opt.k) {
    throw DimensionMismatch("--period has " + std::to_string(w.k() + 1) + " entries but --k " + std::to_string(opt.k) +
                            " needs " + std::to_string(opt.k + 1));
  }
  return w;
}

std::size_t require_k(const Options& opt) {
  if (!given(opt.k_opt)) throw UsageError("--k is required");
  return opt.k;
}

std::size_t require_l(const Options& opt) {
  if (!given(opt.l_opt)) throw UsageError("--l is required for this model");
  return opt.l;
}

std::optional<LatticeMap> phi_option(const Options& opt, std::size_t k) {
  if (opt.phi.empty()) return std::nullopt;
  std::vector<std::int64_t> entries;
  static const std::regex integer(R"(^[+-]?[0-9]+$)");
  for (const auto& part : split(opt.phi)) {
    if (!std::regex_match(part, integer)) throw ParseError("malformed matrix entry '" + part + "'");
    entries.push_back(std::stoll(part));
  }
  return LatticeMap(k, std::move(entries));
}

struct Outcome {
  std::string status;
  Json result;
  int exit_code = kSuccess;
};

Outcome run_reduce(const Options& opt) {
  const auto outcome = reduce(period_option(opt));
  const bool ok = outcome.status == ReductionStatus::reduced;
  return {ok ? "ok" : "negative", io::to_json(outcome, opt.trace), ok ? kSuccess : kNegativeVerdict};
}

Outcome run_exceptional(const Options& opt) {
  if (!opt.klass.empty()) {
    HomologyClass e(parse_rational_list(opt.klass));
    if (given(opt.k_opt) && e.k() != opt.k) throw DimensionMismatch("--class length does not match --k");
    const bool yes = is_exceptional(e);
    Json result{{"class", io::to_json(e)},
                {"self_intersection", io::to_json(self_intersection(e))},
                {"canonical_pairing", io::to_json(pair(canonical_class(e.k()), e))},
                {"exceptional", yes}};
    return {yes ? "ok" : "negative", std::move(result), yes ? kSuccess : kNegativeVerdict};
  }
  if (opt.degree_bound < 0) throw UsageError("--degree-bound must be non-negative");
  return {"ok", io::to_json(enumerate_exceptional(require_k(opt), opt.degree_bound))};
}

Outcome run_cone(const Options& opt) {
  const PeriodVector w = period_option(opt);
  ConeVerdict verdict;
  if (opt.model == "rational") {
    verdict = liliu_membership(w);
  } else {
    verdict = kpm_membership(w, require_l(opt));
  }
  Json result{{"model", opt.model}, {"period", io::to_json(w)}, {"verdict", io::to_json(verdict)}};
  return {verdict.is_member() ? "ok" : "negative", std::move(result),
          verdict.is_member() ? kSuccess : kNegativeVerdict};
}

Outcome run_width(const Options& opt) {
  const PeriodVector w = period_option(opt);
  if (opt.degree_bound < 0) throw UsageError("--degree-bound must be non-negative");
  ManifoldDescriptor model = RationalModel{w.k()};
  if (opt.model == "exotic") model = ExoticRationalModel{w.k(), require_l(opt)};
  const auto width = gromov_width(w, model, opt.degree_bound);
  Json result{{"model", opt.model}, {"period", io::to_json(w)}, {"width", io::to_json(width)}};
  if (opt.model == "rational" && w.k() >= 1 && is_reduced(w) && has_positive_entries(w)) {
    result["uniruled_upper_bound"] = io::to_json(uniruled_upper_bound(w));
  }
  const bool ok = width.value.has_value();
  return {ok ? "ok" : "negative", std::move(result), ok ? kSuccess : kNegativeVerdict};
}

Outcome run_gap_cert(const Options& opt) {
  const std::size_t k = require_k(opt);
  const PeriodVector w = period_option(opt);
  if (opt.sphere_area.empty()) throw UsageError("--sphere-area is required");
  const Rational lambda = parse_rational(trim(opt.sphere_area));
  const auto outcome = width_gap_certificate(k, require_l(opt), w, lambda, phi_option(opt, k));
  if (const auto* refusal = std::get_if<Refusal>(&outcome)) {
    return {"refused", io::to_json(*refusal), kNegativeVerdict};
  }
  return {"ok", io::to_json(std::get<WidthGapCertificate>(outcome))};
}

Outcome run_check_cert(const Options& opt) {
  std::ifstream in(opt.in_file);
  if (!in) throw UsageError("cannot read '" + opt.in_file + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  const Json& body = doc.contains("result") ? doc.at("result") : doc;
  const auto problems = validate_certificate(io::certificate_from_json(body));
  Json result{{"valid", problems.empty()}, {"problems", problems}};
  return {problems.empty() ? "ok" : "negative", std::move(result), problems.empty() ? kSuccess : kNegativeVerdict};
}

void add_common(CLI::App* sub, Options& opt) {
  sub->add_flag("--json", opt.json, "Machine-readable output");
  sub->add_flag("--trace", opt.trace, "Include reduction traces");
  sub->add_option("--out", opt.out_file, "Write the document to FILE instead of stdout");
}

void add_lattice(CLI::App* sub, Options& opt, bool with_l) {
  sub->add_option("--k", opt.k, "Blowup count");
  if (with_l) sub->add_option("--l", opt.l, "Number of exceptional classes on the exotic side");
  sub->add_option("--period", opt.period, "Comma-separated areas a,b1,...,bk");
}

// --- human rendering ----------------------------------------------------

bool is_rational_text(const Json& j) {
  static const std::regex pattern(R"(^[+-]?[0-9]+(/[0-9]+)?$)");
  return j.is_string() && std::regex_match(j.get<std::string>(), pattern);
}

std::string scalar_text(const Json& j) {
  if (j.is_null()) return "none";
  if (j.is_string()) return j.get<std::string>();
  if (j.is_object() && j.size() == 1 && j.contains("sqrt")) return "sqrt(" + j.at("sqrt").get<std::string>() + ")";
  return j.dump();
}

bool is_scalar(const Json& j) {
  return !j.is_structured() || (j.is_object() && j.size() == 1 && j.contains("sqrt"));
}

void render(const Json& j, int indent, std::string& out);

void render_value(const Json& value, int indent, std::string& out) {
  if (is_scalar(value)) {
    out += " " + scalar_text(value) + "\n";
    return;
  }
  if (value.is_array()) {
    if (!value.empty() && std::all_of(value.begin(), value.end(), is_rational_text)) {
      std::string text = "(" + value[0].get<std::string>();
      for (std::size_t i = 1; i < value.size(); ++i) text += (i == 1 ? ";" : ",") + value[i].get<std::string>();
      out += " " + text + ")\n";
      return;
    }
    if (value.empty() || std::all_of(value.begin(), value.end(), [](const Json& x) { return x.is_number(); })) {
      out += " " + value.dump() + "\n";
      return;
    }
    out += "\n";
    for (const auto& item : value) {
      out += std::string(indent + 2, ' ') + "-";
      if (is_scalar(item) || item.is_array()) {
        render_value(item, indent + 4, out);
      } else {
        out += "\n";
        render(item, indent + 4, out);
      }
    }
    return;
  }
  out += "\n";
  render(value, indent + 2, out);
}

void render(const Json& j, int indent, std::string& out) {
  for (const auto& [key, value] : j.items()) {
    out += std::string(indent, ' ') + key + ":";
    render_value(value, indent, out);
  }
}

}  // namespace

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> values;
  for (const auto& part : split(text)) values.push_back(parse_rational(part));
  if (values.empty()) throw ParseError("empty coefficient list");
  return values;
}

std::string render_human(const Json& doc) {
  std::string out;
  render(doc, 0, out);
  return out;
}

CommandResult run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact cohomology computations on rational symplectic 4-manifolds", "symwidth"};
  app.require_subcommand(1);
  Options opt;

  auto* reduce_cmd = app.add_subcommand("reduce", "Cremona-reduce a period vector");
  add_lattice(reduce_cmd, opt, false);
  add_common(reduce_cmd, opt);

  auto* exceptional_cmd = app.add_subcommand("exceptional", "Enumerate or test exceptional classes");
  add_lattice(exceptional_cmd, opt, false);
  exceptional_cmd->add_option("--class", opt.klass, "Comma-separated class d,e1,...,ek to test");
  exceptional_cmd->add_option("--degree-bound", opt.degree_bound, "Largest degree enumerated");
  add_common(exceptional_cmd, opt);

  auto* cone_cmd = app.add_subcommand("cone", "Symplectic cone membership");
  add_lattice(cone_cmd, opt, true);
  cone_cmd->add_option("--model", opt.model, "rational or exotic")->check(CLI::IsMember({"rational", "exotic"}));
  add_common(cone_cmd, opt);

  auto* width_cmd = app.add_subcommand("width", "Gromov width of a 4-manifold");
  add_lattice(width_cmd, opt, true);
  width_cmd->add_option("--model", opt.model, "rational or exotic")->check(CLI::IsMember({"rational", "exotic"}));
  width_cmd->add_option("--degree-bound", opt.degree_bound, "Degree bound for the obstruction scan");
  add_common(width_cmd, opt);

  auto* gap_cmd = app.add_subcommand("gap-cert", "Width-gap certificate on X x S2");
  add_lattice(gap_cmd, opt, true);
  gap_cmd->add_option("--sphere-area", opt.sphere_area, "Area of the sphere factor");
  gap_cmd->add_option("--phi", opt.phi, "Row-major (k+1)x(k+1) integer isometry, comma-separated");
  add_common(gap_cmd, opt);

  auto* check_cmd = app.add_subcommand("check-cert", "Re-validate a certificate document");
  check_cmd->add_option("--in", opt.in_file, "Certificate document")->required();
  add_common(check_cmd, opt);

  if (!args.empty() && !args.front().starts_with('-') && app.get_subcommand_no_throw(args.front()) == nullptr) {
    err << "error: unknown subcommand '" << args.front() << "'\n";
    return {kUsageError, nullptr};
  }

  std::vector<std::string> argv_storage{"symwidth"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return {kSuccess, nullptr};
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return {kSuccess, nullptr};
  } catch (const CLI::ParseError& e) {
    std::string message = e.what();
    std::replace(message.begin(), message.end(), '\n', ' ');
    err << "error: " << message << "\n";
    return {kUsageError, nullptr};
  }

  const CLI::App* chosen = app.get_subcommands().front();
  const std::string command = chosen->get_name();
  opt.k_opt = chosen->get_option_no_throw("--k");
  opt.l_opt = chosen->get_option_no_throw("--l");
  Outcome outcome;
  try {
    if (command == "reduce") outcome = run_reduce(opt);
    else if (command == "exceptional") outcome = run_exceptional(opt);
    else if (command == "cone") outcome = run_cone(opt);
    else if (command == "width") outcome = run_width(opt);
    else if (command == "gap-cert") outcome = run_gap_cert(opt);
    else outcome = run_check_cert(opt);
  } catch (const std::invalid_argument& e) {  // ParseError, DimensionMismatch
    err << "error: " << e.what() << "\n";
    return {kUsageError, nullptr};
  } catch (const std::domain_error& e) {  // PreconditionError
    err << "error: " << e.what() << "\n";
    return {kUsageError, nullptr};
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return {kUsageError, nullptr};
  }

  CommandResult result{outcome.exit_code, io::document(command, outcome.status, std::move(outcome.result))};
  const std::string text = opt.json ? result.payload.dump(2) + "\n" : render_human(result.payload);
  if (!opt.out_file.empty()) {
    std::ofstream file(opt.out_file);
    if (!file) {
      err << "error: cannot write '" << opt.out_file << "'\n";
      return {kUsageError, nullptr};
    }
    file << text;
  } else {
    out << text;
  }
  return result;
}

}  // namespace symwidth::cli
