// Copyright 2026 The fqcount Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "fqcount/counting.h"
#include "fqcount/errors.h"
#include "fqcount/ff.h"
#include "fqcount/sieve.h"
#include "fqcount/wenger.h"
#include "verify.h"

namespace fqcount::cli {
namespace {

using Json = nlohmann::ordered_json;
using ff::Element;
using ff::Field;

// A mismatch between two methods, reported with exit code 3.
class MismatchError : public std::runtime_error {
 public:
  MismatchError(const std::string& what, std::string out)
      : std::runtime_error(what), out_(std::move(out)) {}
  const std::string& out() const { return out_; }

 private:
  std::string out_;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::uint64_t parse_count(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(t, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (t.empty() || used != t.size() || t[0] == '-') {
    throw PreconditionError(key + " must be a non-negative integer, got '" + text + "'");
  }
  return v;
}

OutputFormat parse_format(const std::string& text) {
  const std::string t = trim(text);
  if (t == "json") return OutputFormat::kJson;
  if (t == "csv") return OutputFormat::kCsv;
  if (t == "plain") return OutputFormat::kPlain;
  throw PreconditionError("output_format must be json, csv or plain, got '" + text + "'");
}

void set_key(RunConfig& config, const std::string& key, const std::string& value) {
  if (key == "budget") {
    config.budget.max_items = parse_count(key, value);
  } else if (key == "parallelism") {
    config.parallelism = static_cast<unsigned>(parse_count(key, value));
  } else if (key == "output_format") {
    config.output_format = parse_format(value);
  } else {
    throw PreconditionError("unknown configuration key '" + key + "'");
  }
}

std::vector<Element> parse_elements(const Field& f, const std::string& text,
                                    const char* what) {
  std::vector<Element> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    out.push_back(f.element(parse_count(what, item)));
  }
  return out;
}

Element element_flag(const Field& f, std::uint64_t index, const char* what) {
  if (index >= f.q()) {
    throw PreconditionError(std::string(what) + " must be a field element index below q");
  }
  return Element{static_cast<std::uint32_t>(index)};
}

std::vector<Element> high_coefficients(const Field& f, unsigned gap, Element b) {
  if (gap == 1) return {};
  if (gap == 2) return {f.neg(b)};
  return std::vector<Element>(gap - 1, f.zero());
}

enum class Method { kFormula, kOracle, kBoth };

Method parse_method(const std::string& s) {
  if (s == "formula") return Method::kFormula;
  if (s == "oracle") return Method::kOracle;
  return Method::kBoth;
}

bool wants_formula(Method m) { return m != Method::kOracle; }
bool wants_oracle(Method m) { return m != Method::kFormula; }

// Shared rendering for single-value subcommands.
struct ValueResult {
  std::string query;
  std::string method;
  std::optional<Integer> formula;
  std::optional<Integer> oracle;
  std::string note;
  Json extra = Json::object();
};

std::string render_value(const RunConfig& config, const ValueResult& r) {
  const Integer& value = r.formula ? *r.formula : *r.oracle;
  const bool both = r.formula && r.oracle;
  std::ostringstream os;
  switch (config.output_format) {
    case OutputFormat::kJson: {
      Json j;
      j["value"] = value.get_str();
      j["query"] = r.query;
      j["method"] = r.method;
      if (both) {
        j["formula_value"] = r.formula->get_str();
        j["oracle_value"] = r.oracle->get_str();
        j["match"] = *r.formula == *r.oracle;
      }
      for (const auto& [k, v] : r.extra.items()) j[k] = v;
      if (!r.note.empty()) j["note"] = r.note;
      os << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::kCsv:
      os << "query,method,value" << (both ? ",formula_value,oracle_value,match" : "")
         << '\n'
         << r.query << ',' << r.method << ',' << value.get_str();
      if (both) {
        os << ',' << r.formula->get_str() << ',' << r.oracle->get_str() << ','
           << (*r.formula == *r.oracle ? "true" : "false");
      }
      os << '\n';
      break;
    case OutputFormat::kPlain:
      os << value.get_str() << '\n';
      break;
  }
  return os.str();
}

std::string finish_value(const RunConfig& config, const ValueResult& r) {
  std::string out = render_value(config, r);
  if (r.formula && r.oracle && *r.formula != *r.oracle) {
    throw MismatchError(r.query + ": formula " + r.formula->get_str() + " vs oracle " +
                            r.oracle->get_str(),
                        out);
  }
  return out;
}

std::string method_label(Method m) {
  return m == Method::kFormula ? "formula" : m == Method::kOracle ? "oracle" : "both";
}

// Flag storage for every subcommand.
struct Flags {
  unsigned p = 0, e = 1;
  std::string method = "formula";
  unsigned gap = 1, n = 1, k = 0, t = 1;
  std::uint64_t b = 0, m1 = 0, m2 = 0, a0 = 0, b0 = 0;
  std::string mode = "power-sums";
  std::string a, bvec;
  std::string counter = "power", scope = "all";
  unsigned variant = 1, m = 1, check_moments = 0;
  std::string export_path, candidate = "top";
  std::string suite = "all";
  unsigned max_q = 0, max_n = 0, samples = 200;
  std::uint64_t seed = 20260101;
  std::string csv_out;
  bool inject_fault = false;
};

std::string cmd_field(const RunConfig& config, const Flags& fl) {
  const Field f(fl.p, fl.e);
  std::ostringstream os;
  if (config.output_format == OutputFormat::kJson) {
    Json j;
    j["p"] = f.p();
    j["e"] = f.e();
    j["q"] = f.q();
    j["modulus"] = f.modulus();
    Json elems = Json::array();
    for (std::uint32_t i = 0; i < f.q(); ++i) {
      elems.push_back(Json{{"index", i}, {"coeffs", f.coeffs(Element{i})}});
    }
    j["elements"] = std::move(elems);
    os << j.dump(2) << '\n';
    return os.str();
  }
  if (config.output_format == OutputFormat::kCsv) os << "index,coeffs\n";
  else os << "p=" << f.p() << " e=" << f.e() << " q=" << f.q() << '\n';
  for (std::uint32_t i = 0; i < f.q(); ++i) {
    os << i << (config.output_format == OutputFormat::kCsv ? "," : ": ");
    const auto c = f.coeffs(Element{i});
    for (std::size_t d = 0; d < c.size(); ++d) os << (d ? " " : "") << c[d];
    os << '\n';
  }
  return os.str();
}

std::string cmd_count(const RunConfig& config, const Flags& fl) {
  const Field f(fl.p, fl.e);
  if (fl.gap < 1 || fl.gap > 3) throw PreconditionError("--gap must be 1, 2 or 3");
  if (fl.gap > fl.n) throw PreconditionError("--gap must not exceed --n");
  counting::CountQuery q{f, fl.n, fl.n - fl.gap, fl.k, element_flag(f, fl.b, "--b")};
  q.validate();
  const Method method = parse_method(fl.method);
  ValueResult r{q.describe(), method_label(method), {}, {}, "", Json::object()};
  if (wants_formula(method)) {
    const auto c = counting::count_nk(q);
    r.formula = c.value;
    r.note = c.note;
  }
  if (wants_oracle(method)) {
    r.oracle = oracle::brute_nk(f, high_coefficients(f, fl.gap, q.b), q.n, q.ell, q.k,
                                config.budget)
                   .value;
  }
  return finish_value(config, r);
}

std::string cmd_subset(const RunConfig& config, const Flags& fl) {
  const Field f(fl.p, fl.e);
  const Element b = element_flag(f, fl.b, "--b");
  const Method method = parse_method(fl.method);
  ValueResult r{"subset-sum q=" + std::to_string(f.q()) + " n=" + std::to_string(fl.n) +
                    " b=" + std::to_string(b.index),
                method_label(method), {}, {}, "", Json::object()};
  if (wants_formula(method)) r.formula = counting::subset_sum_count(f, fl.n, b).value;
  if (wants_oracle(method)) {
    r.oracle = oracle::brute_subsets_mss2(f, fl.n, b, f.zero(),
                                          oracle::SubsetMode::kSumOnly, config.budget)
                   .value;
  }
  return finish_value(config, r);
}

oracle::SubsetMode parse_mode(const std::string& s) {
  using oracle::SubsetMode;
  for (auto m : {SubsetMode::kSumOnly, SubsetMode::kPowerSums, SubsetMode::kElementary,
                 SubsetMode::kFirstDistinct}) {
    if (s == oracle::subset_mode_name(m)) return m;
  }
  throw PreconditionError("--mode must be sum-only, power-sums, elementary or first-distinct");
}

std::string cmd_mss2(const RunConfig& config, const Flags& fl) {
  using oracle::SubsetMode;
  const Field f(fl.p, fl.e);
  const Element m1 = element_flag(f, fl.m1, "--m1"), m2 = element_flag(f, fl.m2, "--m2");
  const SubsetMode mode = parse_mode(fl.mode);
  const Method method = parse_method(fl.method);
  std::ostringstream query;
  query << "mss2 q=" << f.q() << " t=" << fl.t << " m1=" << m1.index << " m2=" << m2.index
        << " mode=" << oracle::subset_mode_name(mode);
  ValueResult r{query.str(), method_label(method), {}, {}, "", Json::object()};
  if (wants_formula(method)) {
    if (mode == SubsetMode::kSumOnly) {
      r.formula = counting::subset_sum_count(f, fl.t, m1).value;
    } else {
      if (m1 != f.zero() || m2 != f.zero()) {
        throw PreconditionError("closed forms for moment modes require m1 = m2 = 0");
      }
      if (mode == SubsetMode::kPowerSums) r.formula = counting::moment_subset_count(f, fl.t).value;
      if (mode == SubsetMode::kElementary) {
        r.formula = counting::moment_subset_count_elementary(f, fl.t).value;
      }
      if (mode == SubsetMode::kFirstDistinct) {
        r.formula = counting::moment_subset_count_m1(f, fl.t).value;
      }
    }
  }
  if (wants_oracle(method)) {
    r.oracle = oracle::brute_subsets_mss2(f, fl.t, m1, m2, mode, config.budget).value;
  }
  return finish_value(config, r);
}

const char* case_name(counting::QuadLinCase c) {
  switch (c) {
    case counting::QuadLinCase::kNonzeroBZeroC: return "b!=0,c=0";
    case counting::QuadLinCase::kNonzeroBNonzeroC: return "b!=0,c!=0";
    case counting::QuadLinCase::kZeroBZeroC: return "b=0,c=0";
    case counting::QuadLinCase::kZeroBNonzeroC: return "b=0,c!=0";
  }
  return "?";
}

std::string cmd_quadlin(const RunConfig& config, const Flags& fl) {
  const Field f(fl.p, fl.e);
  const auto a = parse_elements(f, fl.a, "--a");
  const auto bvec = parse_elements(f, fl.bvec, "--bvec");
  const Element a0 = element_flag(f, fl.a0, "--a0"), b0 = element_flag(f, fl.b0, "--b0");
  if (a.empty() || a.size() != bvec.size()) {
    throw PreconditionError("--a and --bvec must have the same nonzero length");
  }
  const Method method = parse_method(fl.method);
  ValueResult r{"quadlin q=" + std::to_string(f.q()) + " n=" + std::to_string(a.size()),
                method_label(method), {}, {}, "", Json::object()};
  r.extra["case"] = case_name(counting::classify_quad_lin(f, a, a0, bvec, b0));
  if (wants_formula(method)) {
    r.formula = counting::quad_lin_solution_count(f, a, a0, bvec, b0).value;
  }
  if (wants_oracle(method)) {
    r.oracle = oracle::brute_quadlin(f, a, a0, bvec, b0, config.budget).value;
  }
  return finish_value(config, r);
}

Integer falling(unsigned q, unsigned n) {
  Integer out = 1;
  for (unsigned i = 0; i < n; ++i) out *= (i < q) ? Integer(q - i) : Integer(0);
  return out;
}

std::string cmd_sieve(const RunConfig& config, const Flags& fl) {
  using oracle::SubsetMode;
  const Field f(fl.p, fl.e);
  if (fl.n < 1) throw PreconditionError("--n must be at least 1");
  const bool first = fl.scope == "first";
  if (!first && fl.scope != "all") throw PreconditionError("--scope must be all or first");
  if (first && fl.n < 2) throw PreconditionError("--scope first requires n >= 2");
  const auto scope = first ? sieve::Scope::kFirstNMinus1 : sieve::Scope::kAllCoordinates;
  const Element b = element_flag(f, fl.b, "--b");
  sieve::SymmetricCounter counter;
  if (fl.counter == "unconstrained") counter = sieve::unconstrained_counter(f, fl.n, scope);
  else if (fl.counter == "linear") counter = sieve::linear_sum_counter(f, fl.n, b, scope);
  else if (fl.counter == "power") counter = sieve::power_sum_counter(f, fl.n, scope);
  else throw PreconditionError("--counter must be unconstrained, linear or power");

  const Method method = parse_method(fl.method);
  const Integer arrangements = comb::factorial(first ? fl.n - 1 : fl.n);
  std::ostringstream query;
  query << "sieve q=" << f.q() << " n=" << fl.n << " counter=" << fl.counter
        << " scope=" << fl.scope;
  if (fl.counter == "linear") query << " b=" << b.index;
  ValueResult r{query.str(), method_label(method), {}, {}, "", Json::object()};
  if (wants_formula(method)) {
    r.formula = first ? sieve::sieve_first_n_minus_1(counter) : sieve::sieve_distinct(counter);
  }
  if (wants_oracle(method)) {
    const Element z = f.zero();
    const bool fits = first ? fl.n <= f.q() + 1 : fl.n <= f.q();
    if (fl.counter == "unconstrained") {
      r.oracle = first ? falling(f.q(), fl.n - 1) * f.q() : falling(f.q(), fl.n);
    } else if (!fits) {
      r.oracle = 0;
    } else if (fl.counter == "linear") {
      r.oracle = first ? falling(f.q(), fl.n - 1)
                       : arrangements * oracle::brute_subsets_mss2(f, fl.n, b, z,
                                                                   SubsetMode::kSumOnly,
                                                                   config.budget)
                                            .value;
    } else {
      r.oracle = arrangements *
                 oracle::brute_subsets_mss2(f, fl.n, z, z,
                                            first ? SubsetMode::kFirstDistinct
                                                  : SubsetMode::kPowerSums,
                                            config.budget)
                     .value;
    }
  }
  const Integer& value = r.formula ? *r.formula : *r.oracle;
  if (value % arrangements == 0) r.extra["per_set"] = Integer(value / arrangements).get_str();
  return finish_value(config, r);
}

Json levels_json(const wenger::SpectrumReport& report) {
  Json levels = Json::array();
  for (const auto& lv : report.levels) {
    levels.push_back(Json{{"i", lv.i}, {"mult", lv.multiplicity.get_str()}});
  }
  return levels;
}

std::string cmd_wenger(const RunConfig& config, const Flags& fl) {
  if (fl.variant != 1 && fl.variant != 2) throw PreconditionError("--variant must be 1 or 2");
  const wenger::WengerFamily fam{static_cast<wenger::Variant>(fl.variant), Field(fl.p, fl.e),
                                 fl.m};
  fam.validate();
  wenger::MultiplicityTerm term;
  if (fl.candidate == "top") term = wenger::MultiplicityTerm::kTopDegree;
  else if (fl.candidate == "shifted") term = wenger::MultiplicityTerm::kShiftedDegree;
  else throw PreconditionError("--candidate must be top or shifted");
  const Method method = parse_method(fl.method);

  std::optional<wenger::SpectrumReport> formula, oracle;
  if (wants_formula(method)) formula = wenger::spectrum_formula(fam, term, config.budget);
  if (wants_oracle(method)) oracle = wenger::spectrum_oracle(fam, config.budget);
  const auto& report = formula ? *formula : *oracle;

  bool verified = false;
  std::vector<std::string> failures;
  Json j;
  j["family"] = fam.describe();
  j["method"] = method_label(method);
  j["levels"] = levels_json(report);
  j["vertex_count"] = report.vertex_count.get_str();
  if (formula && oracle) {
    const bool same = formula->same_levels(*oracle);
    j["oracle_levels"] = levels_json(*oracle);
    j["match"] = same;
    verified = same;
    if (!same) failures.push_back("formula and oracle spectra differ");
  }
  if (!report.conditional_levels.empty()) {
    Json cond = Json::array();
    for (const auto& c : report.conditional_levels) {
      cond.push_back(Json{{"i", c.i}, {"present", c.present}});
    }
    j["conditional_levels"] = std::move(cond);
  }
  std::optional<wenger::BipartiteGraph> graph;
  if (fl.check_moments > 0 || !fl.export_path.empty()) {
    graph.emplace(wenger::build_graph(fam, config.budget));
  }
  if (fl.check_moments > 0) {
    const auto mc = wenger::moment_check_detail(*graph, report, fl.check_moments);
    Json traces = Json::array();
    for (unsigned t = 0; t < mc.graph_traces.size(); ++t) {
      traces.push_back(Json{{"power", 2 * t},
                            {"graph", mc.graph_traces[t].get_str()},
                            {"spectrum", mc.spectrum_traces[t].get_str()}});
    }
    j["moments"] = Json{{"T", fl.check_moments}, {"ok", mc.ok}, {"traces", traces}};
    verified = (verified || !(formula && oracle)) && mc.ok;
    if (!mc.ok) failures.push_back("trace moments differ from the spectrum");
  }
  j["verified"] = verified;
  if (!report.note.empty()) j["note"] = report.note;
  if (!fl.export_path.empty()) {
    std::ofstream file(fl.export_path);
    if (!file) throw PreconditionError("cannot open export file " + fl.export_path);
    graph->export_edges(file);
    j["exported_edges"] = graph->edge_count();
  }

  std::ostringstream os;
  if (config.output_format == OutputFormat::kJson) {
    os << j.dump(2) << '\n';
  } else {
    if (config.output_format == OutputFormat::kCsv) os << "i,mult\n";
    for (const auto& lv : report.levels) {
      os << lv.i << (config.output_format == OutputFormat::kCsv ? "," : " ")
         << lv.multiplicity.get_str() << '\n';
    }
  }
  if (!failures.empty()) throw MismatchError(fam.describe() + ": " + failures.front(), os.str());
  return os.str();
}

std::string cmd_verify(const RunConfig& config, const Flags& fl) {
  std::vector<verify::Suite> suites;
  if (fl.suite == "all") {
    suites = verify::all_suites();
  } else if (auto s = verify::parse_suite(fl.suite)) {
    suites.push_back(*s);
  } else {
    throw PreconditionError("unknown suite '" + fl.suite + "'");
  }
  verify::Limits limits;
  if (fl.max_q) limits.max_q = fl.max_q;
  if (fl.max_n) limits.max_n = fl.max_n;
  if (fl.p) limits.p = fl.p;
  if (fl.p) limits.e = fl.e;
  limits.samples = fl.samples;
  limits.seed = fl.seed;
  limits.inject_fault = fl.inject_fault;

  verify::Report all;
  Json summary = Json::array();
  for (auto s : suites) {
    auto r = verify::run_suite(s, limits, config.budget);
    summary.push_back(Json{{"suite", verify::suite_name(s)},
                           {"points", r.rows.size()},
                           {"mismatches", r.mismatches()}});
    all.rows.insert(all.rows.end(), r.rows.begin(), r.rows.end());
  }
  if (!fl.csv_out.empty()) {
    std::ofstream file(fl.csv_out);
    if (!file) throw PreconditionError("cannot open CSV file " + fl.csv_out);
    verify::write_csv(file, all);
  }
  std::ostringstream os;
  switch (config.output_format) {
    case OutputFormat::kJson: {
      Json j;
      j["suites"] = std::move(summary);
      j["points"] = all.rows.size();
      j["mismatches"] = all.mismatches();
      j["match"] = all.mismatches() == 0;
      os << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::kCsv:
      verify::write_csv(os, all);
      break;
    case OutputFormat::kPlain:
      for (const auto& s : summary) {
        os << s["suite"].get<std::string>() << ": " << s["points"].get<std::size_t>()
           << " points, " << s["mismatches"].get<std::size_t>() << " mismatches\n";
      }
      break;
  }
  if (const auto* row = all.first_mismatch()) {
    throw MismatchError(verify::reproducer(*row), os.str());
  }
  return os.str();
}

void add_field_flags(CLI::App* sub, Flags& fl) {
  sub->add_option("--p", fl.p, "characteristic")->required();
  sub->add_option("--e", fl.e, "extension degree")->capture_default_str();
}

void add_method_flag(CLI::App* sub, Flags& fl) {
  sub->add_option("--method", fl.method, "formula, oracle or both")
      ->capture_default_str()
      ->check(CLI::IsMember({"formula", "oracle", "both"}));
}

}  // namespace

void apply_config_text(const std::string& text, RunConfig& config) {
  std::istringstream in(text);
  std::string line;
  unsigned lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw PreconditionError("config line " + std::to_string(lineno) +
                              " is not of the form key = value");
    }
    set_key(config, trim(line.substr(0, eq)), line.substr(eq + 1));
  }
}

void apply_environment(const std::map<std::string, std::string>& env,
                       RunConfig& config) {
  if (auto it = env.find("FQCOUNT_BUDGET"); it != env.end()) {
    config.budget.max_items = parse_count("FQCOUNT_BUDGET", it->second);
  }
  if (auto it = env.find("FQCOUNT_PARALLELISM"); it != env.end()) {
    config.parallelism = static_cast<unsigned>(parse_count("FQCOUNT_PARALLELISM", it->second));
  }
  if (auto it = env.find("FQCOUNT_FORMAT"); it != env.end()) {
    config.output_format = parse_format(it->second);
  }
}

std::map<std::string, std::string> process_environment() {
  std::map<std::string, std::string> env;
  for (const char* key :
       {"FQCOUNT_BUDGET", "FQCOUNT_PARALLELISM", "FQCOUNT_FORMAT", "FQCOUNT_CONFIG"}) {
    if (const char* v = std::getenv(key)) env[key] = v;
  }
  return env;
}

CommandResult run_command(const std::vector<std::string>& args,
                          const std::map<std::string, std::string>& env) {
  CLI::App app{"Exact root-count, subset-sum and jumped Wenger spectrum calculator",
               "fqcount"};
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t flag_budget = 0;
  unsigned flag_parallelism = 0;
  std::string flag_format, flag_config;
  auto* o_budget = app.add_option("--budget", flag_budget, "enumeration budget (>= 10000)");
  auto* o_par = app.add_option("--parallelism", flag_parallelism, "worker threads, 0 = auto");
  auto* o_format = app.add_option("--format", flag_format, "json, csv or plain")
                       ->check(CLI::IsMember({"json", "csv", "plain"}));
  app.add_option("--config", flag_config, "key = value configuration file");

  Flags fl;
  auto* field = app.add_subcommand("field", "print the field and its element table");
  add_field_flags(field, fl);

  auto* count = app.add_subcommand("count", "N_k(u, ell) for gaps 1, 2, 3");
  add_field_flags(count, fl);
  count->add_option("--gap", fl.gap, "n - ell")->required();
  count->add_option("--n", fl.n, "degree")->required();
  count->add_option("--k", fl.k, "number of distinct roots")->required();
  count->add_option("--b", fl.b, "gap-2 coefficient index (u = x^n - b x^{n-1})");
  add_method_flag(count, fl);

  auto* subset = app.add_subcommand("subset-sum", "n-subsets summing to b");
  add_field_flags(subset, fl);
  subset->add_option("--n", fl.n, "subset size")->required();
  subset->add_option("--b", fl.b, "target index");
  add_method_flag(subset, fl);

  auto* mss2 = app.add_subcommand("mss2", "subsets with prescribed first two moments");
  add_field_flags(mss2, fl);
  mss2->add_option("--t", fl.t, "subset size")->required();
  mss2->add_option("--m1", fl.m1, "first moment index");
  mss2->add_option("--m2", fl.m2, "second moment index");
  mss2->add_option("--mode", fl.mode, "sum-only, power-sums, elementary, first-distinct")
      ->capture_default_str();
  add_method_flag(mss2, fl);

  auto* quadlin = app.add_subcommand("quadlin", "solutions of a diagonal quadric and a hyperplane");
  add_field_flags(quadlin, fl);
  quadlin->add_option("--a", fl.a, "quadratic coefficients, comma separated")->required();
  quadlin->add_option("--a0", fl.a0, "quadratic right-hand side");
  quadlin->add_option("--bvec", fl.bvec, "linear coefficients, comma separated")->required();
  quadlin->add_option("--b0", fl.b0, "linear right-hand side");
  add_method_flag(quadlin, fl);

  auto* sv = app.add_subcommand("sieve", "distinct-coordinate sieve over cycle types");
  add_field_flags(sv, fl);
  sv->add_option("--n", fl.n, "number of coordinates")->required();
  sv->add_option("--counter", fl.counter, "unconstrained, linear or power")->capture_default_str();
  sv->add_option("--scope", fl.scope, "all or first")->capture_default_str();
  sv->add_option("--b", fl.b, "target of the linear counter");
  add_method_flag(sv, fl);

  auto* wg = app.add_subcommand("wenger", "spectrum of a jumped Wenger graph");
  add_field_flags(wg, fl);
  wg->add_option("--variant", fl.variant, "1 or 2")->required();
  wg->add_option("--m", fl.m, "dimension parameter")->required();
  wg->add_option("--export", fl.export_path, "write the edge list to a file");
  wg->add_option("--check-moments", fl.check_moments, "compare trace moments up to A^{2T}");
  wg->add_option("--candidate", fl.candidate, "top or shifted multiplicity term")
      ->capture_default_str();
  add_method_flag(wg, fl);

  auto* vf = app.add_subcommand("verify", "formula-versus-oracle sweeps");
  vf->add_option("--suite", fl.suite,
                 "gap1, gap2, gap3, subset, mss2, sieve, quadlin, wenger or all")
      ->capture_default_str();
  vf->add_option("--max-q", fl.max_q, "largest field order");
  vf->add_option("--max-n", fl.max_n, "largest degree or size");
  vf->add_option("--p", fl.p, "characteristic for single-field suites");
  vf->add_option("--e", fl.e, "extension degree for single-field suites");
  vf->add_option("--samples", fl.samples, "quadlin tuples per grid point")->capture_default_str();
  vf->add_option("--seed", fl.seed, "quadlin seed")->capture_default_str();
  vf->add_option("--csv-out", fl.csv_out, "write per-point CSV");
  vf->add_flag("--inject-fault", fl.inject_fault)->group("");

  CommandResult result;
  std::ostringstream out, err;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    result.exit_code = app.exit(e, out, err) == 0 ? kOk : kUsage;
    result.out = out.str();
    result.err = err.str();
    return result;
  }

  try {
    RunConfig config;
    std::string config_path = flag_config;
    if (config_path.empty()) {
      if (auto it = env.find("FQCOUNT_CONFIG"); it != env.end()) config_path = it->second;
    }
    if (!config_path.empty()) {
      std::ifstream file(config_path);
      if (!file) throw PreconditionError("cannot read config file " + config_path);
      std::stringstream text;
      text << file.rdbuf();
      apply_config_text(text.str(), config);
      config.config_path = config_path;
    }
    apply_environment(env, config);
    if (o_budget->count()) config.budget.max_items = flag_budget;
    if (o_par->count()) config.parallelism = flag_parallelism;
    if (o_format->count()) config.output_format = parse_format(flag_format);
    if (config.budget.max_items < 10'000) {
      throw PreconditionError("budget must be at least 10000");
    }
    config.budget.workers = config.parallelism;

    if (field->parsed()) result.out = cmd_field(config, fl);
    else if (count->parsed()) result.out = cmd_count(config, fl);
    else if (subset->parsed()) result.out = cmd_subset(config, fl);
    else if (mss2->parsed()) result.out = cmd_mss2(config, fl);
    else if (quadlin->parsed()) result.out = cmd_quadlin(config, fl);
    else if (sv->parsed()) result.out = cmd_sieve(config, fl);
    else if (wg->parsed()) result.out = cmd_wenger(config, fl);
    else if (vf->parsed()) result.out = cmd_verify(config, fl);
  } catch (const MismatchError& e) {
    result.exit_code = kMismatch;
    result.out = e.out();
    result.err = std::string(e.what()) + "\n";
  } catch (const IntegrityError& e) {
    result.exit_code = kMismatch;
    result.err = std::string("integrity check failed: ") + e.what() + "\n";
  } catch (const BudgetExceeded& e) {
    result.exit_code = kBudget;
    result.err = std::string("budget exceeded: ") + e.what() + "\n";
  } catch (const std::exception& e) {
    result.exit_code = kUsage;
    result.err = std::string("precondition violated: ") + e.what() + "\n";
  }
  return result;
}

}  // namespace fqcount::cli
