// Copyright 2026 The mixlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mixlab/cli/run.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "mixlab/cli/report.hpp"
#include "mixlab/cli/text_formats.hpp"
#include "mixlab/errors.hpp"
#include "mixlab/haar.hpp"
#include "mixlab/laurent_poly.hpp"
#include "mixlab/mixing.hpp"
#include "mixlab/ratfunc.hpp"
#include "mixlab/sunit.hpp"
#include "mixlab/window_oracle.hpp"

namespace mixlab::cli {
namespace {

struct RunConfig {
  std::string command;
  // System and probes.
  std::uint32_t p = 0;
  std::size_t d = 0;
  std::string poly;
  std::vector<std::string> cylinders;
  std::string translates;
  std::string shape;
  std::string values;
  std::string n_range;
  std::string window;
  std::uint64_t max_nodes = kDefaultOracleBudget;
  // S-unit lab.
  std::string gens;
  std::string coeffs;
  std::string subset;
  std::string height;
  bool sign = false;
  std::uint64_t max_work = kDefaultEnumerationBudget;
  std::string base;
  // Output.
  std::string format = "json";
  std::string output;
  unsigned threads = 1;
};

const std::vector<std::string> kCommands = {"measure",   "scan",         "witness",
                                            "oracle",    "sunit-enum",   "sunit-family",
                                            "sunit-frobenius"};

// Splices key=value lines from --config FILE into the argument list right
// after the subcommand. Keys given explicitly on the command line win.
std::vector<std::string> expand_config(std::vector<std::string> args) {
  std::optional<std::string> path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i), args.begin() + static_cast<std::ptrdiff_t>(i) + 2);
      break;
    }
    if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
      break;
    }
  }
  if (!path) return args;

  std::ifstream in(*path);
  if (!in) throw DomainError("cannot read config file '" + *path + "'");
  std::vector<std::string> extra;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto body = std::string(split(line, '#').front());
    if (body.empty()) continue;
    auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw ParseError("config line " + std::to_string(line_no) + " is not key=value", 0);
    }
    auto key = std::string(split(body.substr(0, eq), ' ').front());
    auto value = std::string(split(body.substr(eq + 1), '\n').front());
    const std::string flag = "--" + key;
    const bool on_command_line = std::any_of(args.begin(), args.end(), [&](const std::string& a) {
      return a == flag || a.rfind(flag + "=", 0) == 0;
    });
    if (on_command_line) continue;
    if (value == "true") {
      extra.push_back(flag);
    } else if (value != "false") {
      extra.push_back(flag);
      extra.push_back(value);
    }
  }
  auto at = std::find_first_of(args.begin(), args.end(), kCommands.begin(), kCommands.end());
  if (at == args.end()) throw DomainError("--config requires a subcommand");
  args.insert(at + 1, extra.begin(), extra.end());
  return args;
}

unsigned threads_from_env() {
  const char* raw = std::getenv(kThreadsEnv);
  if (raw == nullptr || *raw == '\0') return 1;
  char* end = nullptr;
  const unsigned long v = std::strtoul(raw, &end, 10);
  if (*end != '\0' || v == 0 || v > 1024) {
    throw DomainError(std::string(kThreadsEnv) + " must be an integer in 1..1024");
  }
  return static_cast<unsigned>(v);
}

SystemSpec system_of(const RunConfig& cfg) {
  require_valid_modulus(cfg.p);
  if (cfg.d < 1) throw DomainError("dimension must be at least 1");
  return SystemSpec(cfg.p, cfg.d, parse_poly(cfg.poly, cfg.p, cfg.d));
}

Json system_json(const SystemSpec& sys) {
  Json j;
  j["p"] = sys.p;
  j["d"] = sys.d;
  j["poly"] = to_string(sys.f);
  return j;
}

Json cylinder_json(const CylinderSpec& c) {
  Json j;
  j["sites"] = points_json(c.sites());
  j["values"] = c.values();
  return j;
}

Json range_json(std::int64_t first, std::int64_t last) { return Json::array({first, last}); }

Report envelope(const std::string& command, Json input) {
  Report r;
  r.json["schema"] = kSchemaVersion;
  r.json["command"] = command;
  r.json["input"] = std::move(input);
  return r;
}

std::string join_values(const std::vector<std::uint32_t>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

DilationRange dilation_range(const std::string& text) {
  auto [first, last] = parse_interval(text);
  return DilationRange(first, last);
}

Report cmd_measure(const RunConfig& cfg) {
  const auto sys = system_of(cfg);
  std::vector<CylinderSpec> cylinders;
  for (const auto& text : cfg.cylinders) cylinders.push_back(parse_cylinder(text, sys.d));
  if (cylinders.empty()) cylinders.emplace_back(sys.d);
  auto translates = parse_points(cfg.translates, sys.d);
  if (translates.empty()) translates.assign(cylinders.size(), ExpVec(sys.d));
  if (translates.size() != cylinders.size()) {
    throw DomainError("--translates needs one point per --cylinder");
  }
  const auto m = joint_measure(sys, cylinders, translates);

  Json input = system_json(sys);
  input["cylinders"] = Json::array();
  for (const auto& c : cylinders) input["cylinders"].push_back(cylinder_json(c));
  input["translates"] = points_json(translates);
  Report r = envelope("measure", std::move(input));
  r.json["result"]["measure"] = rational_json(m.value);
  r.json["result"]["log_p_exponent"] = m.log_exponent ? Json(*m.log_exponent) : Json(nullptr);
  r.csv = {{"measure", "log_p_exponent"},
           {to_string(m.value), m.log_exponent ? std::to_string(*m.log_exponent) : ""}};
  return r;
}

Report cmd_scan(const RunConfig& cfg) {
  const auto sys = system_of(cfg);
  const Shape shape(parse_points(cfg.shape, sys.d));
  auto values = parse_values(cfg.values);
  if (values.empty()) values.assign(shape.size(), 0);
  if (values.size() != shape.size()) throw DomainError("--values needs one value per shape point");
  const auto range = dilation_range(cfg.n_range);
  const auto cylinders = singleton_cylinders(sys.d, values);
  const auto records = dilation_scan(sys, shape, cylinders, range, cfg.threads);

  Json input = system_json(sys);
  input["shape"] = points_json(shape.points());
  input["values"] = values;
  input["n"] = range_json(range.first, range.last);
  Report r = envelope("scan", std::move(input));
  r.json["result"]["records"] = Json::array();
  r.csv.push_back({"n", "joint", "product", "defect", "witness_dim"});
  for (const auto& rec : records) {
    Json j;
    j["n"] = rec.n;
    j["joint"] = rational_json(rec.joint);
    j["product"] = rational_json(rec.product);
    j["defect"] = rational_json(rec.defect);
    j["witness_dim"] = rec.witness_dim;
    r.json["result"]["records"].push_back(std::move(j));
    r.csv.push_back({std::to_string(rec.n), to_string(rec.joint), to_string(rec.product),
                     to_string(rec.defect), std::to_string(rec.witness_dim)});
  }
  return r;
}

Report cmd_witness(const RunConfig& cfg) {
  const auto sys = system_of(cfg);
  const Shape shape(parse_points(cfg.shape, sys.d));
  const auto range = dilation_range(cfg.n_range);
  const auto scan = witness_scan(sys, shape, range, cfg.threads);

  Json input = system_json(sys);
  input["shape"] = points_json(shape.points());
  input["n"] = range_json(range.first, range.last);
  Report r = envelope("witness", std::move(input));
  r.json["result"]["records"] = Json::array();
  r.csv.push_back({"n", "witness_dim", "coeffs", "quotient"});
  for (const auto& [n, dim] : scan) {
    Json j;
    j["n"] = n;
    j["witness_dim"] = dim;
    std::vector<std::string> row{std::to_string(n), std::to_string(dim), "", ""};
    if (dim > 0) {
      const auto w = shape_witness(sys, shape, n);
      std::vector<std::uint32_t> coeffs;
      for (const auto& c : w->coeffs) coeffs.push_back(c.residue());
      j["witness"]["coeffs"] = coeffs;
      j["witness"]["quotient"] = to_string(w->quotient);
      row[2] = join_values(coeffs, " ");
      row[3] = to_string(w->quotient);
    } else {
      j["witness"] = nullptr;
    }
    r.json["result"]["records"].push_back(std::move(j));
    r.csv.push_back(std::move(row));
  }
  return r;
}

Report cmd_oracle(const RunConfig& cfg) {
  const auto sys = system_of(cfg);
  if (cfg.cylinders.size() > 1) throw DomainError("oracle takes a single --cylinder");
  const auto c = cfg.cylinders.empty() ? CylinderSpec(sys.d) : parse_cylinder(cfg.cylinders[0], sys.d);
  const auto window = parse_box(cfg.window, sys.d);
  const auto rep = window_oracle(sys, c, window, cfg.max_nodes);

  Json input = system_json(sys);
  input["cylinder"] = cylinder_json(c);
  input["window"] = {{"lo", point_json(window.lo)}, {"hi", point_json(window.hi)}};
  input["max_nodes"] = cfg.max_nodes;
  Report r = envelope("oracle", std::move(input));
  r.json["result"]["configurations"] = rep.configurations;
  r.json["result"]["image_size"] = rep.image_size;
  r.json["result"]["matching"] = rep.matching;
  r.json["result"]["measure_estimate"] = rational_json(rep.measure_estimate);
  r.json["result"]["stabilized"] = rep.stabilized;
  r.csv = {{"window", "configurations", "image_size", "matching", "measure_estimate", "stabilized"},
           {to_string(window), std::to_string(rep.configurations), std::to_string(rep.image_size),
            std::to_string(rep.matching), to_string(rep.measure_estimate),
            rep.stabilized ? "true" : "false"}};
  return r;
}

Json rationals_json(const std::vector<Rational>& qs) {
  Json j = Json::array();
  for (const auto& q : qs) j.push_back(to_string(q));
  return j;
}

std::string subsets_text(const Degeneracy& deg) {
  std::string s;
  for (const auto& subset : deg.vanishing_subsets) {
    s += '{';
    for (std::size_t i = 0; i < subset.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(subset[i] + 1);
    }
    s += '}';
  }
  return s;
}

Json sunit_input(const RunConfig& cfg, const std::vector<Rational>& gens,
                 const std::vector<Rational>& coeffs) {
  Json input;
  input["gens"] = rationals_json(gens);
  input["allow_sign"] = cfg.sign;
  input["coeffs"] = rationals_json(coeffs);
  input["max_work"] = cfg.max_work;
  return input;
}

Report cmd_sunit_enum(const RunConfig& cfg) {
  const auto gens = parse_rationals(cfg.gens);
  const auto coeffs = parse_rationals(cfg.coeffs);
  const SUnitGroup group(gens, cfg.sign);
  const SUnitEquation eq(coeffs);
  auto [h, h_end] = parse_interval(cfg.height);
  if (h != h_end) throw DomainError("sunit-enum takes a single --height");
  const auto sols = enumerate_solutions(eq, group, h, cfg.max_work, cfg.threads);

  Json input = sunit_input(cfg, gens, coeffs);
  input["height"] = h;
  Report r = envelope("sunit-enum", std::move(input));
  std::size_t non_degenerate = 0;
  Json list = Json::array();
  std::vector<std::string> header{"index"};
  for (std::size_t j = 0; j < eq.size(); ++j) header.push_back("x" + std::to_string(j + 1));
  header.push_back("degenerate");
  header.push_back("vanishing_subsets");
  r.csv.push_back(std::move(header));
  for (std::size_t i = 0; i < sols.size(); ++i) {
    const auto& s = sols[i];
    if (!s.degeneracy.degenerate()) ++non_degenerate;
    Json j;
    j["values"] = Json::array();
    for (const auto& v : s.values) j["values"].push_back(rational_json(v));
    j["exponents"] = Json::array();
    for (const auto& e : s.exponents) {
      j["exponents"].push_back({{"e", e.exponents}, {"sign", e.sign}});
    }
    j["degenerate"] = s.degeneracy.degenerate();
    j["vanishing_subsets"] = Json::array();
    for (const auto& subset : s.degeneracy.vanishing_subsets) {
      Json one = Json::array();
      for (auto idx : subset) one.push_back(idx + 1);
      j["vanishing_subsets"].push_back(std::move(one));
    }
    list.push_back(std::move(j));
    std::vector<std::string> row{std::to_string(i + 1)};
    for (const auto& v : s.values) row.push_back(to_string(v));
    row.push_back(s.degeneracy.degenerate() ? "true" : "false");
    row.push_back(subsets_text(s.degeneracy));
    r.csv.push_back(std::move(row));
  }
  r.json["result"]["count"] = sols.size();
  r.json["result"]["non_degenerate_count"] = non_degenerate;
  r.json["result"]["solutions"] = std::move(list);
  return r;
}

Report cmd_sunit_family(const RunConfig& cfg) {
  const auto gens = parse_rationals(cfg.gens);
  const auto coeffs = parse_rationals(cfg.coeffs);
  const SUnitGroup group(gens, cfg.sign);
  const SUnitEquation eq(coeffs);
  std::vector<std::size_t> subset;
  for (auto idx : parse_values(cfg.subset)) {
    if (idx < 1) throw DomainError("--subset indices are 1-based");
    subset.push_back(idx - 1);
  }
  auto [h_first, h_last] = parse_interval(cfg.height);
  if (h_first < 0 || h_last < h_first) throw DomainError("--height must be a non-empty range of non-negative integers");

  Json input = sunit_input(cfg, gens, coeffs);
  Json one_based = Json::array();
  for (auto idx : subset) one_based.push_back(idx + 1);
  input["subset"] = std::move(one_based);
  input["height"] = range_json(h_first, h_last);
  Report r = envelope("sunit-family", std::move(input));
  r.json["result"]["records"] = Json::array();
  r.csv.push_back({"height", "count"});
  for (auto h = h_first; h <= h_last; ++h) {
    const auto count = degenerate_family_count(eq, group, subset, h, cfg.max_work, cfg.threads);
    r.json["result"]["records"].push_back({{"height", h}, {"count", count}});
    r.csv.push_back({std::to_string(h), std::to_string(count)});
  }
  return r;
}

Report cmd_sunit_frobenius(const RunConfig& cfg) {
  require_valid_modulus(cfg.p);
  std::vector<std::uint32_t> coeffs;
  for (const auto& q : parse_rationals(cfg.coeffs)) {
    if (boost::multiprecision::denominator(q) != 1) {
      throw DomainError("F_p coefficients must be integers");
    }
    const BigInt n = boost::multiprecision::numerator(q);
    const BigInt p = cfg.p;
    coeffs.push_back(static_cast<std::uint32_t>((((n % p) + p) % p).convert_to<std::uint64_t>()));
  }
  std::vector<RatFunc> base;
  for (auto piece : split(cfg.base, ';')) base.push_back(parse_ratfunc(piece, cfg.p));
  auto [first, last] = parse_interval(cfg.n_range);
  if (first < 0 || last < first) throw DomainError("--n must be a non-empty range of non-negative integers");

  Json input;
  input["p"] = cfg.p;
  input["coeffs"] = coeffs;
  input["base"] = Json::array();
  for (const auto& x : base) input["base"].push_back(to_string(x));
  input["n"] = range_json(first, last);
  Report r = envelope("sunit-frobenius", std::move(input));
  r.json["result"]["records"] = Json::array();
  std::vector<std::string> header{"n"};
  for (std::size_t j = 0; j < base.size(); ++j) header.push_back("x" + std::to_string(j + 1));
  header.push_back("verified");
  r.csv.push_back(std::move(header));
  for (auto n = first; n <= last; ++n) {
    const auto orbit = frobenius_orbit(cfg.p, base, coeffs, static_cast<std::uint32_t>(n));
    Json values = Json::array();
    std::vector<std::string> row{std::to_string(n)};
    for (const auto& x : orbit) {
      values.push_back(to_string(x));
      row.push_back(to_string(x));
    }
    const bool verified = solves_unit_equation(orbit, coeffs);
    row.push_back(verified ? "true" : "false");
    r.json["result"]["records"].push_back({{"n", n}, {"values", std::move(values)}, {"verified", verified}});
    r.csv.push_back(std::move(row));
  }
  return r;
}

void add_system_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--p", cfg.p, "Prime modulus")->required();
  sub->add_option("--d", cfg.d, "Lattice dimension")->required();
  sub->add_option("--poly", cfg.poly, "Defining Laurent polynomial, e.g. \"1 + u1 + u2\"")->required();
}

void add_output_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--output", cfg.output, "Write the report to this file instead of stdout");
}

void add_sunit_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--gens", cfg.gens, "Group generators, e.g. 2,3")->required();
  sub->add_option("--coeffs", cfg.coeffs, "Equation coefficients a_1,...,a_k")->required();
  sub->add_flag("--sign", cfg.sign, "Include the unit -1 in the group");
  sub->add_option("--max-work", cfg.max_work, "Enumeration work bound");
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact higher-order mixing and S-unit laboratory", "mixlab"};
  app.require_subcommand(1);

  auto* measure = app.add_subcommand("measure", "Haar measure of a cylinder or of shifted cylinders");
  add_system_options(measure, cfg);
  measure->add_option("--cylinder", cfg.cylinders, "Cylinder \"(s)=v;(s')=v'\"; repeatable");
  measure->add_option("--translates", cfg.translates, "One point per cylinder, \"(a,b);(c,d)\"");
  add_output_options(measure, cfg);

  auto* scan = app.add_subcommand("scan", "Mixing defects along dilates of a shape");
  add_system_options(scan, cfg);
  scan->add_option("--shape", cfg.shape, "Shape points \"(0,0);(1,0);(0,1)\"")->required();
  scan->add_option("--values", cfg.values, "Singleton values, one per shape point");
  scan->add_option("--n", cfg.n_range, "Dilation range a:b")->required();
  add_output_options(scan, cfg);

  auto* witness = app.add_subcommand("witness", "Shape witness dimensions along dilates");
  add_system_options(witness, cfg);
  witness->add_option("--shape", cfg.shape, "Shape points")->required();
  witness->add_option("--n", cfg.n_range, "Dilation range a:b")->required();
  add_output_options(witness, cfg);

  auto* oracle = app.add_subcommand("oracle", "Window-enumeration estimate of a cylinder measure");
  add_system_options(oracle, cfg);
  oracle->add_option("--cylinder", cfg.cylinders, "Cylinder \"(s)=v;...\"");
  oracle->add_option("--window", cfg.window, "Window box \"(lo):(hi)\"")->required();
  oracle->add_option("--max-nodes", cfg.max_nodes, "Search node bound");
  add_output_options(oracle, cfg);

  auto* sunit_enum = app.add_subcommand("sunit-enum", "Solutions of sum a_j x_j = 1 in a height box");
  add_sunit_options(sunit_enum, cfg);
  sunit_enum->add_option("--height", cfg.height, "Exponent bound H")->required();
  add_output_options(sunit_enum, cfg);

  auto* sunit_family = app.add_subcommand("sunit-family", "Degenerate family counts by height");
  add_sunit_options(sunit_family, cfg);
  sunit_family->add_option("--subset", cfg.subset, "Vanishing index subset (1-based), e.g. 2,3")->required();
  sunit_family->add_option("--height", cfg.height, "Height or range a:b")->required();
  add_output_options(sunit_family, cfg);

  auto* sunit_frob = app.add_subcommand("sunit-frobenius", "Frobenius orbit of a solution over F_p(t)");
  sunit_frob->add_option("--p", cfg.p, "Prime modulus")->required();
  sunit_frob->add_option("--coeffs", cfg.coeffs, "Coefficients in F_p")->required();
  sunit_frob->add_option("--base", cfg.base, "Base solution \"t;1+t\"")->required();
  sunit_frob->add_option("--n", cfg.n_range, "Frobenius iterates a:b")->required();
  add_output_options(sunit_frob, cfg);

  try {
    auto args = expand_config(raw_args);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  try {
    cfg.threads = threads_from_env();
    Report report;
    if (measure->parsed()) {
      report = cmd_measure(cfg);
    } else if (scan->parsed()) {
      report = cmd_scan(cfg);
    } else if (witness->parsed()) {
      report = cmd_witness(cfg);
    } else if (oracle->parsed()) {
      report = cmd_oracle(cfg);
    } else if (sunit_enum->parsed()) {
      report = cmd_sunit_enum(cfg);
    } else if (sunit_family->parsed()) {
      report = cmd_sunit_family(cfg);
    } else {
      report = cmd_sunit_frobenius(cfg);
    }
    const auto format = cfg.format == "csv" ? OutputFormat::kCsv : OutputFormat::kJson;
    if (cfg.output.empty()) {
      write_report(report, format, out);
    } else {
      std::ofstream file(cfg.output, std::ios::binary);
      if (!file) throw DomainError("cannot open output file '" + cfg.output + "'");
      write_report(report, format, file);
    }
    return kExitOk;
  } catch (const WorkBoundError& e) {
    err << "work bound exceeded: " << e.what() << '\n';
    return kExitWorkBound;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace mixlab::cli
