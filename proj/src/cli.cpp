#include "jacmult/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "jacmult/genfun.hpp"
#include "jacmult/groebner.hpp"
#include "jacmult/modspace.hpp"
#include "jacmult/parser.hpp"
#include "jacmult/polyalg.hpp"
#include "jacmult/singularity.hpp"

namespace jacmult::cli {

using json = nlohmann::ordered_json;

namespace {

struct GlobalFlags {
  std::string format = "text";
  bool modular_check = false;
  std::uint64_t step_limit = kDefaultStepLimit;
};

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  [[nodiscard]] std::string elapsed_ms() const {
    const std::chrono::duration<double, std::milli> d = std::chrono::steady_clock::now() - start_;
    std::ostringstream os;
    os << std::fixed << std::setprecision(3) << d.count();
    return os.str();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

std::string dec(const BigInt& n) { return n.get_str(); }
template <typename N>
std::string dec(N n) {
  return std::to_string(n);
}

void fail_check(CommandResult& r, const std::string& message) {
  if (r.status == "ok") {
    r.status = "check_failed";
    r.message = message;
  }
  r.exit_code = 1;
}

json report_json(const ValidationReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    json entry{{"check", c.name}, {"passed", c.passed}};
    if (!c.passed) entry["witness"] = c.witness;
    checks.push_back(std::move(entry));
  }
  return checks;
}

json marked_json(const MarkedData& m) {
  json points = json::array(), lines = json::array();
  for (const auto& p : m.points) points.push_back(json::array({p.s.to_string(), p.t.to_string()}));
  for (const auto& l : m.lines) {
    lines.push_back(json::array(
        {l.coefficients[0].to_string(), l.coefficients[1].to_string(), l.coefficients[2].to_string()}));
  }
  return json{{"points", points}, {"lines", lines}};
}

// ----------------------------------------------------------------------------

void torus_mult(CommandResult& r, const GlobalFlags& g, unsigned p, unsigned q, const std::string& method) {
  r.inputs = json{{"p", dec(p)}, {"q", dec(q)}, {"method", method}};
  const TorusKnotSingularity s(p, q);
  GroebnerOptions options;
  options.step_limit = g.step_limit;
  const bool all = method == "all";
  std::vector<BigInt> values;

  if (all || method == "closed") {
    Stopwatch w;
    const BigInt v = multiplicity_closed_form(s);
    r.results["closed_form"] = dec(v);
    r.timings["closed_form"] = w.elapsed_ms();
    values.push_back(v);
  }
  if (all || method == "groebner") {
    Stopwatch w;
    const std::size_t v = multiplicity_via_groebner(p, q, options);
    r.results["groebner"] = dec(v);
    r.timings["groebner"] = w.elapsed_ms();
    values.emplace_back(static_cast<unsigned long>(v));
    if (g.modular_check) {
      Stopwatch wm;
      const std::size_t vm = multiplicity_via_groebner_mod_p(p, q, options);
      r.results["groebner_mod_p"] = dec(vm);
      r.timings["groebner_mod_p"] = wm.elapsed_ms();
      r.results["modular_agree"] = vm == v;
      if (vm != v) fail_check(r, "rational and mod-" + std::to_string(kDefaultPrime) + " lengths differ");
    }
  }
  if (all || method == "bezout") {
    Stopwatch w;
    const auto sys = build_torus_knot_system(p, q);
    const BigInt v = weighted_bezout_length(sys.equation_degrees, sys.weights);
    r.results["bezout"] = dec(v);
    r.timings["bezout"] = w.elapsed_ms();
    values.push_back(v);
  }
  const bool agree = std::all_of(values.begin(), values.end(), [&](const BigInt& v) { return v == values.front(); });
  r.results["agree"] = agree;
  if (!agree) fail_check(r, "methods disagree");
}

void delta(CommandResult& r, unsigned p, unsigned q) {
  r.inputs = json{{"p", dec(p)}, {"q", dec(q)}};
  Stopwatch w;
  const TorusKnotSingularity s(p, q);
  const auto gaps = semigroup_gaps(s);
  const auto d = delta_invariant(s);
  const auto c = conductor_exponent(s);
  json gap_list = json::array();
  for (auto x : gaps) gap_list.push_back(dec(x));
  r.results["delta"] = dec(d);
  r.results["semigroup_gaps"] = gap_list;
  r.results["gap_count"] = dec(gaps.size());
  r.results["conductor"] = dec(c);
  r.results["multiplicity"] = dec(multiplicity_closed_form(s));
  r.timings["total"] = w.elapsed_ms();
  const bool ok = gaps.size() == d && c == 2 * d;
  r.results["consistent"] = ok;
  if (!ok) fail_check(r, "delta, gap count and conductor disagree");
}

void counts(CommandResult& r, std::size_t gmax) {
  r.inputs = json{{"gmax", dec(gmax)}};
  Stopwatch w;
  const auto n = rational_curve_counts(gmax);
  r.timings["counts"] = w.elapsed_ms();
  json table = json::array();
  bool positive = true;
  for (const auto& v : n) {
    table.push_back(dec(v));
    positive = positive && v > 0;
  }
  r.results["counts"] = table;
  Stopwatch wc;
  const bool cross = counts_cross_check(gmax);
  r.timings["cross_check"] = wc.elapsed_ms();
  r.results["cross_check"] = cross;
  r.results["all_positive"] = positive;
  if (!cross) fail_check(r, "independent pipelines disagree");
  if (!positive) fail_check(r, "non-positive count");
}

void length(CommandResult& r, const GlobalFlags& g, const std::string& path, bool local, unsigned cap) {
  r.inputs = json{{"input", path}, {"local", local}};
  if (local) r.inputs["cap"] = dec(cap);
  const auto src = parse_poly_source(read_file(path));
  r.inputs["ring"] = src.ring.to_string();
  r.inputs["order"] = src.order.to_string();
  json gens = json::array();
  for (const auto& p : src.polynomials) gens.push_back(to_string(p));
  r.inputs["generators"] = gens;
  const Ideal ideal = Ideal::from_nonzero(src.polynomials, src.order);

  if (local) {
    LocalLengthOptions options;
    options.cap = cap;
    options.step_limit = g.step_limit;
    Stopwatch w;
    const std::size_t len = local_length_at_origin(ideal, options);
    r.timings["local_length"] = w.elapsed_ms();
    r.results["local_length"] = dec(len);
    if (g.modular_check) {
      Stopwatch wm;
      const std::size_t lm = local_length_at_origin(reduce_mod_prime(ideal), options);
      r.timings["local_length_mod_p"] = wm.elapsed_ms();
      r.results["local_length_mod_p"] = dec(lm);
      r.results["modular_agree"] = lm == len;
      if (lm != len) fail_check(r, "rational and modular local lengths differ");
    }
    return;
  }

  GroebnerOptions options;
  options.step_limit = g.step_limit;
  Stopwatch w;
  const auto gb = buchberger(ideal, options);
  const auto dim = quotient_dimension(gb);
  r.timings["groebner"] = w.elapsed_ms();
  json basis = json::array();
  for (const auto& b : gb.basis()) basis.push_back(to_string(b));
  r.results["basis"] = basis;
  r.results["zero_dimensional"] = dim.has_value();
  r.results["dimension"] = dim ? dec(*dim) : std::string("infinite");
  if (g.modular_check) {
    Stopwatch wm;
    const auto dm = quotient_dimension(buchberger(reduce_mod_prime(ideal), options));
    r.timings["groebner_mod_p"] = wm.elapsed_ms();
    r.results["dimension_mod_p"] = dm ? dec(*dm) : std::string("infinite");
    r.results["modular_agree"] = dm == dim;
    if (dm != dim) fail_check(r, "rational and modular dimensions differ (unlucky prime?)");
  }
}

StableMapProblem load_problem(CommandResult& r, const std::string& path, std::uint64_t seed) {
  const auto doc = parse_stable_map_document(read_file(path));
  const ParameterChange change = normalizing_change(doc.curve);
  StableMapProblem problem{apply(change, doc.curve), {}};
  r.results["parameter_change"] = change.describe();
  r.inputs["degree"] = dec(doc.curve.degree);
  r.inputs["param"] = json::array({to_string(doc.curve.parametrization[0]), to_string(doc.curve.parametrization[1]),
                                    to_string(doc.curve.parametrization[2])});
  r.inputs["implicit"] = to_string(doc.curve.implicit_equation);
  if (doc.marked_points) {
    for (int i = 0; i < 3; ++i) {
      problem.marked.points[i] = apply(change, (*doc.marked_points)[i]);
      problem.marked.lines[i] = (*doc.marked_lines)[i];
    }
    r.results["marked_data_source"] = "input";
  } else {
    r.results["marked_data_source"] = "auto (seed " + std::to_string(seed) + ")";
    problem.marked = choose_marked_data(problem.curve, seed);
  }
  r.results["marked_data"] = marked_json(problem.marked);
  return problem;
}

void stable_map(CommandResult& r, const GlobalFlags& g, const std::string& path, std::uint64_t seed, unsigned cap) {
  r.inputs = json{{"input", path}, {"seed", dec(seed)}, {"cap", dec(cap)}};
  Stopwatch w;
  const auto problem = load_problem(r, path, seed);
  const auto report = validate_stable_map_input(problem);
  r.results["validation"] = report_json(report);
  if (!report.ok()) {
    fail_check(r, "invalid stable-map input: " + report.first_failure()->witness);
    return;
  }
  const auto sys = build_stable_map_system(problem);
  r.results["variables"] = dec(sys.ring.size());
  r.results["equations"] = dec(sys.equations().size());
  r.timings["build"] = w.elapsed_ms();

  LocalLengthOptions options;
  options.cap = cap;
  options.step_limit = g.step_limit;
  Stopwatch wl;
  const std::size_t len = local_length_at_origin(sys.ideal(), options);
  r.timings["local_length"] = wl.elapsed_ms();
  r.results["local_length"] = dec(len);
  if (g.modular_check) {
    Stopwatch wm;
    const std::size_t lm = local_length_at_origin(reduce_mod_prime(sys.ideal()), options);
    r.timings["local_length_mod_p"] = wm.elapsed_ms();
    r.results["local_length_mod_p"] = dec(lm);
    r.results["modular_agree"] = lm == len;
    if (lm != len) fail_check(r, "rational and modular local lengths differ");
  }
}

void validate(CommandResult& r, const std::string& path, std::uint64_t seed) {
  r.inputs = json{{"input", path}};
  const auto doc = parse_stable_map_document(read_file(path));
  r.inputs["degree"] = dec(doc.curve.degree);
  ValidationReport report;
  if (doc.marked_points) {
    StableMapProblem problem{doc.curve, {}};
    for (int i = 0; i < 3; ++i) {
      problem.marked.points[i] = (*doc.marked_points)[i];
      problem.marked.lines[i] = (*doc.marked_lines)[i];
    }
    report = validate_stable_map_input(problem);
    r.results["marked_data_source"] = "input";
  } else {
    report = validate_curve(doc.curve);
    r.results["marked_data_source"] = "omitted (curve checks only)";
    (void)seed;
  }
  r.results["validation"] = report_json(report);
  r.results["valid"] = report.ok();
  if (!report.ok()) fail_check(r, report.first_failure()->name + ": " + report.first_failure()->witness);
}

// ---------------------------------------------------------------------------

void render_value(std::ostringstream& os, const json& v, int indent);

std::string scalar(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  return v.dump();
}

bool all_scalars(const json& arr) {
  return std::all_of(arr.begin(), arr.end(), [](const json& e) { return e.is_primitive(); });
}

std::string scalar_list(const json& arr) {
  std::string s = "[";
  bool first = true;
  for (const auto& e : arr) {
    if (!first) s += ", ";
    first = false;
    s += e.is_array() ? scalar_list(e) : scalar(e);
  }
  return s + "]";
}

void render_object(std::ostringstream& os, const json& obj, int indent) {
  for (const auto& [key, value] : obj.items()) {
    os << std::string(indent, ' ') << key;
    if (value.is_primitive()) {
      os << " = " << scalar(value) << '\n';
    } else if (value.is_array() && std::all_of(value.begin(), value.end(), [](const json& e) {
                 return e.is_primitive() || (e.is_array() && all_scalars(e));
               })) {
      os << " = " << scalar_list(value) << '\n';
    } else {
      os << ":\n";
      render_value(os, value, indent + 2);
    }
  }
}

void render_value(std::ostringstream& os, const json& v, int indent) {
  if (v.is_object()) {
    render_object(os, v, indent);
  } else if (v.is_array()) {
    for (const auto& e : v) {
      if (e.is_object() && e.contains("check")) {
        os << std::string(indent, ' ') << (e["passed"].get<bool>() ? "pass  " : "FAIL  ")
           << e["check"].get<std::string>();
        if (e.contains("witness")) os << ": " << e["witness"].get<std::string>();
        os << '\n';
      } else if (e.is_primitive()) {
        os << std::string(indent, ' ') << scalar(e) << '\n';
      } else {
        os << std::string(indent, ' ') << "-\n";
        render_value(os, e, indent + 2);
      }
    }
  } else {
    os << std::string(indent, ' ') << scalar(v) << '\n';
  }
}

}  // namespace

std::string CommandResult::to_json() const {
  json out{{"subcommand", subcommand}, {"inputs", inputs},   {"results", results},
           {"timings", timings},       {"status", status}};
  if (!message.empty()) out["message"] = message;
  return out.dump(2) + "\n";
}

std::string CommandResult::to_text() const {
  std::ostringstream os;
  os << "subcommand: " << (subcommand.empty() ? "(none)" : subcommand) << '\n';
  os << "status: " << status << '\n';
  if (!message.empty()) os << "message: " << message << '\n';
  if (!inputs.empty()) {
    os << "inputs:\n";
    render_object(os, inputs, 2);
  }
  if (!results.empty()) {
    os << "results:\n";
    render_object(os, results, 2);
  }
  if (!timings.empty()) {
    os << "timings_ms:\n";
    render_object(os, timings, 2);
  }
  return os.str();
}

CommandResult run(std::span<const std::string> args) {
  CommandResult r;
  GlobalFlags g;

  CLI::App app{"Multiplicities of delta-constant strata and related counts"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--modular-check", g.modular_check, "Repeat Gröbner computations modulo 32003 and compare");
  app.add_option("--step-limit", g.step_limit, "Gröbner reduction step limit")->check(CLI::PositiveNumber);

  unsigned p = 0, q = 0;
  std::string method = "all";
  auto* tm = app.add_subcommand("torus-mult", "Multiplicity of x^q = y^p by closed form, Gröbner and Bézout");
  tm->add_option("--p", p)->required();
  tm->add_option("--q", q)->required();
  tm->add_option("--method", method)->check(CLI::IsMember({"closed", "groebner", "bezout", "all"}));

  auto* dl = app.add_subcommand("delta", "Delta invariant, semigroup gaps and conductor of x^q = y^p");
  dl->add_option("--p", p)->required();
  dl->add_option("--q", q)->required();

  std::size_t gmax = 100;
  auto* ct = app.add_subcommand("counts", "Rational curve counts n(0..G) from q/Delta(q)");
  ct->add_option("--gmax", gmax);

  std::string input;
  bool local = false;
  unsigned cap = 50;
  auto* ln = app.add_subcommand("length", "Length of the quotient by a polynomial ideal");
  ln->add_option("--input", input)->required();
  ln->add_flag("--local", local, "Length of the localization at the origin");
  ln->add_option("--cap", cap)->check(CLI::PositiveNumber);

  std::uint64_t seed = kDefaultMarkedDataSeed;
  auto* sm = app.add_subcommand("stable-map", "Length of the stable-map scheme at the normalization");
  sm->add_option("--input", input)->required();
  sm->add_option("--seed", seed, "Seed for automatic marked data");
  sm->add_option("--cap", cap)->check(CLI::PositiveNumber);

  auto* va = app.add_subcommand("validate", "Validate a stable-map input document");
  va->add_option("--input", input)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    r.status = "ok";
    r.message = app.help();
    r.format = g.format;
    return r;
  } catch (const CLI::ParseError& e) {
    r.status = "error";
    r.message = e.what();
    r.exit_code = 2;
    r.format = g.format == "json" ? "json" : "text";
    if (auto subs = app.get_subcommands(); !subs.empty()) r.subcommand = subs.front()->get_name();
    return r;
  }
  r.format = g.format;
  r.subcommand = app.get_subcommands().front()->get_name();

  try {
    if (*tm) torus_mult(r, g, p, q, method);
    else if (*dl) delta(r, p, q);
    else if (*ct) counts(r, gmax);
    else if (*ln) length(r, g, input, local, cap);
    else if (*sm) stable_map(r, g, input, seed, cap);
    else if (*va) validate(r, input, seed);
  } catch (const jacmult::ParseError& e) {
    r.status = "error";
    r.message = e.what();
    r.exit_code = 2;
  } catch (const std::exception& e) {
    r.status = "error";
    r.message = e.what();
    r.exit_code = 1;
  }
  return r;
}

int main(int argc, const char* const* argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const CommandResult r = run(args);
  if (r.status == "ok" && r.subcommand.empty() && !r.message.empty()) {
    std::cout << r.message;
    return 0;
  }
  std::cout << r.render();
  return r.exit_code;
}

}  // namespace jacmult::cli
