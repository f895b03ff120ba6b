#include "monopole/cli.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "monopole/errors.hpp"
#include "monopole/families.hpp"
#include "monopole/kontsevich.hpp"
#include "monopole/reference.hpp"
#include "monopole/representation.hpp"
#include "monopole/star_product.hpp"
#include "monopole/verification.hpp"

namespace monopole::cli {

using io::json;

namespace {

json vec_json(const Vec3& v) { return json::array({v.x, v.y, v.z}); }

json complex_json(std::complex<double> c) { return json{{"re", c.real()}, {"im", c.imag()}}; }

Vec3 vec_from_json(const json& j, const char* name) {
  if (!j.contains(name)) throw ConfigError(std::string("kernel point: missing '") + name + "'");
  const json& v = j.at(name);
  if (!v.is_array() || v.size() != 3) throw ConfigError(std::string("kernel point: '") + name + "' must have 3 numbers");
  return {v[0].get<double>(), v[1].get<double>(), v[2].get<double>()};
}

json header(const RunConfig& c) {
  json out;
  out["schema_version"] = io::kSchemaVersion;
  out["command"] = c.command;
  if (!c.target.empty()) out["target"] = c.target;
  return out;
}

std::vector<NamedSymbol> family_for(const RunConfig& c) { return parse_family(c.family); }

// ---- expand -------------------------------------------------------------------------------

std::vector<BidiffOperator> bind_mu_half_hbar(const std::vector<BidiffOperator>& ops) {
  std::vector<BidiffOperator> out(ops.size());
  for (std::size_t n = 0; n < ops.size(); ++n) {
    const int top = ops[n].max_mu_degree();
    GaussianRational weight = GaussianRational::integer(1);
    for (int k = 0; k <= top; ++k) {
      if (n + static_cast<std::size_t>(k) < ops.size()) out[n + static_cast<std::size_t>(k)] += ops[n].mu_component(k) * weight;
      weight = weight * GaussianRational(1, 2);
    }
  }
  return out;
}

json operators_json(const std::vector<BidiffOperator>& ops) {
  json list = json::array();
  for (std::size_t n = 0; n < ops.size(); ++n) {
    list.push_back(json{{"order", n}, {"term_count", ops[n].terms().size()}, {"terms", io::to_json(ops[n])}});
  }
  return list;
}

json reference_check(const std::vector<BidiffOperator>& ops, const std::string& path_override, bool& pass) {
  const std::string path =
      path_override.empty() ? default_data_dir() + "/star_order2_reference.json" : path_override;
  const std::vector<BidiffOperator> ref = load_operator_table_file(path);
  json orders = json::array();
  pass = true;
  for (std::size_t n = 0; n < std::min(ops.size(), ref.size()); ++n) {
    const bool match = ops[n] == ref[n];
    pass = pass && match;
    orders.push_back(json{{"order", n}, {"match", match}, {"reference_terms", ref[n].terms().size()}});
  }
  return json{{"path", path}, {"orders", orders}, {"match", pass}};
}

RunResult run_expand(const RunConfig& c) {
  if (c.order < 0) throw ConfigError("expand: order must be non-negative");
  std::vector<BidiffOperator> ops = star_operators(c.order);
  json out = header(c);
  out["inputs"] = json{{"order", c.order}, {"mu_mode", c.mu_bind ? "bound" : "symbolic"}};
  bool pass = true;
  if (c.mu_bind) {
    ops = bind_mu_half_hbar(ops);
    out["inputs"]["mu_value"] = "hbar/2";
  }
  out["operators"] = operators_json(ops);
  if (!c.mu_bind) {
    out["reference"] = reference_check(ops, c.reference_path, pass);
  } else {
    out["reference"] = nullptr;
  }
  out["pass"] = pass;
  return {pass ? kPass : kVerificationFailed, out};
}

// ---- verify -------------------------------------------------------------------------------

json sampled_json(const SampledReport& r, const char* primary, const char* secondary, std::size_t samples) {
  json residuals = json::array();
  for (const SampleResidual& s : r.samples) {
    residuals.push_back(json{{"index", s.index}, {"rejected_draws", s.rejected}, {primary, s.primary}, {secondary, s.secondary}});
  }
  json out;
  out["inputs"] = json{{"seed", r.seed}, {"samples", samples}, {"tolerance", r.tolerance}};
  out["max_residual"] = json{{primary, r.max_primary}, {secondary, r.max_secondary}};
  out["residuals"] = residuals;
  out["pass"] = r.pass;
  return out;
}

json verify_cocycle_json(const RunConfig& c) {
  if (c.samples < 1) throw ConfigError("verify cocycle: samples must be positive");
  const SampledReport r = verify_cocycle(c.seed, static_cast<std::size_t>(c.samples), c.tolerance);
  return sampled_json(r, "pointwise", "operator_composition", static_cast<std::size_t>(c.samples));
}

json verify_weakrep_json(const RunConfig& c) {
  if (c.samples < 1) throw ConfigError("verify weakrep: samples must be positive");
  const SampledReport r = verify_weak_rep(c.seed, static_cast<std::size_t>(c.samples), c.tolerance);
  return sampled_json(r, "translation_product", "t_product", static_cast<std::size_t>(c.samples));
}

json verify_multiplier_json(const RunConfig& c) {
  if (c.configs < 1) throw ConfigError("verify multiplier: configs must be positive");
  const MultiplierReport r = verify_multiplier(c.seed, static_cast<std::size_t>(c.configs), c.orders, c.hbars, c.slope_margin);
  json results = json::array();
  for (const MultiplierConfigResult& m : r.results) {
    results.push_back(json{{"index", m.index},
                           {"order", m.order},
                           {"u", vec_json(m.u)},
                           {"u_right", vec_json(m.u_right)},
                           {"x", vec_json(m.x)},
                           {"errors", m.errors},
                           {"slope", m.slope},
                           {"required_slope", m.order + 1 - r.slope_margin},
                           {"pass", m.pass}});
  }
  json min_slope = json::object();
  for (std::size_t k = 0; k < r.orders.size(); ++k) min_slope[std::to_string(r.orders[k])] = r.min_slope[k];
  json out;
  out["inputs"] = json{{"seed", r.seed}, {"configs", c.configs}, {"orders", r.orders}, {"hbars", r.hbars}, {"slope_margin", r.slope_margin}};
  out["min_slope"] = min_slope;
  out["residuals"] = results;
  out["pass"] = r.pass;
  return out;
}

json verify_zassenhaus_json(const RunConfig& c) {
  if (c.order < 1) throw ConfigError("verify zassenhaus: order must be at least 1");
  const ZassenhausReport r = verify_zassenhaus(c.max_degree);
  json terms = json::array();
  for (std::size_t k = 0; k < r.terms.size(); ++k) {
    terms.push_back(json{{"degree", k + 2},
                         {"free_algebra", io::to_json(r.terms[k])},
                         {"brackets", io::to_json(r.brackets[k])},
                         {"text", r.brackets[k].to_string()}});
  }
  json specialized = json::array();
  const auto spec = specialized_zassenhaus_terms(c.order);
  for (std::size_t k = 0; k < spec.size(); ++k) specialized.push_back(json{{"n", k + 2}, {"function_sector", io::to_json(spec[k])}});
  json out;
  out["inputs"] = json{{"max_degree", c.max_degree}, {"order", c.order}};
  out["terms"] = terms;
  out["specialized"] = specialized;
  out["multiplier_exponent"] = io::to_json(multiplier_exponent(c.order));
  out["checks"] = json{{"c2", r.c2_matches},
                       {"c3", r.c3_matches},
                       {"free_algebra_identity", r.free_identity},
                       {"specialized_c2", r.specialized_c2_matches},
                       {"specialized_c3", r.specialized_c3_matches},
                       {"multiplier_exponent", r.exponent_matches}};
  out["pass"] = r.pass;
  return out;
}

json verify_assoc_json(const RunConfig& c) {
  if (c.order < 0) throw ConfigError("verify assoc: order must be non-negative");
  const std::vector<NamedSymbol> family = family_for(c);
  json out;
  out["inputs"] = json{{"order", c.order}, {"family", c.family}, {"family_size", family.size()}};
  const AssociativityReport r = check_associativity(c.order, family);
  json per_order = json::array();
  for (std::size_t n = 0; n < r.failing_triples.size(); ++n) {
    json by_mu = json::object();
    for (const auto& [deg, count] : r.failing_by_mu_degree[n]) by_mu[std::to_string(deg)] = count;
    per_order.push_back(json{{"order", n}, {"failing_triples", r.failing_triples[n]}, {"failing_by_mu_degree", by_mu}});
  }
  json failures = json::array();
  for (const AssociativityFailure& f : r.failures) {
    failures.push_back(json{{"f", f.f}, {"g", f.g}, {"h", f.h}, {"order", f.order}, {"residual", f.residual}});
  }
  out["triples"] = r.triples;
  out["residuals"] = per_order;
  out["failures"] = failures;
  out["pass"] = r.pass;
  return out;
}

json verify_kontsevich_json(const RunConfig& c) {
  const std::vector<NamedSymbol> family = family_for(c);
  const EquivalenceReport r = check_equivalence(family);
  json failures = json::array();
  for (const EquivalenceFailure& f : r.failures) {
    failures.push_back(json{{"f", f.f}, {"g", f.g}, {"order", f.order}, {"residual", f.residual}});
  }
  json out;
  out["inputs"] = json{{"family", c.family}, {"family_size", family.size()}};
  out["pairs"] = r.pairs;
  out["residuals"] = json{{"failing_pairs_by_order", r.failing_pairs}};
  out["failures"] = failures;
  out["pass"] = r.pass;
  return out;
}

json verify_expand_json(const RunConfig& c) {
  RunConfig e = c;
  e.command = "expand";
  e.order = 2;
  e.mu_bind = false;
  const RunResult r = run_expand(e);
  return json{{"reference", r.report.at("reference")}, {"pass", r.report.at("pass")}};
}

const std::map<std::string, std::function<json(const RunConfig&)>>& verifiers() {
  static const std::map<std::string, std::function<json(const RunConfig&)>> table{
      {"assoc", verify_assoc_json},         {"kontsevich", verify_kontsevich_json},
      {"cocycle", verify_cocycle_json},     {"weakrep", verify_weakrep_json},
      {"multiplier", verify_multiplier_json}, {"zassenhaus", verify_zassenhaus_json},
  };
  return table;
}

RunResult run_verify(const RunConfig& c) {
  json out = header(c);
  if (c.target == "all") {
    json checks;
    bool pass = true;
    const std::vector<std::pair<std::string, std::function<json(const RunConfig&)>>> order{
        {"expand", verify_expand_json},
        {"zassenhaus", verify_zassenhaus_json},
        {"assoc", verify_assoc_json},
        {"kontsevich", verify_kontsevich_json},
        {"cocycle", verify_cocycle_json},
        {"weakrep", verify_weakrep_json},
        {"multiplier", verify_multiplier_json},
    };
    for (const auto& [name, fn] : order) {
      checks[name] = fn(c);
      pass = pass && checks[name].at("pass").get<bool>();
    }
    out["inputs"] = json{{"seed", c.seed}};
    out["checks"] = checks;
    out["pass"] = pass;
    return {pass ? kPass : kVerificationFailed, out};
  }
  const auto it = verifiers().find(c.target);
  if (it == verifiers().end()) throw ConfigError("unknown verify target '" + c.target + "'");
  const json body = it->second(c);
  for (const auto& [k, v] : body.items()) out[k] = v;
  const bool pass = out.at("pass").get<bool>();
  return {pass ? kPass : kVerificationFailed, out};
}

// ---- eval ---------------------------------------------------------------------------------

RunResult run_eval_kernel(const RunConfig& c) {
  json point;
  try {
    point = json::parse(c.point);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("kernel point is not valid JSON: ") + e.what());
  }
  if (!point.is_object()) throw ConfigError("kernel point must be a JSON object");
  KernelPoint k;
  k.p1 = vec_from_json(point, "p1");
  k.q1 = vec_from_json(point, "q1");
  k.p2 = vec_from_json(point, "p2");
  k.q2 = vec_from_json(point, "q2");
  k.p = vec_from_json(point, "p");
  k.q = vec_from_json(point, "q");
  k.hbar = point.value("hbar", 1.0);
  if (!(k.hbar > 0.0)) throw ConfigError("kernel point: hbar must be positive");

  const std::complex<double> kernel = kernel_eval(k);
  const std::complex<double> moyal = moyal_kernel(k);
  const std::complex<double> approx = kernel_approx_eval(k);
  const KernelPhaseComparison phases = compare_kernel_phases(k);
  const double scale = std::abs(moyal);
  const double modulus_residual = std::abs(std::abs(kernel) - scale) / scale;
  const bool pass = modulus_residual < c.tolerance;

  json out = header(c);
  out["inputs"] = json{{"p1", vec_json(k.p1)}, {"q1", vec_json(k.q1)}, {"p2", vec_json(k.p2)},
                       {"q2", vec_json(k.q2)}, {"p", vec_json(k.p)},   {"q", vec_json(k.q)},
                       {"hbar", k.hbar},       {"tolerance", c.tolerance}};
  out["kernel"] = complex_json(kernel);
  out["moyal_kernel"] = complex_json(moyal);
  out["approx_kernel"] = complex_json(approx);
  out["log_ratio"] = json{{"exact", complex_json(phases.exact_log_ratio)},
                          {"approx_verbatim", complex_json(phases.approx_log_ratio)},
                          {"c2_term", complex_json(phases.c2_term)}};
  out["approx_phase_convention_flag"] = json{
      {"flagged", true},
      {"note", "the verbatim approximate kernel uses a real magnetic exponent; the C_2 term of the "
               "multiplier exponent equals i times it, so log_ratio.c2_term == i * log_ratio.approx_verbatim"}};
  out["residuals"] = json{{"modulus_relative", modulus_residual}};
  out["pass"] = pass;
  return {pass ? kPass : kVerificationFailed, out};
}

RunResult run_eval_star(const RunConfig& c) {
  if (c.order < 0) throw ConfigError("eval star: order must be non-negative");
  if (c.f.empty() || c.g.empty()) throw ConfigError("eval star: --f and --g are required");
  const SymbolFunction f = parse_symbol(c.f);
  const SymbolFunction g = parse_symbol(c.g);
  const StarSeries s = star(f, g, c.order);
  json out = header(c);
  out["inputs"] = json{{"f", c.f}, {"g", c.g}, {"order", c.order}};
  out["result"] = io::to_json(s);
  out["pass"] = true;
  return {kPass, out};
}

RunResult dispatch(const RunConfig& c) {
  if (c.command == "expand") return run_expand(c);
  if (c.command == "verify") return run_verify(c);
  if (c.command == "eval") {
    if (c.target == "kernel") return run_eval_kernel(c);
    if (c.target == "star") return run_eval_star(c);
    throw ConfigError("unknown eval target '" + c.target + "'");
  }
  throw ConfigError("unknown command '" + c.command + "'");
}

// ---- text rendering -----------------------------------------------------------------------

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void render_summary(std::ostringstream& os, const json& report, const std::string& indent) {
  for (const auto& [key, value] : report.items()) {
    if (key == "schema_version" || key == "command" || key == "target" || key == "pass") continue;
    if (value.is_primitive()) {
      os << indent << key << ": " << scalar_text(value) << "\n";
    } else if (key == "checks" && value.is_object()) {
      os << indent << "checks:\n";
      for (const auto& [name, sub] : value.items()) {
        if (sub.is_object() && sub.contains("pass")) {
          os << indent << "  " << name << ": " << (sub.at("pass").get<bool>() ? "PASS" : "FAIL") << "\n";
        } else {
          os << indent << "  " << name << ": " << scalar_text(sub) << "\n";
        }
      }
    } else if (value.is_array()) {
      os << indent << key << ": [" << value.size() << " entries]\n";
    } else {
      os << indent << key << ": " << value.dump() << "\n";
    }
  }
}

}  // namespace

RunResult run(const RunConfig& config) {
  try {
    return dispatch(config);
  } catch (const ConfigError& e) {
    json out = header(config);
    out["error"] = json{{"kind", "config"}, {"message", e.what()}};
    out["pass"] = false;
    return {kConfigError, out};
  } catch (const Error& e) {
    json out = header(config);
    out["error"] = json{{"kind", "domain"}, {"message", e.what()}};
    out["pass"] = false;
    return {kConfigError, out};
  } catch (const json::exception& e) {
    json out = header(config);
    out["error"] = json{{"kind", "config"}, {"message", e.what()}};
    out["pass"] = false;
    return {kConfigError, out};
  }
}

std::string render_text(const json& report) {
  std::ostringstream os;
  os << report.value("command", std::string("?"));
  if (report.contains("target")) os << " " << report.at("target").get<std::string>();
  os << ": " << (report.value("pass", false) ? "PASS" : "FAIL") << "\n";
  if (report.contains("error")) {
    os << "  error (" << report["error"].value("kind", "") << "): " << report["error"].value("message", "") << "\n";
    return os.str();
  }
  if (report.contains("operators")) {
    for (const json& op : report.at("operators")) {
      os << "  B" << op.at("order").get<int>() << " (" << op.at("term_count").get<std::size_t>() << " terms):\n";
      const std::string text = io::bidiff_from_json(op.at("terms")).to_string();
      std::istringstream lines(text);
      for (std::string line; std::getline(lines, line);) os << "    " << line << "\n";
    }
  }
  if (report.contains("result")) {
    const HbarSeries<SymbolFunction> s = io::symbol_series_from_json(report.at("result"));
    for (int n = 0; n <= s.order(); ++n) os << "  hbar^" << n << ": " << to_string(s[n]) << "\n";
  }
  json rest = report;
  rest.erase("operators");
  rest.erase("result");
  render_summary(os, rest, "  ");
  return os.str();
}

}  // namespace monopole::cli
