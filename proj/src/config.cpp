#include "hh/config.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>

#include "hh/errors.hpp"
#include "hh/expr.hpp"

namespace hh {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ConfigError("config: " + path + ": " + what);
}

void expect_object(const json& v, const std::string& path) {
  if (!v.is_object()) fail(path, "expected an object");
}

void check_keys(const json& obj, const std::string& path,
                std::initializer_list<const char*> allowed) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* k : allowed)
      if (item.key() == k) {
        known = true;
        break;
      }
    if (!known)
      fail(path.empty() ? item.key() : path + "." + item.key(), "unknown key");
  }
}

double as_real(const json& v, const std::string& path) {
  if (!v.is_number()) fail(path, "expected a number");
  return v.get<double>();
}

double as_finite(const json& v, const std::string& path) {
  const double x = as_real(v, path);
  if (!std::isfinite(x)) fail(path, "must be finite");
  return x;
}

std::string as_string(const json& v, const std::string& path) {
  if (!v.is_string()) fail(path, "expected a string");
  return v.get<std::string>();
}

bool as_bool(const json& v, const std::string& path) {
  if (!v.is_boolean()) fail(path, "expected a boolean");
  return v.get<bool>();
}

std::uint64_t as_count(const json& v, const std::string& path) {
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer()) {
    const std::int64_t x = v.get<std::int64_t>();
    if (x < 0) fail(path, "expected a nonnegative integer");
    return static_cast<std::uint64_t>(x);
  }
  if (v.is_number_float()) {
    const double d = v.get<double>();
    if (d >= 0.0 && d == std::floor(d) && d <= 1.8e19)
      return static_cast<std::uint64_t>(d);
  }
  fail(path, "expected a nonnegative integer");
}

std::vector<double> as_real_vec(const json& v, const std::string& path) {
  if (!v.is_array()) fail(path, "expected an array of numbers");
  std::vector<double> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(as_finite(v[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

GroupConfig parse_group(const json& v) {
  expect_object(v, "group");
  check_keys(v, "group", {"weights", "norm", "sphere_measure_override"});
  GroupConfig g;
  g.sphere_measure_override.reset();
  if (!v.contains("weights")) fail("group.weights", "required");
  g.weights = as_real_vec(v["weights"], "group.weights");
  if (!v.contains("norm")) fail("group.norm", "required");
  g.norm = as_string(v["norm"], "group.norm");
  if (v.contains("sphere_measure_override"))
    g.sphere_measure_override =
        as_finite(v["sphere_measure_override"], "group.sphere_measure_override");
  return g;
}

KernelConfig parse_kernel(const json& v) {
  expect_object(v, "kernel");
  check_keys(v, "kernel",
             {"catalog", "params", "expr", "order", "name", "transpose"});
  KernelConfig k;
  if (v.contains("catalog")) k.catalog = as_string(v["catalog"], "kernel.catalog");
  if (v.contains("params")) {
    expect_object(v["params"], "kernel.params");
    for (const auto& item : v["params"].items())
      k.params[item.key()] =
          as_finite(item.value(), "kernel.params." + item.key());
  }
  if (v.contains("expr")) k.expr = as_string(v["expr"], "kernel.expr");
  if (v.contains("order")) k.order = as_finite(v["order"], "kernel.order");
  if (v.contains("name")) k.name = as_string(v["name"], "kernel.name");
  if (v.contains("transpose"))
    k.transpose = as_bool(v["transpose"], "kernel.transpose");
  return k;
}

FunctionConfig parse_function(const json& v, const std::string& path) {
  expect_object(v, path);
  if (!v.contains("type")) fail(path + ".type", "required");
  FunctionConfig fc;
  fc.type = as_string(v["type"], path + ".type");
  if (fc.type == "power_cutoff") {
    check_keys(v, path, {"type", "beta", "exponent"});
    if (!v.contains("beta")) fail(path + ".beta", "required");
    fc.beta = as_finite(v["beta"], path + ".beta");
    if (v.contains("exponent"))
      fc.exponent = as_finite(v["exponent"], path + ".exponent");
  } else if (fc.type == "expr") {
    check_keys(v, path, {"type", "expr"});
    if (!v.contains("expr")) fail(path + ".expr", "required");
    fc.expr = as_string(v["expr"], path + ".expr");
  } else if (fc.type == "grid") {
    check_keys(v, path, {"type", "ln_r", "values"});
    if (!v.contains("ln_r")) fail(path + ".ln_r", "required");
    if (!v.contains("values")) fail(path + ".values", "required");
    fc.ln_r = as_real_vec(v["ln_r"], path + ".ln_r");
    fc.values = as_real_vec(v["values"], path + ".values");
  } else if (fc.type == "zero") {
    check_keys(v, path, {"type"});
  } else {
    fail(path + ".type",
         "unknown profile type '" + fc.type +
             "' (expected power_cutoff, expr, grid, or zero)");
  }
  return fc;
}

double conjugate(double p) { return p / (p - 1.0); }

}  // namespace

ExperimentConfig parse_config(const json& doc) {
  if (!doc.is_object()) fail("", "top level must be a JSON object");
  check_keys(doc, "",
             {"group", "kernel", "p", "mode", "functions", "betas", "scales",
              "radii", "tolerance", "mc", "output"});
  ExperimentConfig cfg;
  if (doc.contains("group")) cfg.group = parse_group(doc["group"]);
  if (doc.contains("kernel")) cfg.kernel = parse_kernel(doc["kernel"]);
  if (doc.contains("p")) cfg.p = as_finite(doc["p"], "p");
  if (doc.contains("mode")) cfg.mode = as_string(doc["mode"], "mode");
  if (doc.contains("functions")) {
    const json& fns = doc["functions"];
    if (!fns.is_array()) fail("functions", "expected an array");
    for (std::size_t i = 0; i < fns.size(); ++i)
      cfg.functions.push_back(
          parse_function(fns[i], "functions[" + std::to_string(i) + "]"));
  }
  if (doc.contains("betas")) cfg.betas = as_real_vec(doc["betas"], "betas");
  if (doc.contains("scales")) cfg.scales = as_real_vec(doc["scales"], "scales");
  if (doc.contains("radii")) cfg.radii = as_real_vec(doc["radii"], "radii");
  if (doc.contains("tolerance")) {
    const json& t = doc["tolerance"];
    expect_object(t, "tolerance");
    check_keys(t, "tolerance", {"rel", "abs", "max_subdiv"});
    if (t.contains("rel")) {
      cfg.tol.rel = as_finite(t["rel"], "tolerance.rel");
      if (!(cfg.tol.rel > 0.0)) fail("tolerance.rel", "must be positive");
    }
    if (t.contains("abs")) {
      cfg.tol.abs = as_finite(t["abs"], "tolerance.abs");
      if (cfg.tol.abs < 0.0) fail("tolerance.abs", "must be nonnegative");
    }
    if (t.contains("max_subdiv")) {
      const std::uint64_t m = as_count(t["max_subdiv"], "tolerance.max_subdiv");
      if (m < 1 || m > 1'000'000) fail("tolerance.max_subdiv", "out of range");
      cfg.tol.max_subdiv = static_cast<int>(m);
    }
  }
  if (doc.contains("mc")) {
    const json& m = doc["mc"];
    expect_object(m, "mc");
    check_keys(m, "mc", {"samples", "seed"});
    if (m.contains("samples")) cfg.mc.samples = as_count(m["samples"], "mc.samples");
    if (m.contains("seed")) cfg.mc.seed = as_count(m["seed"], "mc.seed");
  }
  if (doc.contains("output")) {
    const json& o = doc["output"];
    expect_object(o, "output");
    check_keys(o, "output", {"format", "path"});
    if (o.contains("format")) {
      cfg.output.format = as_string(o["format"], "output.format");
      if (cfg.output.format != "json" && cfg.output.format != "csv")
        fail("output.format", "expected \"json\" or \"csv\"");
    }
    if (o.contains("path")) cfg.output.path = as_string(o["path"], "output.path");
  }
  return cfg;
}

ExperimentConfig load_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("config: cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  json doc;
  try {
    doc = json::parse(buf.str());
  } catch (const json::exception& e) {
    throw ConfigError("config: " + path + ": " + e.what());
  }
  return parse_config(doc);
}

HomogeneousGroup build_group(const ExperimentConfig& cfg) {
  const GroupConfig g = cfg.group.value_or(GroupConfig{});
  QuasiNorm qn;
  if (g.norm == "max") {
    qn = {QuasiNormKind::MaxAnisotropic, 0};
  } else if (g.norm == "euclidean") {
    qn = {QuasiNormKind::Euclidean, 0};
  } else if (g.norm.rfind("power:", 0) == 0) {
    const std::string tail = g.norm.substr(6);
    int two_m = 0;
    try {
      std::size_t used = 0;
      two_m = std::stoi(tail, &used);
      if (used != tail.size()) throw std::invalid_argument(tail);
    } catch (const std::exception&) {
      fail("group.norm", "cannot parse the exponent in '" + g.norm + "'");
    }
    qn = {QuasiNormKind::PowerAnisotropic, two_m};
  } else {
    fail("group.norm",
         "expected \"max\", \"euclidean\", or \"power:<2M>\", got '" + g.norm +
             "'");
  }
  try {
    if (g.sphere_measure_override)
      return HomogeneousGroup(g.weights, qn, *g.sphere_measure_override);
    return HomogeneousGroup(g.weights, qn);
  } catch (const InputError& e) {
    throw ConfigError(std::string("config: group: ") + e.what());
  }
}

std::map<std::string, double> resolved_kernel_params(
    const ExperimentConfig& cfg, const HomogeneousGroup& grp) {
  const KernelConfig& kc = *cfg.kernel;
  if (kc.catalog.empty()) return {};
  struct CatalogSpec {
    const char* name;
    std::initializer_list<const char*> allowed;
    std::initializer_list<const char*> required;
  };
  static const CatalogSpec specs[] = {
      {"hilbert", {}, {}},
      {"hilbert_lambda", {"lambda"}, {"lambda"}},
      {"weighted_hilbert", {"lambda", "p", "k_exp"}, {"lambda", "p", "k_exp"}},
      {"max", {}, {}},
      {"group_weighted_hilbert", {"p", "Q", "c"}, {}},
  };
  const CatalogSpec* spec = nullptr;
  for (const auto& s : specs)
    if (kc.catalog == s.name) spec = &s;
  if (!spec)
    fail("kernel.catalog",
         "unknown catalog '" + kc.catalog +
             "' (expected hilbert, hilbert_lambda, weighted_hilbert, max, or "
             "group_weighted_hilbert)");
  for (const auto& [name, value] : kc.params) {
    (void)value;
    bool known = false;
    for (const char* a : spec->allowed)
      if (name == a) known = true;
    if (!known)
      fail("kernel.params." + name,
           "not a parameter of catalog '" + kc.catalog + "'");
  }
  for (const char* r : spec->required)
    if (!kc.params.count(r))
      fail(std::string("kernel.params.") + r,
           "required for catalog '" + kc.catalog + "'");
  std::map<std::string, double> out = kc.params;
  if (kc.catalog == "group_weighted_hilbert") {
    if (!out.count("p")) out["p"] = cfg.p;
    if (!out.count("Q")) out["Q"] = grp.Q();
    if (!out.count("c")) out["c"] = out["Q"] / grp.sphere_measure().value;
  }
  return out;
}

Kernel build_kernel(const ExperimentConfig& cfg, const HomogeneousGroup& grp) {
  if (!cfg.kernel) fail("kernel", "required for this command");
  const KernelConfig& kc = *cfg.kernel;
  const bool has_catalog = !kc.catalog.empty();
  const bool has_expr = !kc.expr.empty();
  if (has_catalog && has_expr)
    fail("kernel", "give either a catalog name or an expr, not both");
  if (!has_catalog && !has_expr)
    fail("kernel", "needs a catalog name or an expr");
  Kernel k = kernel_hilbert();
  if (has_expr) {
    if (!kc.order) fail("kernel.order", "required with a custom expr");
    try {
      k = make_kernel(parse_expr(kc.expr), *kc.order,
                      kc.name.empty() ? kc.expr : kc.name);
    } catch (const ParseError& e) {
      fail("kernel.expr", e.what());
    } catch (const InputError& e) {
      fail("kernel", e.what());
    }
  } else {
    const auto params = resolved_kernel_params(cfg, grp);
    try {
      if (kc.catalog == "hilbert") {
        k = kernel_hilbert();
      } else if (kc.catalog == "hilbert_lambda") {
        k = kernel_hilbert_lambda(params.at("lambda"));
      } else if (kc.catalog == "weighted_hilbert") {
        k = kernel_weighted_hilbert(params.at("lambda"), params.at("p"),
                                    params.at("k_exp"));
      } else if (kc.catalog == "max") {
        k = kernel_max();
      } else {
        k = kernel_group_weighted_hilbert(params.at("p"), params.at("Q"),
                                          params.at("c"));
      }
    } catch (const InputError& e) {
      fail("kernel", e.what());
    }
  }
  return kc.transpose ? transpose(k) : k;
}

RadialFunction build_function(const FunctionConfig& fc, int slot, double p,
                              double Q) {
  if (fc.type == "power_cutoff") {
    const double ex = fc.exponent.value_or(slot == 0 ? p : conjugate(p));
    return RadialFunction::power_cutoff(fc.beta, ex, Q);
  }
  if (fc.type == "expr") return RadialFunction::from_expr(fc.expr);
  if (fc.type == "grid")
    return RadialFunction::from_grid(fc.ln_r, fc.values, "grid");
  if (fc.type == "zero") return RadialFunction::zero();
  fail("functions.type",
       "unknown profile type '" + fc.type +
           "' (expected power_cutoff, expr, grid, or zero)");
}

std::string resolved_mode(const ExperimentConfig& cfg,
                          const std::string& command) {
  if (command == "constant") {
    const std::string m = cfg.mode.empty() ? "classical" : cfg.mode;
    if (m != "classical" && m != "group")
      fail("mode", "constant expects \"classical\" or \"group\", got '" + m + "'");
    return m;
  }
  if (command == "verify") {
    const std::string m = cfg.mode.empty() ? "operator" : cfg.mode;
    if (m != "operator" && m != "group_hilbert")
      fail("mode",
           "verify expects \"operator\" or \"group_hilbert\", got '" + m + "'");
    return m;
  }
  return "";
}

namespace {

ordered_json group_echo(const ExperimentConfig& cfg) {
  const GroupConfig g = cfg.group.value_or(GroupConfig{});
  ordered_json o = ordered_json::object();
  o["weights"] = g.weights;
  o["norm"] = g.norm;
  o["sphere_measure_override"] = g.sphere_measure_override
                                     ? ordered_json(*g.sphere_measure_override)
                                     : ordered_json(nullptr);
  return o;
}

ordered_json kernel_echo(const ExperimentConfig& cfg,
                         const std::string& command) {
  if (!cfg.kernel)
    fail("kernel", "required for the '" + command + "' command");
  const KernelConfig& kc = *cfg.kernel;
  ordered_json o = ordered_json::object();
  if (!kc.catalog.empty()) {
    o["catalog"] = kc.catalog;
    ordered_json params = ordered_json::object();
    for (const auto& [name, value] : kc.params) params[name] = value;
    o["params"] = params;
  } else {
    o["expr"] = kc.expr;
    o["order"] = kc.order ? ordered_json(*kc.order) : ordered_json(nullptr);
    if (!kc.name.empty()) o["name"] = kc.name;
  }
  o["transpose"] = kc.transpose;
  return o;
}

ordered_json functions_echo(const ExperimentConfig& cfg) {
  ordered_json arr = ordered_json::array();
  for (std::size_t i = 0; i < cfg.functions.size(); ++i) {
    const FunctionConfig& fc = cfg.functions[i];
    ordered_json o = ordered_json::object();
    o["type"] = fc.type;
    if (fc.type == "power_cutoff") {
      o["beta"] = fc.beta;
      o["exponent"] =
          fc.exponent.value_or(i == 0 ? cfg.p : cfg.p / (cfg.p - 1.0));
    } else if (fc.type == "expr") {
      o["expr"] = fc.expr;
    } else if (fc.type == "grid") {
      o["ln_r"] = fc.ln_r;
      o["values"] = fc.values;
    }
    arr.push_back(o);
  }
  return arr;
}

ordered_json tolerance_echo(const ExperimentConfig& cfg) {
  ordered_json o = ordered_json::object();
  o["rel"] = cfg.tol.rel;
  o["abs"] = cfg.tol.abs;
  o["max_subdiv"] = cfg.tol.max_subdiv;
  return o;
}

ordered_json mc_echo(const ExperimentConfig& cfg) {
  ordered_json o = ordered_json::object();
  o["samples"] = cfg.mc.samples;
  o["seed"] = cfg.mc.seed;
  return o;
}

ordered_json output_echo(const ExperimentConfig& cfg) {
  ordered_json o = ordered_json::object();
  o["format"] = cfg.output.format;
  o["path"] = cfg.output.path;
  return o;
}

}  // namespace

ordered_json echo_config(const ExperimentConfig& cfg,
                         const std::string& command) {
  const std::string mode = resolved_mode(cfg, command);
  ordered_json e = ordered_json::object();
  if (command == "geometry") {
    e["group"] = group_echo(cfg);
    e["radii"] = cfg.radii;
    e["mc"] = mc_echo(cfg);
    e["output"] = output_echo(cfg);
    return e;
  }
  if (command == "constant") {
    if (mode == "group") e["group"] = group_echo(cfg);
    e["kernel"] = kernel_echo(cfg, command);
    e["p"] = cfg.p;
    e["mode"] = mode;
  } else if (command == "verify") {
    e["group"] = group_echo(cfg);
    if (mode == "operator") e["kernel"] = kernel_echo(cfg, command);
    e["p"] = cfg.p;
    e["mode"] = mode;
    e["functions"] = functions_echo(cfg);
  } else if (command == "sharpness") {
    e["group"] = group_echo(cfg);
    e["kernel"] = kernel_echo(cfg, command);
    e["p"] = cfg.p;
    e["betas"] = cfg.betas;
  } else if (command == "dilation-probe") {
    e["group"] = group_echo(cfg);
    e["kernel"] = kernel_echo(cfg, command);
    e["p"] = cfg.p;
    e["functions"] = functions_echo(cfg);
    e["scales"] = cfg.scales;
  } else {
    throw ConfigError("unknown command '" + command + "'");
  }
  e["tolerance"] = tolerance_echo(cfg);
  e["output"] = output_echo(cfg);
  return e;
}

}  // namespace hh
