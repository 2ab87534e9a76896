#include "hh/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <string>
#include <vector>

#include "hh/constants.hpp"
#include "hh/errors.hpp"
#include "hh/verify.hpp"
#include "hh/version.hpp"

namespace hh {
namespace {

using nlohmann::ordered_json;

std::string iso_utc_now() {
  const std::time_t t =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

// JSON has no infinities: non-finite values become a small marker object so
// reports stay lossless and machine-checkable.
ordered_json real_json(double v) {
  if (std::isfinite(v)) return v;
  ordered_json o = ordered_json::object();
  o["finite"] = false;
  o["repr"] = v > 0 ? "inf" : (v < 0 ? "-inf" : "nan");
  return o;
}

std::string real_text(const ordered_json& v, const char* spec = "%.12g") {
  return v.is_number() ? fmt(spec, v.get<double>())
                       : v.at("repr").get<std::string>();
}

ordered_json quad_json(const QuadResult& q) {
  ordered_json o = ordered_json::object();
  o["value"] = real_json(q.value);
  o["err_estimate"] = real_json(q.err_estimate);
  o["evaluations"] = q.evaluations;
  o["converged"] = q.converged;
  return o;
}

ordered_json constant_json(const SharpConstant& c) {
  ordered_json o = ordered_json::object();
  o["value"] = real_json(c.value);
  o["mode"] = c.mode == ConstantMode::Classical ? "classical" : "group";
  o["p"] = c.p;
  o["q"] = c.q;
  o["source"] = c.source == ConstantSource::NumericQuadrature
                    ? "numeric_quadrature"
                    : "closed_form";
  o["cross_check_dev"] = real_json(c.cross_check_dev);
  o["quad"] = c.quad ? quad_json(*c.quad) : ordered_json(nullptr);
  return o;
}

ordered_json report_json(const VerificationReport& r) {
  ordered_json o = ordered_json::object();
  o["lhs"] = real_json(r.lhs);
  o["rhs_norms"] = real_json(r.rhs_norms);
  o["ratio"] = real_json(r.ratio);
  o["holds"] = r.holds;
  return o;
}

// relative error of a usable quadrature value, 0 when not meaningful
double rel_of(const QuadResult& q) {
  if (q.value == 0.0 || !std::isfinite(q.value) || !std::isfinite(q.err_estimate))
    return 0.0;
  return q.err_estimate / std::abs(q.value);
}

struct DiagSink {
  ordered_json items = ordered_json::array();
  bool any_unconverged = false;

  void push(const std::string& label, const QuadResult& q) {
    ordered_json o = ordered_json::object();
    o["label"] = label;
    o["value"] = real_json(q.value);
    o["err_estimate"] = real_json(q.err_estimate);
    o["evaluations"] = q.evaluations;
    o["converged"] = q.converged;
    items.push_back(o);
    if (!q.converged) any_unconverged = true;
  }

  void push_report(const std::string& prefix, const VerificationReport& r) {
    static const char* const names[] = {"lhs", "norm_f", "norm_g"};
    for (std::size_t i = 0; i < r.quad_diagnostics.size(); ++i) {
      const char* suffix = i < 3 ? names[i] : "quad";
      push(prefix + "_" + suffix, r.quad_diagnostics[i]);
    }
  }
};

ReportEnvelope make_env(const std::string& command,
                        const ExperimentConfig& cfg) {
  ReportEnvelope env;
  env.version = kVersion;
  env.command = command;
  env.timestamp = iso_utc_now();
  env.config = echo_config(cfg, command);
  env.results = ordered_json::object();
  env.diagnostics = ordered_json::array();
  return env;
}

void set_error(ReportEnvelope& env, const std::string& type,
               const std::string& message, int exit_code) {
  ordered_json err = ordered_json::object();
  err["type"] = type;
  err["message"] = message;
  env.results = ordered_json::object();
  env.results["error"] = err;
  env.exit_code = exit_code;
}

// Maps computation-phase failures onto structured report entries. Config
// resolution problems are not caught here: a bad config gives no report.
template <typename Fn>
void guarded(ReportEnvelope& env, Fn&& body) {
  try {
    body();
  } catch (const PreconditionError& e) {
    set_error(env, "precondition", e.what(), kExitPrecondition);
  } catch (const DivergenceError& e) {
    set_error(env, "divergence", e.what(), kExitDivergence);
  } catch (const EvalError& e) {
    set_error(env, "input", e.what(), kExitPrecondition);
  } catch (const InputError& e) {
    set_error(env, "input", e.what(), kExitPrecondition);
  }
}

// The gw-family kernel resolves parameters against the group; reflect them
// into the echo so the run is reproducible from the report alone.
void patch_kernel_echo(ReportEnvelope& env, const ExperimentConfig& cfg,
                       const HomogeneousGroup& grp) {
  if (!cfg.kernel || cfg.kernel->catalog != "group_weighted_hilbert") return;
  ordered_json params = ordered_json::object();
  for (const auto& [name, value] : resolved_kernel_params(cfg, grp))
    params[name] = value;
  env.config["kernel"]["params"] = params;
}

bool kernel_symmetric(const Kernel& k) {
  static const double pts[][2] = {
      {0.3, 1.7}, {2.0, 5.0}, {0.01, 10.0}, {1.0, 1.0}, {7.0, 0.2}};
  for (const auto& pt : pts) {
    const double a = k(pt[0], pt[1]);
    const double b = k(pt[1], pt[0]);
    if (std::abs(a - b) > 1e-12 * (std::abs(a) + std::abs(b)) + 1e-300)
      return false;
  }
  return true;
}

std::optional<SharpConstant> applicable_closed_form(
    const ExperimentConfig& cfg, const HomogeneousGroup& grp,
    const std::string& mode) {
  const KernelConfig& kc = *cfg.kernel;
  if (kc.catalog.empty()) return std::nullopt;
  if (mode == "classical") {
    if (kc.catalog == "hilbert") return classical_hilbert_constant(cfg.p);
    if (kc.catalog == "hilbert_lambda" && kc.params.at("lambda") == 1.0)
      return classical_hilbert_constant(cfg.p);
    if (kc.catalog == "weighted_hilbert" && kc.transpose &&
        kc.params.at("p") == cfg.p) {
      const double k_exp = kc.params.at("k_exp");
      return power_hilbert_constant(kc.params.at("lambda"),
                                    k_exp / (k_exp - 1.0), cfg.p);
    }
    return std::nullopt;
  }
  // group mode: the gw kernel IS the group Hilbert form exactly at p = 2 with
  // the canonical normalization c = Q/|S|
  if (kc.catalog == "group_weighted_hilbert" && !kc.transpose && cfg.p == 2.0) {
    const auto params = resolved_kernel_params(cfg, grp);
    const double Q = grp.Q();
    const double c_ref = Q / grp.sphere_measure().value;
    if (params.at("p") == 2.0 && params.at("Q") == Q &&
        std::abs(params.at("c") - c_ref) <= 1e-9 * c_ref)
      return group_hilbert_constant(Q, 2.0);
  }
  return std::nullopt;
}

int exit_for(bool diverged, bool holds) {
  if (diverged) return kExitDivergence;
  return holds ? kExitOk : kExitCheckFailed;
}

}  // namespace

ReportEnvelope cmd_constant(const ExperimentConfig& cfg) {
  const std::string mode = resolved_mode(cfg, "constant");
  ReportEnvelope env = make_env("constant", cfg);
  const HomogeneousGroup grp = build_group(cfg);
  const Kernel k = build_kernel(cfg, grp);
  patch_kernel_echo(env, cfg, grp);
  guarded(env, [&] {
    const SharpConstant num = mode == "classical"
                                  ? cstar_classical(k, cfg.p, cfg.tol)
                                  : cstar_group(k, cfg.p, grp, cfg.tol);
    const std::optional<SharpConstant> closed =
        applicable_closed_form(cfg, grp, mode);
    env.results["mode"] = mode;
    env.results["kernel"] = k.name;
    env.results["p"] = cfg.p;
    env.results["numeric"] = constant_json(num);
    env.results["closed_form"] =
        closed ? constant_json(*closed) : ordered_json(nullptr);
    std::string check;
    if (!num.finite()) {
      env.results["relative_deviation"] = ordered_json(nullptr);
      check = "divergent";
      env.exit_code = kExitDivergence;
    } else {
      bool ok = num.quad && num.quad->converged;
      if (closed) {
        const double dev =
            std::abs(num.value - closed->value) / std::abs(closed->value);
        env.results["relative_deviation"] = dev;
        ok = ok && dev <= 10.0 * (cfg.tol.rel + rel_of(*num.quad));
      } else {
        env.results["relative_deviation"] = ordered_json(nullptr);
      }
      check = ok ? "pass" : "fail";
      env.exit_code = ok ? kExitOk : kExitCheckFailed;
    }
    env.results["check"] = check;
    DiagSink diags;
    if (num.quad) diags.push("cstar", *num.quad);
    env.diagnostics = diags.items;
  });
  return env;
}

ReportEnvelope cmd_verify(const ExperimentConfig& cfg) {
  const std::string mode = resolved_mode(cfg, "verify");
  if (cfg.functions.empty())
    throw ConfigError("config: functions: at least one profile is required");
  if (cfg.functions.size() > 2)
    throw ConfigError("config: functions: verify takes one profile or a pair");
  if (mode == "group_hilbert" && cfg.kernel)
    throw ConfigError(
        "config: kernel: not used in group_hilbert mode (the kernel is fixed)");
  ReportEnvelope env = make_env("verify", cfg);
  const HomogeneousGroup grp = build_group(cfg);
  const double Q = grp.Q();
  const RadialFunction f = build_function(cfg.functions[0], 0, cfg.p, Q);
  const RadialFunction g = cfg.functions.size() == 2
                               ? build_function(cfg.functions[1], 1, cfg.p, Q)
                               : f;
  guarded(env, [&] {
    env.results["mode"] = mode;
    env.results["p"] = cfg.p;
    DiagSink diags;
    if (mode == "group_hilbert") {
      const VerificationReport rep =
          verify_group_hilbert(f, g, cfg.p, grp, cfg.tol);
      env.results["constant"] = constant_json(rep.constant);
      env.results["group_hilbert"] = report_json(rep);
      env.results["holds"] = rep.holds;
      diags.push_report("group_hilbert", rep);
      env.diagnostics = diags.items;
      env.exit_code = exit_for(diags.any_unconverged, rep.holds);
      return;
    }
    const Kernel k = build_kernel(cfg, grp);
    patch_kernel_echo(env, cfg, grp);
    env.results["kernel"] = k.name;
    const SharpConstant c = cstar_group(k, cfg.p, grp, cfg.tol);
    if (!c.finite()) {
      set_error(env, "divergence",
                "the sharp constant diverges for this kernel and exponent",
                kExitDivergence);
      return;
    }
    const VerificationReport hh_rep =
        verify_hh(k, f, g, cfg.p, grp, c, cfg.tol);
    const VerificationReport hardy_rep =
        verify_hardy(k, f, cfg.p, grp, c, cfg.tol);
    const double q_exp = cfg.p / (cfg.p - 1.0);
    const VerificationReport dual_rep =
        verify_dual(k, g, q_exp, grp, c, cfg.tol);
    env.results["constant"] = constant_json(c);
    env.results["hh"] = report_json(hh_rep);
    env.results["hardy"] = report_json(hardy_rep);
    env.results["dual"] = report_json(dual_rep);
    if (c.quad) diags.push("cstar", *c.quad);
    diags.push_report("bilinear", hh_rep);
    diags.push_report("hardy", hardy_rep);
    diags.push_report("dual", dual_rep);

    // Tightness of the Hoelder step: pairing f against its conjugate profile
    // reproduces the p-th power of the operator lhs (transposed kernel slot).
    ordered_json cj = ordered_json::object();
    bool within = false;
    try {
      const RadialFunction psi = conjugate_function(k, f, cfg.p, grp, cfg.tol);
      const QuadResult pairing = bilinear_form(k, f, psi, grp, cfg.tol);
      const bool symmetric = kernel_symmetric(k);
      const VerificationReport hardy_t =
          symmetric ? hardy_rep
                    : verify_hardy(transpose(k), f, cfg.p, grp, c, cfg.tol);
      const double lhs_pow = std::pow(hardy_t.lhs, cfg.p);
      const double residual = std::abs(pairing.value - lhs_pow);
      double relsum = cfg.tol.rel + rel_of(pairing);
      if (!hardy_t.quad_diagnostics.empty())
        relsum += rel_of(hardy_t.quad_diagnostics.front());
      if (c.quad) relsum += rel_of(*c.quad);
      // 2e-5 covers the 4096-node grid resolution of the conjugate profile
      const double budget =
          (2e-5 + 10.0 * relsum) *
          std::max(std::abs(pairing.value), std::abs(lhs_pow));
      within = std::isfinite(residual) && residual <= budget;
      cj["pairing"] = real_json(pairing.value);
      cj["hardy_lhs_power"] = real_json(lhs_pow);
      cj["residual"] = real_json(residual);
      cj["budget"] = real_json(budget);
      cj["within"] = within;
      diags.push("conjugate_pairing", pairing);
      if (!symmetric) diags.push_report("transpose_hardy", hardy_t);
    } catch (const DivergenceError& e) {
      cj["error"] = e.what();
      cj["within"] = false;
      within = false;
    }
    env.results["conjugate_check"] = cj;

    const bool holds =
        hh_rep.holds && hardy_rep.holds && dual_rep.holds && within;
    env.results["holds"] = holds;
    env.diagnostics = diags.items;
    env.exit_code = exit_for(diags.any_unconverged, holds);
  });
  return env;
}

ReportEnvelope cmd_sharpness(const ExperimentConfig& cfg) {
  ReportEnvelope env = make_env("sharpness", cfg);
  const HomogeneousGroup grp = build_group(cfg);
  const Kernel k = build_kernel(cfg, grp);
  patch_kernel_echo(env, cfg, grp);
  guarded(env, [&] {
    const SharpConstant c = cstar_group(k, cfg.p, grp, cfg.tol);
    if (!c.finite()) {
      set_error(env, "divergence",
                "the sharp constant diverges for this kernel and exponent",
                kExitDivergence);
      return;
    }
    const std::vector<SweepEntry> sweep =
        sharpness_sweep(k, cfg.p, grp, cfg.betas, cfg.tol);
    env.results["kernel"] = k.name;
    env.results["p"] = cfg.p;
    env.results["constant"] = constant_json(c);
    ordered_json rows = ordered_json::array();
    DiagSink diags;
    if (c.quad) diags.push("cstar", *c.quad);
    const double c_rel = c.quad ? rel_of(*c.quad) : 0.0;
    bool nondecreasing = true;
    bool all_within = true;
    int converged_count = 0;
    const SweepEntry* prev = nullptr;
    for (const SweepEntry& e : sweep) {
      ordered_json row = ordered_json::object();
      row["beta"] = e.beta;
      row["ratio"] = real_json(e.ratio);
      row["converged"] = e.quad.converged;
      rows.push_back(row);
      diags.push("beta=" + fmt("%g", e.beta), e.quad);
      if (!e.quad.converged) continue;
      ++converged_count;
      const double slack = 10.0 * (cfg.tol.rel + c_rel + rel_of(e.quad));
      if (e.ratio > 1.0 + slack) all_within = false;
      if (prev) {
        const double tie = 10.0 * (rel_of(prev->quad) + rel_of(e.quad) +
                                   2.0 * cfg.tol.rel) *
                           std::max(std::abs(prev->ratio), std::abs(e.ratio));
        if (e.ratio + tie < prev->ratio) nondecreasing = false;
      }
      prev = &e;
    }
    env.results["entries"] = rows;
    env.results["nondecreasing"] = nondecreasing;
    env.results["all_within_bound"] = all_within;
    const bool holds = nondecreasing && all_within;
    env.results["holds"] = holds;
    env.diagnostics = diags.items;
    env.exit_code = exit_for(converged_count == 0, holds);
  });
  return env;
}

ReportEnvelope cmd_dilation_probe(const ExperimentConfig& cfg) {
  if (cfg.scales.size() < 3)
    throw ConfigError("config: scales: need at least three scale factors");
  for (double a : cfg.scales)
    if (!(a > 0.0))
      throw ConfigError("config: scales: scale factors must be positive");
  if (cfg.functions.empty())
    throw ConfigError("config: functions: at least one profile is required");
  if (cfg.functions.size() > 2)
    throw ConfigError(
        "config: functions: dilation-probe takes one profile or a pair");
  ReportEnvelope env = make_env("dilation-probe", cfg);
  const HomogeneousGroup grp = build_group(cfg);
  const Kernel k = build_kernel(cfg, grp);
  patch_kernel_echo(env, cfg, grp);
  const double Q = grp.Q();
  const RadialFunction f = build_function(cfg.functions[0], 0, cfg.p, Q);
  const RadialFunction g = cfg.functions.size() == 2
                               ? build_function(cfg.functions[1], 1, cfg.p, Q)
                               : f;
  guarded(env, [&] {
    const DilationProbe probe =
        dilation_probe(k, f, g, cfg.p, grp, cfg.scales, cfg.tol);
    const double expected = -(grp.Q() + k.claimed_order) + 0.0;
    env.results["kernel"] = k.name;
    env.results["p"] = cfg.p;
    env.results["expected_slope"] = expected;
    env.results["fitted_slope"] = real_json(probe.slope);
    env.results["slope_ok"] = probe.slope_ok;
    ordered_json rows = ordered_json::array();
    bool any_unconverged = false;
    for (const DilationEntry& e : probe.entries) {
      ordered_json row = ordered_json::object();
      row["a"] = e.a;
      row["ratio"] = real_json(e.ratio);
      row["converged"] = e.converged;
      rows.push_back(row);
      if (!e.converged) any_unconverged = true;
    }
    env.results["entries"] = rows;
    const bool within =
        probe.slope_ok && std::abs(probe.slope - expected) <=
                              1e-3 * std::max(1.0, std::abs(expected));
    env.results["within"] = within;
    env.results["holds"] = within;
    env.exit_code = !probe.slope_ok ? kExitDivergence
                                    : exit_for(false, within && !any_unconverged);
  });
  return env;
}

ReportEnvelope cmd_geometry(const ExperimentConfig& cfg) {
  if (cfg.radii.empty())
    throw ConfigError("config: radii: need at least one radius");
  for (double r : cfg.radii)
    if (!(r > 0.0)) throw ConfigError("config: radii: radii must be positive");
  ReportEnvelope env = make_env("geometry", cfg);
  const HomogeneousGroup grp = build_group(cfg);
  const GroupConfig gc = cfg.group.value_or(GroupConfig{});
  guarded(env, [&] {
    env.results["Q"] = grp.Q();
    env.results["dim"] = grp.dim();
    env.results["weights"] = grp.weights();
    env.results["norm"] = gc.norm;
    const QuadResult sphere = grp.sphere_measure();
    ordered_json sj = quad_json(sphere);
    sj["method"] = gc.sphere_measure_override ? "override"
                   : gc.norm == "euclidean"   ? "closed_form"
                                              : "monte_carlo";
    env.results["sphere_measure"] = sj;

    const double vol1 = ball_volume(grp, 1.0);
    ordered_json vols = ordered_json::array();
    double residual = 0.0;
    for (double r : cfg.radii) {
      const double v = ball_volume(grp, r);
      ordered_json row = ordered_json::object();
      row["radius"] = r;
      row["volume"] = v;
      vols.push_back(row);
      const double scaled = std::pow(r, grp.Q()) * vol1;
      residual = std::max(residual, std::abs(v - scaled) / std::abs(v));
    }
    env.results["ball_volumes"] = vols;
    env.results["scaling_residual"] = residual;

    const QuadResult mc = sphere_measure_mc(grp, cfg.mc.samples, cfg.mc.seed);
    const double spread = std::hypot(mc.err_estimate, sphere.err_estimate);
    const bool within = std::abs(mc.value - sphere.value) <= 4.0 * spread;
    ordered_json mj = ordered_json::object();
    mj["value"] = real_json(mc.value);
    mj["err_estimate"] = real_json(mc.err_estimate);
    mj["samples"] = cfg.mc.samples;
    mj["within_4se"] = within;
    env.results["mc_cross_check"] = mj;

    const bool holds = residual <= 1e-12 && within;
    env.results["holds"] = holds;
    DiagSink diags;
    diags.push("sphere_measure", sphere);
    diags.push("sphere_measure_mc", mc);
    env.diagnostics = diags.items;
    env.exit_code = exit_for(false, holds);
  });
  return env;
}

ReportEnvelope run_command(const std::string& command,
                           const ExperimentConfig& cfg) {
  if (cfg.output.format == "csv" && command != "sharpness" &&
      command != "dilation-probe")
    throw ConfigError(
        "config: output.format: csv is only available for the sweep commands "
        "(sharpness, dilation-probe)");
  if (command == "constant") return cmd_constant(cfg);
  if (command == "verify") return cmd_verify(cfg);
  if (command == "sharpness") return cmd_sharpness(cfg);
  if (command == "dilation-probe") return cmd_dilation_probe(cfg);
  if (command == "geometry") return cmd_geometry(cfg);
  throw ConfigError("unknown command '" + command + "'");
}

ordered_json envelope_json(const ReportEnvelope& env) {
  ordered_json o = ordered_json::object();
  o["version"] = env.version;
  o["command"] = env.command;
  o["timestamp"] = env.timestamp;
  o["config"] = env.config;
  o["results"] = env.results;
  o["diagnostics"] = env.diagnostics;
  return o;
}

std::string render_csv(const ReportEnvelope& env) {
  const bool sharp = env.command == "sharpness";
  if (!sharp && env.command != "dilation-probe")
    throw ConfigError("csv output is only available for the sweep commands");
  if (env.results.contains("error"))
    throw ConfigError("no table to render: the run failed with '" +
                      env.results["error"]["message"].get<std::string>() + "'");
  std::string out = sharp ? "beta,ratio,converged\n" : "a,ratio,converged\n";
  for (const auto& row : env.results.at("entries")) {
    out += fmt("%.17g", row.at(sharp ? "beta" : "a").get<double>());
    out += ",";
    out += real_text(row.at("ratio"), "%.17g");
    out += ",";
    out += row.at("converged").get<bool>() ? "true" : "false";
    out += "\n";
  }
  return out;
}

namespace {

const char* pass_text(bool ok) { return ok ? "pass" : "FAIL"; }

}  // namespace

std::string render_human(const ReportEnvelope& env) {
  std::string out = env.command;
  if (env.results.contains("error")) {
    out += ": " + env.results["error"]["type"].get<std::string>() + " error\n";
    out += "  " + env.results["error"]["message"].get<std::string>() + "\n";
    return out;
  }
  const ordered_json& r = env.results;
  if (env.command == "constant") {
    out += "  mode=" + r["mode"].get<std::string>() +
           "  kernel=" + r["kernel"].get<std::string>() +
           "  p=" + fmt("%g", r["p"].get<double>()) + "\n";
    out += "  numeric      " + real_text(r["numeric"]["value"]);
    if (!r["numeric"]["quad"].is_null())
      out += "  err " + real_text(r["numeric"]["quad"]["err_estimate"], "%.3g");
    out += "\n";
    if (!r["closed_form"].is_null()) {
      out += "  closed form  " + real_text(r["closed_form"]["value"]);
      out += "  rel dev " + real_text(r["relative_deviation"], "%.3g") + "\n";
    }
    out += "  check: " + r["check"].get<std::string>() + "\n";
  } else if (env.command == "verify") {
    out += "  mode=" + r["mode"].get<std::string>() +
           "  p=" + fmt("%g", r["p"].get<double>()) + "\n";
    out += "  constant  " + real_text(r["constant"]["value"]) + "\n";
    const char* parts[] = {"hh", "hardy", "dual", "group_hilbert"};
    for (const char* part : parts)
      if (r.contains(part))
        out += "  " + std::string(part) + "  ratio " +
               real_text(r[part]["ratio"]) + "  " +
               pass_text(r[part]["holds"].get<bool>()) + "\n";
    if (r.contains("conjugate_check")) {
      const auto& cj = r["conjugate_check"];
      out += "  conjugate residual ";
      out += cj.contains("residual") ? real_text(cj["residual"], "%.3g")
                                     : std::string("n/a");
      out += "  ";
      out += pass_text(cj["within"].get<bool>());
      out += "\n";
    }
    out += "  overall: ";
    out += pass_text(r["holds"].get<bool>());
    out += "\n";
  } else if (env.command == "sharpness") {
    out += "  kernel=" + r["kernel"].get<std::string>() +
           "  p=" + fmt("%g", r["p"].get<double>()) +
           "  constant " + real_text(r["constant"]["value"]) + "\n";
    for (const auto& row : r["entries"])
      out += "  beta " + fmt("%-8g", row["beta"].get<double>()) + " ratio " +
             real_text(row["ratio"]) +
             (row["converged"].get<bool>() ? "" : "  (unconverged)") + "\n";
    out += "  nondecreasing: ";
    out += pass_text(r["nondecreasing"].get<bool>());
    out += "  within bound: ";
    out += pass_text(r["all_within_bound"].get<bool>());
    out += "\n";
  } else if (env.command == "dilation-probe") {
    out += "  kernel=" + r["kernel"].get<std::string>() + "\n";
    for (const auto& row : r["entries"])
      out += "  a " + fmt("%-8g", row["a"].get<double>()) + " ratio " +
             real_text(row["ratio"]) + "\n";
    out += "  slope " + real_text(r["fitted_slope"]) + "  expected " +
           fmt("%g", r["expected_slope"].get<double>()) + "  " +
           pass_text(r["within"].get<bool>()) + "\n";
  } else if (env.command == "geometry") {
    out += "  Q=" + fmt("%g", r["Q"].get<double>()) +
           "  |S|=" + real_text(r["sphere_measure"]["value"]) + " (" +
           r["sphere_measure"]["method"].get<std::string>() + ")\n";
    for (const auto& row : r["ball_volumes"])
      out += "  |B(0, " + fmt("%g", row["radius"].get<double>()) + ")| = " +
             fmt("%.12g", row["volume"].get<double>()) + "\n";
    out += "  scaling residual " +
           fmt("%.3g", r["scaling_residual"].get<double>()) +
           "  mc cross-check " +
           pass_text(r["mc_cross_check"]["within_4se"].get<bool>()) + "\n";
    out += "  overall: ";
    out += pass_text(r["holds"].get<bool>());
    out += "\n";
  }
  return out;
}

}  // namespace hh
