#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include "hh/commands.hpp"
#include "hh/config.hpp"
#include "hh/errors.hpp"
#include "hh/quad.hpp"
#include "hh/version.hpp"

namespace {

struct Flags {
  std::string config_path;
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  int max_subdiv = 2000;
  std::uint64_t mc_samples = 1'000'000;
  std::uint64_t seed = 42;
  std::string output_path;
  std::string format = "json";
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "hhkit: numerical checks for Hardy-Hilbert type inequalities on "
      "homogeneous groups"};
  app.set_version_flag("--version", hh::kVersion);
  app.require_subcommand(1);

  Flags fl;
  app.add_option("--config", fl.config_path,
                 "JSON experiment config (flags override its fields)")
      ->check(CLI::ExistingFile);
  app.add_option("--rel-tol", fl.rel_tol, "Relative quadrature tolerance");
  app.add_option("--abs-tol", fl.abs_tol, "Absolute quadrature tolerance");
  app.add_option("--max-subdiv", fl.max_subdiv,
                 "Refinement cap per integral");
  app.add_option("--mc-samples", fl.mc_samples, "Monte Carlo sample count");
  app.add_option("--seed", fl.seed, "Monte Carlo seed");
  app.add_option("--output", fl.output_path,
                 "Write the machine report here instead of stdout");
  app.add_option("--format", fl.format, "Machine report format")
      ->check(CLI::IsMember({"json", "csv"}));

  struct SubSpec {
    const char* name;
    const char* desc;
  };
  static const SubSpec subs[] = {
      {"constant", "Compute a sharp constant and compare with closed forms"},
      {"verify", "Check the inequality family on concrete profiles"},
      {"sharpness", "Sweep near-extremal profiles toward the constant"},
      {"dilation-probe", "Fit the scaling exponent of the pairing ratio"},
      {"geometry", "Report Q, sphere measure, and ball volumes of a group"},
  };
  for (const SubSpec& s : subs)
    app.add_subcommand(s.name, s.desc)->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 3;
  }

  try {
    hh::ExperimentConfig cfg =
        fl.config_path.empty()
            ? hh::parse_config(nlohmann::json::object())
            : hh::load_config_file(fl.config_path);
    if (app.count("--rel-tol")) cfg.tol.rel = fl.rel_tol;
    if (app.count("--abs-tol")) cfg.tol.abs = fl.abs_tol;
    if (app.count("--max-subdiv")) cfg.tol.max_subdiv = fl.max_subdiv;
    if (app.count("--mc-samples")) cfg.mc.samples = fl.mc_samples;
    if (app.count("--seed")) cfg.mc.seed = fl.seed;
    if (app.count("--output")) cfg.output.path = fl.output_path;
    if (app.count("--format")) cfg.output.format = fl.format;

    const std::string command = app.get_subcommands().front()->get_name();
    const hh::ReportEnvelope env = hh::run_command(command, cfg);

    const std::string machine =
        cfg.output.format == "csv" ? hh::render_csv(env)
                                   : hh::envelope_json(env).dump(2) + "\n";
    const std::string human = hh::render_human(env);
    if (!cfg.output.path.empty()) {
      std::ofstream out(cfg.output.path);
      if (!out)
        throw hh::ConfigError("cannot open output file '" + cfg.output.path +
                              "'");
      out << machine;
      std::cout << human;
    } else {
      std::cout << machine;
      std::cerr << human;
    }
    return env.exit_code;
  } catch (const hh::DivergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return hh::kExitDivergence;
  } catch (const hh::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return hh::kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return hh::kExitPrecondition;
  }
}
