#pragma once

#include <string>

#include <json.hpp>

#include "hh/config.hpp"

namespace hh {

// 0 all checks hold; 2 a check failed numerically; 3 a precondition or input
// problem; 4 divergence dominated the computation.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 2;
inline constexpr int kExitPrecondition = 3;
inline constexpr int kExitDivergence = 4;

// One finished run. `config` is the resolved echo, `results` the
// command-specific payload, `diagnostics` a flat array of labeled quadrature
// results. The timestamp lives outside `results` so identical runs produce
// byte-identical payloads. Non-finite numbers are encoded as
// {"finite": false, "repr": "inf"|"-inf"|"nan"} wherever they can occur.
struct ReportEnvelope {
  std::string version;
  std::string command;
  std::string timestamp;
  nlohmann::ordered_json config;
  nlohmann::ordered_json results;
  nlohmann::ordered_json diagnostics;
  int exit_code = 0;
};

ReportEnvelope cmd_constant(const ExperimentConfig& cfg);
ReportEnvelope cmd_verify(const ExperimentConfig& cfg);
ReportEnvelope cmd_sharpness(const ExperimentConfig& cfg);
ReportEnvelope cmd_dilation_probe(const ExperimentConfig& cfg);
ReportEnvelope cmd_geometry(const ExperimentConfig& cfg);

// Dispatch by subcommand name ("constant", "verify", "sharpness",
// "dilation-probe", "geometry"). Also enforces that csv output is only
// requested for the sweep commands.
ReportEnvelope run_command(const std::string& command,
                           const ExperimentConfig& cfg);

nlohmann::ordered_json envelope_json(const ReportEnvelope& env);

// Plot-ready table for the sweep commands (sharpness, dilation-probe);
// ConfigError for any other command.
std::string render_csv(const ReportEnvelope& env);

// Small aligned terminal summary of the run.
std::string render_human(const ReportEnvelope& env);

}  // namespace hh
