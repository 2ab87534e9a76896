#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hh/group.hpp"
#include "hh/kernel.hpp"
#include "hh/quad.hpp"
#include "hh/radial.hpp"

namespace hh {

// Dilation structure for a run. When absent from the config the half-line is
// used: weights (1), Euclidean norm, |S| overridden to 1, which makes the
// radial calculus coincide with plain Lebesgue integrals over (0, inf).
struct GroupConfig {
  std::vector<double> weights{1.0};
  std::string norm = "euclidean";  // "max" | "power:<2M>" | "euclidean"
  std::optional<double> sphere_measure_override = 1.0;
};

// Either a catalog kernel with its parameters or a custom expression with a
// declared homogeneity order. `transpose` swaps the two kernel slots after
// construction.
struct KernelConfig {
  std::string catalog;
  std::map<std::string, double> params;
  std::string expr;
  std::optional<double> order;
  std::string name;
  bool transpose = false;
};

// One radial profile. For power_cutoff the norm index defaults by slot: the
// first function of a pair lives in L^p, the second in the conjugate L^q.
struct FunctionConfig {
  std::string type;  // "power_cutoff" | "expr" | "grid" | "zero"
  double beta = 0.0;
  std::optional<double> exponent;
  std::string expr;
  std::vector<double> ln_r;
  std::vector<double> values;
};

struct McConfig {
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 42;
};

struct OutputConfig {
  std::string format = "json";  // "json" | "csv"
  std::string path;             // empty means stdout
};

// Fully parsed experiment description. Fields a command does not consume may
// be present in the document (one config file can drive several commands);
// unknown keys are rejected outright.
struct ExperimentConfig {
  std::optional<GroupConfig> group;
  std::optional<KernelConfig> kernel;
  double p = 2.0;
  std::string mode;  // command-specific; empty selects the default
  std::vector<FunctionConfig> functions;
  std::vector<double> betas{0.5, 0.2, 0.1, 0.05, 0.02};
  std::vector<double> scales{0.5, 1.0, 2.0, 4.0};
  std::vector<double> radii{1.0, 2.0};
  Tolerance tol;
  McConfig mc;
  OutputConfig output;
};

// Strict parse: every key must be known, every value well-typed and in range.
// Throws ConfigError with the offending path in the message.
ExperimentConfig parse_config(const nlohmann::json& doc);

// Reads and parses a config file; ConfigError on I/O or JSON syntax trouble.
ExperimentConfig load_config_file(const std::string& path);

HomogeneousGroup build_group(const ExperimentConfig& cfg);

// Needs the group for parameter defaults of the group-weighted family
// (Q from the group, c = Q/|S|) and config.p for its exponent default.
Kernel build_kernel(const ExperimentConfig& cfg, const HomogeneousGroup& grp);

// slot 0 resolves default exponents to p, slot 1 to the conjugate q
RadialFunction build_function(const FunctionConfig& fc, int slot, double p,
                              double Q);

// Catalog parameters with every default filled in (and validated): the
// group-weighted family takes p from the config, Q from the group, and
// c = Q/|S| unless given explicitly.
std::map<std::string, double> resolved_kernel_params(
    const ExperimentConfig& cfg, const HomogeneousGroup& grp);

// "classical" | "group" for constant, "operator" | "group_hilbert" for
// verify, "" for the rest; ConfigError on an unsupported value.
std::string resolved_mode(const ExperimentConfig& cfg,
                          const std::string& command);

// The resolved-config echo embedded in every report: exactly the fields the
// named command consumes, with every default filled in.
nlohmann::ordered_json echo_config(const ExperimentConfig& cfg,
                                   const std::string& command);

}  // namespace hh
