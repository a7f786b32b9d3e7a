#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "thermistor/simulator.hpp"

namespace thermistor {

struct ParsedConfig {
    SimulationConfig config;
    /// Non-fatal findings, one human-readable line each.
    std::vector<std::string> warnings;
};

/// Parse the line-oriented `key = value` format. '#' starts a comment.
///
/// Required: n_elements, tau, t_max, beta and the parameters of the chosen
/// model (gamma for paper_example; k0, sigma0 for constant; k0, sigma0,
/// lambda for rational_sigma). Optional: model, flux_left, flux_right,
/// scheme, potential_scheme, temperature_scheme, source, steady_tol,
/// record_every, freeze_potential.
///
/// Throws ConfigError (with the offending line number where there is one)
/// for unknown, duplicate, missing or unparsable keys and for violated
/// SimulationConfig invariants.
ParsedConfig parse_config(std::string_view text);

/// Reads the file and parses it. Throws ConfigError when it cannot be read.
ParsedConfig load_config(const std::filesystem::path& path);

/// Render a configuration in the same format (round-trips through
/// parse_config).
std::string format_config(const SimulationConfig& config);

}  // namespace thermistor
