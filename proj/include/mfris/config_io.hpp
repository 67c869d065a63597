#pragma once

#include <optional>
#include <string>

#include "mfris/monte_carlo.hpp"
#include "mfris/sweep.hpp"
#include "mfris/system_config.hpp"

namespace mfris::cli {

using linkmodel::ScenarioSpec;
using linkmodel::SystemConfig;
using montecarlo::McConfig;

// Everything a run needs, parsed from one flat key = value file.
struct LoadedConfig {
    SystemConfig cfg;
    ScenarioSpec scenario;
    McConfig mc;
    std::optional<SweepSpec> sweep;
};

// Parses a flat key-value config. Keys are the SystemConfig field names;
// unit-bearing keys also accept _db / _dbm suffixed forms (converted to
// linear at the boundary). Unset keys keep the built-in defaults.
// Throws std::runtime_error with "<path>:<line>: ..." on parse errors and
// std::invalid_argument naming the violated constraint on bad values.
LoadedConfig load_config(const std::string& path);

// Same parser over an in-memory document (used by tests).
LoadedConfig parse_config(const std::string& text, const std::string& name = "<string>");

}  // namespace mfris::cli
