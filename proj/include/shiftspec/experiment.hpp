#pragma once

#include <string>

#include "json.hpp"

#include "shiftspec/multidim.hpp"
#include "shiftspec/operators.hpp"
#include "shiftspec/spectra.hpp"
#include "shiftspec/verify.hpp"

namespace shiftspec {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.1.0";

// Validated experiment description. `raw` is echoed into reports so a run
// can be reproduced from its own output.
struct ExperimentConfig {
    std::string task; // radius | predict | verify | joint | conjecture-gap | selftest
    Json raw;
};

// Schema validation happens here; violations raise ConfigError.
ExperimentConfig parse_config(const Json& j);
ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig parse_config_file(const std::string& path);

struct Report {
    Json doc;
    int exit_code = 0;
};

// Dispatches the config to the library and assembles a self-contained
// report. Lambda grids and section lists run on `workers` threads with a
// deterministic merge order.
Report run(const ExperimentConfig& cfg, int workers = 1, std::uint64_t seed_override = 0,
           bool has_seed_override = false);

// Writes report.json (always) plus CSV extracts (clouds, growth and
// residual tables) when format == "csv".
void emit(const Report& report, const std::string& out_dir, const std::string& format);

// Schema helpers shared with the bindings.
SpaceSpec space_from_json(const Json& j);
FiniteSeq finite_seq_from_json(const Json& j);
OperatorSpec operator_from_json(const Json& j, const SpaceSpec& space);
Json certificate_to_json(const Certificate& cert);
Json region_to_json(const SpectralRegion& region);

} // namespace shiftspec
