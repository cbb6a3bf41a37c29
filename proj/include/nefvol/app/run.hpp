#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "nefvol/app/config.hpp"
#include "nefvol/app/report.hpp"

namespace nefvol::app {

/// Full pipeline: model, discriminant, closed-form volume, positive-cone
/// volume, Monte Carlo estimate and cross-check verdicts.
///
/// Input problems (SpecError, AmpleError, SignatureError, ...) are rethrown
/// with the config location ("surface" or "ample") prefixed to the message.
VolumeReport run(const RunConfig& config);

/// One taxonomy family plus a value list per parameter, e.g.
/// family "simple_real_mult", ranges {"d": {2,3,5}, "f": {1,2,3}}.
struct SweepSpec {
    std::string family;
    std::map<std::string, std::vector<long>> ranges;
};

/// Parses "name=v1,v2,a..b" tokens. An empty value list ("f=") or an empty
/// range ("3..1") sweeps nothing.
SweepSpec parse_sweep(const std::string& family, const std::vector<std::string>& tokens);

struct SweepResult {
    std::string family;
    std::vector<VolumeReport> rows;
    bool passed() const;
};

SweepResult sweep(const SweepSpec& spec, const McConfig& mc, int precision);

nlohmann::json sweep_to_json(const SweepResult& result);
std::string emit_sweep_text(const SweepResult& result);

}  // namespace nefvol::app
