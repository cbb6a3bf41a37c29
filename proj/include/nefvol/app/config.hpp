#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "nefvol/surfaces.hpp"

namespace nefvol::app {

/// A surface given directly by its Gram matrix; not one of the abelian types.
struct GenericSurface {
    IntSymMatrix gram;
    IntVector canonical_ample;
};

using SurfaceInput = std::variant<SurfaceSpec, GenericSurface>;

enum class OutputFormat { Text, Json };

struct McConfig {
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = 42;
    bool enabled = true;
    /// Worker threads for the estimator; 0 = hardware concurrency. Never affects results.
    unsigned threads = 0;
};

struct OutputConfig {
    OutputFormat format = OutputFormat::Text;
    int precision = 12;
};

struct RunConfig {
    SurfaceInput surface;
    std::optional<IntVector> ample;
    McConfig mc;
    OutputConfig output;
};

/// Parses a config document. Throws ConfigError naming the offending path.
RunConfig parse_config(const nlohmann::json& doc);

/// `arg` is either inline JSON (first non-blank character '{') or a file path.
RunConfig load_config(std::string_view arg);

/// Inverse of the "surface" section of the config schema.
nlohmann::json surface_to_json(const SurfaceInput& surface);
SurfaceInput parse_surface(const nlohmann::json& node);

OutputFormat parse_format(std::string_view name);

}  // namespace nefvol::app
