#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "nefvol/conevol.hpp"

namespace nefvol::app {

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
    bool operator==(const CheckResult&) const = default;
};

/// Everything computed for one (surface, ample class) pair. Emitted even
/// when checks fail.
struct VolumeReport {
    nlohmann::json surface;
    std::string label;
    std::uint64_t rho = 0;
    std::vector<std::vector<std::int64_t>> gram;
    std::int64_t discriminant = 0;
    std::vector<std::int64_t> ample;
    std::int64_t h_squared = 0;
    /// Absent for generic surfaces.
    std::optional<std::int64_t> closed_form_discriminant;
    std::optional<double> closed_form_volume;
    double prop1_volume = 0.0;
    std::optional<McEstimate> mc;
    VolumeBounds bounds{};
    std::vector<CheckResult> checks;
    int precision = 12;

    bool passed() const;
    bool operator==(const VolumeReport&) const = default;
};

/// Shortest-form decimal rendering with `precision` significant digits.
std::string format_real(double value, int precision);
double parse_real(const std::string& text);

std::int64_t to_int64(const Integer& value, const char* what);

nlohmann::json to_json(const VolumeReport& report);
VolumeReport report_from_json(const nlohmann::json& doc);

/// Pretty-printed JSON followed by a newline; byte-stable for equal reports.
std::string emit_json(const VolumeReport& report);
std::string emit_text(const VolumeReport& report);

}  // namespace nefvol::app
