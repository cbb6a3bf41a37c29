#include "nefvol/app/report.hpp"

#include <array>
#include <charconv>
#include <limits>
#include <sstream>
#include <system_error>

namespace nefvol::app {

using nlohmann::json;

bool VolumeReport::passed() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::string format_real(double value, int precision) {
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, precision);
    if (res.ec != std::errc{}) throw ConfigError("cannot format real value");
    return {buf.data(), res.ptr};
}

double parse_real(const std::string& text) {
    double v = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
        throw ConfigError("malformed real value '" + text + "'");
    return v;
}

std::int64_t to_int64(const Integer& value, const char* what) {
    if (!value.fits_slong_p()) throw ConfigError(std::string(what) + " = " + value.get_str() + " exceeds the 64-bit report range");
    return value.get_si();
}

namespace {

const json& field(const json& doc, const char* key) {
    if (!doc.contains(key)) throw ConfigError(std::string("report: missing '") + key + "'");
    return doc.at(key);
}

double real_field(const json& doc, const char* key) {
    const json& v = field(doc, key);
    if (!v.is_string()) throw ConfigError(std::string("report: '") + key + "' must be a decimal string");
    return parse_real(v.get<std::string>());
}

}  // namespace

json to_json(const VolumeReport& r) {
    const int p = r.precision;
    json doc;
    doc["surface"] = r.surface;
    doc["label"] = r.label;
    doc["rho"] = r.rho;
    doc["gram"] = r.gram;
    doc["discriminant"] = r.discriminant;
    doc["ample"] = r.ample;
    doc["h_squared"] = r.h_squared;
    doc["closed_form_discriminant"] = r.closed_form_discriminant ? json(*r.closed_form_discriminant) : json(nullptr);
    doc["closed_form_volume"] = r.closed_form_volume ? json(format_real(*r.closed_form_volume, p)) : json(nullptr);
    doc["prop1_volume"] = format_real(r.prop1_volume, p);
    if (r.mc) {
        doc["mc"] = {{"estimate", format_real(r.mc->estimate, p)},
                     {"stderr", format_real(r.mc->std_error, p)},
                     {"samples", r.mc->samples},
                     {"seed", r.mc->seed},
                     {"hits", r.mc->hits}};
    } else {
        doc["mc"] = nullptr;
    }
    doc["bounds"] = {{"lower_is_nef", format_real(r.bounds.lower_is_nef, p)},
                     {"pos", format_real(r.bounds.pos, p)},
                     {"upper_is_big", format_real(r.bounds.upper_is_big, p)},
                     {"equal", r.bounds.equal}};
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    doc["checks"] = checks;
    doc["passed"] = r.passed();
    doc["precision"] = r.precision;
    return doc;
}

VolumeReport report_from_json(const json& doc) {
    try {
        VolumeReport r;
        r.surface = field(doc, "surface");
        r.label = field(doc, "label").get<std::string>();
        r.rho = field(doc, "rho").get<std::uint64_t>();
        r.gram = field(doc, "gram").get<std::vector<std::vector<std::int64_t>>>();
        r.discriminant = field(doc, "discriminant").get<std::int64_t>();
        r.ample = field(doc, "ample").get<std::vector<std::int64_t>>();
        r.h_squared = field(doc, "h_squared").get<std::int64_t>();
        if (!field(doc, "closed_form_discriminant").is_null())
            r.closed_form_discriminant = doc.at("closed_form_discriminant").get<std::int64_t>();
        if (!field(doc, "closed_form_volume").is_null()) r.closed_form_volume = real_field(doc, "closed_form_volume");
        r.prop1_volume = real_field(doc, "prop1_volume");
        if (!field(doc, "mc").is_null()) {
            const json& mc = doc.at("mc");
            McEstimate est;
            est.estimate = real_field(mc, "estimate");
            est.std_error = real_field(mc, "stderr");
            est.samples = field(mc, "samples").get<std::uint64_t>();
            est.seed = field(mc, "seed").get<std::uint64_t>();
            est.hits = field(mc, "hits").get<std::uint64_t>();
            r.mc = est;
        }
        const json& b = field(doc, "bounds");
        r.bounds = VolumeBounds{real_field(b, "lower_is_nef"), real_field(b, "pos"), real_field(b, "upper_is_big"),
                                field(b, "equal").get<bool>()};
        for (const auto& c : field(doc, "checks"))
            r.checks.push_back(CheckResult{field(c, "name").get<std::string>(), field(c, "pass").get<bool>(),
                                           field(c, "detail").get<std::string>()});
        r.precision = field(doc, "precision").get<int>();
        return r;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("report: ") + e.what());
    }
}

std::string emit_json(const VolumeReport& report) { return to_json(report).dump(2) + "\n"; }

std::string emit_text(const VolumeReport& r) {
    const int p = r.precision;
    std::ostringstream os;
    os << "surface              " << r.label << "\n";
    os << "picard number        " << r.rho << "\n";
    os << "gram                 ";
    for (std::size_t i = 0; i < r.gram.size(); ++i) {
        os << (i == 0 ? "[" : " ") << "[";
        for (std::size_t j = 0; j < r.gram[i].size(); ++j) os << (j ? ", " : "") << r.gram[i][j];
        os << "]" << (i + 1 == r.gram.size() ? "]\n" : ",");
    }
    os << "discriminant         " << r.discriminant << "\n";
    os << "ample class          [";
    for (std::size_t i = 0; i < r.ample.size(); ++i) os << (i ? ", " : "") << r.ample[i];
    os << "]\n";
    os << "H^2                  " << r.h_squared << "\n";
    if (r.closed_form_volume) os << "closed-form volume   " << format_real(*r.closed_form_volume, p) << "\n";
    os << "positive-cone volume " << format_real(r.prop1_volume, p) << "\n";
    if (r.mc)
        os << "monte carlo          " << format_real(r.mc->estimate, p) << " +/- " << format_real(r.mc->std_error, p)
           << " (" << r.mc->hits << "/" << r.mc->samples << " hits, seed " << r.mc->seed << ")\n";
    os << "bounds               nef <= " << format_real(r.bounds.lower_is_nef, p) << ", pos = "
       << format_real(r.bounds.pos, p) << ", big >= " << format_real(r.bounds.upper_is_big, p)
       << (r.bounds.equal ? " (all equal)" : "") << "\n";
    os << "checks\n";
    for (const auto& c : r.checks) os << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name << ": " << c.detail << "\n";
    os << (r.passed() ? "all checks passed\n" : "SOME CHECKS FAILED\n");
    return os.str();
}

}  // namespace nefvol::app
