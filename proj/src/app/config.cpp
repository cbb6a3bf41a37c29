#include "nefvol/app/config.hpp"

#include <fstream>
#include <initializer_list>
#include <limits>
#include <set>
#include <sstream>

namespace nefvol::app {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) { throw ConfigError(path + ": " + msg); }

std::string join(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }

void reject_unknown(const json& node, const std::string& path, std::initializer_list<const char*> allowed) {
    const std::set<std::string> keys(allowed.begin(), allowed.end());
    for (const auto& [key, _] : node.items())
        if (!keys.contains(key)) fail(join(path, key), "unknown key");
}

const json& member(const json& node, const std::string& path, const char* key) {
    if (!node.contains(key)) fail(join(path, key), "missing");
    return node.at(key);
}

long as_long(const json& v, const std::string& path) {
    if (!v.is_number_integer()) fail(path, "expected an integer");
    if (v.is_number_unsigned()) {
        const auto u = v.get<std::uint64_t>();
        if (u > static_cast<std::uint64_t>(std::numeric_limits<long>::max())) fail(path, "integer out of range");
        return static_cast<long>(u);
    }
    return v.get<long>();
}

long get_long(const json& node, const std::string& path, const char* key) {
    return as_long(member(node, path, key), join(path, key));
}

IntVector as_int_vector(const json& v, const std::string& path) {
    if (!v.is_array()) fail(path, "expected an array of integers");
    IntVector out;
    for (std::size_t i = 0; i < v.size(); ++i) out.emplace_back(as_long(v[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

QuatElem as_quat(const QuatAlg& alg, const json& v, const std::string& path) {
    const IntVector c = as_int_vector(v, path);
    if (c.size() != 4) fail(path, "expected 4 integers [x, y, z, w] for x + y i + z j + w ij");
    return QuatElem(alg, Rational(c[0]), Rational(c[1]), Rational(c[2]), Rational(c[3]));
}

json quat_to_json(const QuatElem& q) {
    json arr = json::array();
    for (const auto& c : q.coords()) arr.push_back(c.get_num().get_si());
    return arr;
}

json ints_to_json(const IntVector& v) {
    json arr = json::array();
    for (const auto& x : v) arr.push_back(x.get_si());
    return arr;
}

}  // namespace

SurfaceInput parse_surface(const json& node) {
    const std::string path = "surface";
    if (!node.is_object()) fail(path, "expected an object");
    const json& kind_node = member(node, path, "kind");
    if (!kind_node.is_string()) fail(path + ".kind", "expected a string");
    const std::string kind = kind_node.get<std::string>();

    if (kind == "simple_integer") {
        reject_unknown(node, path, {"kind"});
        return SurfaceSpec{Type0{}};
    }
    if (kind == "simple_real_mult") {
        reject_unknown(node, path, {"kind", "d", "f"});
        return SurfaceSpec{Type1RealMult{get_long(node, path, "d"), get_long(node, path, "f")}};
    }
    if (kind == "simple_complex_mult") {
        reject_unknown(node, path, {"kind", "d", "f"});
        return SurfaceSpec{Type2CM{get_long(node, path, "d"), get_long(node, path, "f")}};
    }
    if (kind == "simple_quaternion") {
        reject_unknown(node, path, {"kind", "alpha", "beta", "a", "b"});
        std::optional<QuatAlg> alg;
        try {
            alg.emplace(get_long(node, path, "alpha"), get_long(node, path, "beta"));
        } catch (const SpecError& e) {
            throw SpecError(path + ": " + e.what());
        }
        return SurfaceSpec{Type3Quaternion{*alg, as_quat(*alg, member(node, path, "a"), path + ".a"),
                                           as_quat(*alg, member(node, path, "b"), path + ".b")}};
    }
    if (kind == "product_non_isogenous") {
        reject_unknown(node, path, {"kind"});
        return SurfaceSpec{TypeANonIsogenous{}};
    }
    if (kind == "product_isogenous") {
        reject_unknown(node, path, {"kind", "deg"});
        return SurfaceSpec{TypeBIsogenousNoCM{get_long(node, path, "deg")}};
    }
    if (kind == "product_isogenous_cm") {
        reject_unknown(node, path, {"kind", "d", "f1", "f2"});
        return SurfaceSpec{
            TypeCIsogenousCM{get_long(node, path, "d"), get_long(node, path, "f1"), get_long(node, path, "f2")}};
    }
    if (kind == "generic") {
        reject_unknown(node, path, {"kind", "gram", "canonical_ample"});
        const json& g = member(node, path, "gram");
        if (!g.is_array() || g.empty()) fail(path + ".gram", "expected a non-empty array of rows");
        IntMatrix m(g.size(), g.size());
        for (std::size_t i = 0; i < g.size(); ++i) {
            const IntVector row = as_int_vector(g[i], path + ".gram[" + std::to_string(i) + "]");
            if (row.size() != g.size()) fail(path + ".gram[" + std::to_string(i) + "]", "row length must equal row count");
            for (std::size_t j = 0; j < row.size(); ++j) m(i, j) = row[j];
        }
        std::optional<IntSymMatrix> gram;
        try {
            gram.emplace(std::move(m));
        } catch (const DimensionError& e) {
            fail(path + ".gram", e.what());
        }
        IntVector h0 = as_int_vector(member(node, path, "canonical_ample"), path + ".canonical_ample");
        if (h0.size() != gram->dim()) fail(path + ".canonical_ample", "length must equal the Gram dimension");
        return GenericSurface{std::move(*gram), std::move(h0)};
    }
    fail(path + ".kind", "unknown surface kind '" + kind + "'");
}

json surface_to_json(const SurfaceInput& surface) {
    if (const auto* g = std::get_if<GenericSurface>(&surface)) {
        json rows = json::array();
        for (std::size_t i = 0; i < g->gram.dim(); ++i) rows.push_back(ints_to_json(g->gram.matrix().row(i)));
        return json{{"kind", "generic"}, {"gram", rows}, {"canonical_ample", ints_to_json(g->canonical_ample)}};
    }
    const auto& spec = std::get<SurfaceSpec>(surface);
    if (std::holds_alternative<Type0>(spec)) return json{{"kind", "simple_integer"}};
    if (const auto* s = std::get_if<Type1RealMult>(&spec)) return json{{"kind", "simple_real_mult"}, {"d", s->d}, {"f", s->f}};
    if (const auto* s = std::get_if<Type2CM>(&spec)) return json{{"kind", "simple_complex_mult"}, {"d", s->d}, {"f", s->f}};
    if (const auto* s = std::get_if<Type3Quaternion>(&spec))
        return json{{"kind", "simple_quaternion"},
                    {"alpha", s->algebra.alpha()},
                    {"beta", s->algebra.beta()},
                    {"a", quat_to_json(s->a)},
                    {"b", quat_to_json(s->b)}};
    if (std::holds_alternative<TypeANonIsogenous>(spec)) return json{{"kind", "product_non_isogenous"}};
    if (const auto* s = std::get_if<TypeBIsogenousNoCM>(&spec)) return json{{"kind", "product_isogenous"}, {"deg", s->deg_sigma}};
    const auto& c = std::get<TypeCIsogenousCM>(spec);
    return json{{"kind", "product_isogenous_cm"}, {"d", c.d}, {"f1", c.f1}, {"f2", c.f2}};
}

OutputFormat parse_format(std::string_view name) {
    if (name == "text") return OutputFormat::Text;
    if (name == "json") return OutputFormat::Json;
    throw ConfigError("output.format: expected 'text' or 'json', got '" + std::string(name) + "'");
}

RunConfig parse_config(const json& doc) {
    if (!doc.is_object()) fail("config", "must be a JSON object");
    reject_unknown(doc, "", {"surface", "ample", "mc", "output"});
    RunConfig cfg{parse_surface(member(doc, "", "surface")), std::nullopt, {}, {}};
    if (doc.contains("ample") && !doc.at("ample").is_null()) cfg.ample = as_int_vector(doc.at("ample"), "ample");
    if (doc.contains("mc")) {
        const json& mc = doc.at("mc");
        if (!mc.is_object()) fail("mc", "expected an object");
        reject_unknown(mc, "mc", {"samples", "seed", "enabled", "threads"});
        if (mc.contains("samples")) {
            const long n = as_long(mc.at("samples"), "mc.samples");
            if (n < 1) fail("mc.samples", "must be >= 1");
            cfg.mc.samples = static_cast<std::uint64_t>(n);
        }
        if (mc.contains("seed")) {
            if (!mc.at("seed").is_number_integer()) fail("mc.seed", "expected an integer");
            cfg.mc.seed = mc.at("seed").get<std::uint64_t>();
        }
        if (mc.contains("enabled")) {
            if (!mc.at("enabled").is_boolean()) fail("mc.enabled", "expected a boolean");
            cfg.mc.enabled = mc.at("enabled").get<bool>();
        }
        if (mc.contains("threads")) {
            const long t = as_long(mc.at("threads"), "mc.threads");
            if (t < 0) fail("mc.threads", "must be >= 0");
            cfg.mc.threads = static_cast<unsigned>(t);
        }
    }
    if (doc.contains("output")) {
        const json& out = doc.at("output");
        if (!out.is_object()) fail("output", "expected an object");
        reject_unknown(out, "output", {"format", "precision"});
        if (out.contains("format")) {
            if (!out.at("format").is_string()) fail("output.format", "expected a string");
            cfg.output.format = parse_format(out.at("format").get<std::string>());
        }
        if (out.contains("precision")) {
            const long p = as_long(out.at("precision"), "output.precision");
            if (p < 1 || p > 17) fail("output.precision", "must be in 1..17");
            cfg.output.precision = static_cast<int>(p);
        }
    }
    return cfg;
}

RunConfig load_config(std::string_view arg) {
    const auto first = arg.find_first_not_of(" \t\r\n");
    std::string text;
    std::string origin;
    if (first != std::string_view::npos && arg[first] == '{') {
        text = std::string(arg);
        origin = "<inline>";
    } else {
        std::ifstream in{std::string(arg)};
        if (!in) throw ConfigError("cannot open config file '" + std::string(arg) + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
        origin = std::string(arg);
    }
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(origin + ": malformed JSON: " + e.what());
    }
    return parse_config(doc);
}

}  // namespace nefvol::app
