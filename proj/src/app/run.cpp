#include "nefvol/app/run.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "nefvol/homlattice.hpp"

namespace nefvol::app {

using nlohmann::json;

namespace {

[[noreturn]] void rethrow_located(const std::string& where) {
    try {
        throw;
    } catch (const SignatureError& e) {
        throw SignatureError(where + ": " + e.what());
    } catch (const NotPositiveError& e) {
        throw NotPositiveError(where + ": " + e.what());
    } catch (const DimensionError& e) {
        throw DimensionError(where + ": " + e.what());
    } catch (const SpecError& e) {
        throw SpecError(where + ": " + e.what());
    } catch (const AmpleError& e) {
        throw AmpleError(where + ": " + e.what());
    } catch (const NonIntegralError& e) {
        throw NonIntegralError(where + ": " + e.what());
    } catch (const FieldMismatch& e) {
        throw FieldMismatch(where + ": " + e.what());
    } catch (const DomainError& e) {
        throw DomainError(where + ": " + e.what());
    }
}

std::string inertia_string(const Inertia& in) {
    return "(" + std::to_string(in.positive) + ", " + std::to_string(in.negative) + ", " + std::to_string(in.zero) + ")";
}

double relative_gap(double a, double b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }

constexpr double kFormulaTolerance = 1e-12;

}  // namespace

VolumeReport run(const RunConfig& cfg) {
    std::optional<SurfaceSpec> spec;
    std::optional<IntSymMatrix> gram;
    IntVector canonical;
    Integer disc;
    std::string label;

    try {
        if (const auto* s = std::get_if<SurfaceSpec>(&cfg.surface)) {
            SurfaceModel model = build_model(*s);
            spec = *s;
            gram = std::move(model.gram);
            canonical = std::move(model.canonical_ample);
            disc = std::move(model.discriminant);
            label = describe(*s);
        } else {
            const auto& g = std::get<GenericSurface>(cfg.surface);
            if (!is_hyperbolic(g.gram))
                throw SignatureError("Gram matrix has inertia " + inertia_string(signature(g.gram)) +
                                     ", expected (1, rho-1, 0)");
            if (sgn(g.gram.square(g.canonical_ample)) <= 0)
                throw NotPositiveError("canonical ample class has non-positive square");
            gram = g.gram;
            canonical = g.canonical_ample;
            disc = det_exact(g.gram);
            label = "generic{rho=" + std::to_string(g.gram.dim()) + "}";
        }
    } catch (const Error&) {
        rethrow_located("surface");
    }

    AmpleClass ample;
    try {
        ample = validate_ample(*gram, canonical, cfg.ample.value_or(canonical));
    } catch (const Error&) {
        rethrow_located("ample");
    }

    const int p = cfg.output.precision;
    VolumeReport r;
    r.surface = surface_to_json(cfg.surface);
    r.label = label;
    r.rho = gram->dim();
    for (std::size_t i = 0; i < gram->dim(); ++i) {
        std::vector<std::int64_t> row;
        for (std::size_t j = 0; j < gram->dim(); ++j) row.push_back(to_int64((*gram)(i, j), "gram entry"));
        r.gram.push_back(std::move(row));
    }
    r.discriminant = to_int64(disc, "discriminant");
    for (const auto& c : ample.coords) r.ample.push_back(to_int64(c, "ample coordinate"));
    r.h_squared = to_int64(ample.h_squared, "H^2");
    r.precision = p;

    const Inertia inertia = signature(*gram);
    r.checks.push_back({"signature", inertia == Inertia{1, gram->dim() - 1, 0},
                        "inertia " + inertia_string(inertia)});
    const Integer cross = gram->bilinear(ample.coords, canonical);
    r.checks.push_back({"ampleness", sgn(ample.h_squared) > 0 && sgn(cross) > 0,
                        "H^2 = " + ample.h_squared.get_str() + ", H.H0 = " + cross.get_str()});

    r.prop1_volume = positive_cone_volume(*gram, ample.coords);
    r.bounds = volume_bounds(*gram, ample.coords, spec ? SurfaceMode::Abelian : SurfaceMode::Generic);

    if (spec) {
        const Integer cf_disc = closed_form_discriminant(*spec);
        r.closed_form_discriminant = to_int64(cf_disc, "closed-form discriminant");
        r.checks.push_back({"det-vs-closed-form", cf_disc == disc,
                            "det(gram) = " + disc.get_str() + ", closed form = " + cf_disc.get_str()});

        const double cf_vol = closed_form_volume(*spec, ample);
        r.closed_form_volume = cf_vol;
        const double gap = relative_gap(cf_vol, r.prop1_volume);
        r.checks.push_back({"closed-form-vs-prop1", gap <= kFormulaTolerance,
                            "closed form = " + format_real(cf_vol, p) + ", V_rho/(sqrt|D| (H^2)^(rho/2)) = " +
                                format_real(r.prop1_volume, p) + ", relative gap = " + format_real(gap, 3)});

        if (const auto* c = std::get_if<TypeCIsogenousCM>(&*spec)) {
            const Integer hom_disc = disc_product_cm(CMLattice(c->d, c->f1), CMLattice(c->d, c->f2));
            r.checks.push_back({"theorem-oracle", hom_disc == disc && hom_disc == cf_disc,
                                "-4 Im(s1 s2^)^2 = " + hom_disc.get_str() + ", det = " + disc.get_str() +
                                    ", -4 LCM(f1,f2)^2 Im(w)^2 = " + cf_disc.get_str()});
        }
    }

    if (cfg.mc.enabled) {
        const TruncatedCone cone(*gram, ample.coords);
        const McEstimate est = mc_volume(cone, cfg.mc.samples, cfg.mc.seed, cfg.mc.threads);
        r.mc = est;
        r.checks.push_back({"mc-within-4-stderr", within_four_stderr(est, r.prop1_volume),
                            "estimate = " + format_real(est.estimate, p) + " +/- " + format_real(est.std_error, p) +
                                ", reference = " + format_real(r.prop1_volume, p)});
    }
    return r;
}

SweepSpec parse_sweep(const std::string& family, const std::vector<std::string>& tokens) {
    SweepSpec out{family, {}};
    for (const auto& tok : tokens) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos || eq == 0) throw ConfigError("sweep range '" + tok + "': expected name=values");
        const std::string name = tok.substr(0, eq);
        if (out.ranges.contains(name)) throw ConfigError("sweep range '" + name + "' given twice");
        std::vector<long> values;
        std::stringstream items(tok.substr(eq + 1));
        std::string item;
        auto to_long = [&](const std::string& s) {
            std::size_t used = 0;
            long v = 0;
            try {
                v = std::stol(s, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used == 0 || used != s.size()) throw ConfigError("sweep range '" + tok + "': bad integer '" + s + "'");
            return v;
        };
        while (std::getline(items, item, ',')) {
            if (item.empty()) continue;
            const auto dots = item.find("..");
            if (dots == std::string::npos) {
                values.push_back(to_long(item));
            } else {
                const long lo = to_long(item.substr(0, dots));
                const long hi = to_long(item.substr(dots + 2));
                for (long v = lo; v <= hi; ++v) values.push_back(v);
            }
        }
        out.ranges.emplace(name, std::move(values));
    }
    return out;
}

bool SweepResult::passed() const {
    for (const auto& r : rows)
        if (!r.passed()) return false;
    return true;
}

SweepResult sweep(const SweepSpec& s, const McConfig& mc, int precision) {
    using Maker = std::function<SurfaceSpec(const std::vector<long>&)>;
    std::vector<std::string> params;
    Maker make;
    const std::string& f = s.family;
    if (f == "simple_integer") {
        make = [](const std::vector<long>&) { return SurfaceSpec{Type0{}}; };
    } else if (f == "simple_real_mult") {
        params = {"d", "f"};
        make = [](const std::vector<long>& v) { return SurfaceSpec{Type1RealMult{v[0], v[1]}}; };
    } else if (f == "simple_complex_mult") {
        params = {"d", "f"};
        make = [](const std::vector<long>& v) { return SurfaceSpec{Type2CM{v[0], v[1]}}; };
    } else if (f == "product_non_isogenous") {
        make = [](const std::vector<long>&) { return SurfaceSpec{TypeANonIsogenous{}}; };
    } else if (f == "product_isogenous") {
        params = {"deg"};
        make = [](const std::vector<long>& v) { return SurfaceSpec{TypeBIsogenousNoCM{v[0]}}; };
    } else if (f == "product_isogenous_cm") {
        params = {"d", "f1", "f2"};
        make = [](const std::vector<long>& v) { return SurfaceSpec{TypeCIsogenousCM{v[0], v[1], v[2]}}; };
    } else {
        throw ConfigError("sweep: family '" + f + "' is not sweepable");
    }

    std::vector<std::vector<long>> axes;
    for (const auto& name : params) {
        const auto it = s.ranges.find(name);
        if (it == s.ranges.end()) throw ConfigError("sweep: missing range for '" + name + "'");
        axes.push_back(it->second);
    }
    for (const auto& [name, _] : s.ranges)
        if (name != "c" && std::find(params.begin(), params.end(), name) == params.end())
            throw ConfigError("sweep: family '" + f + "' has no parameter '" + name + "'");
    const auto c_it = s.ranges.find("c");
    const bool scaled = c_it != s.ranges.end();
    axes.push_back(scaled ? c_it->second : std::vector<long>{1});

    SweepResult out{f, {}};
    for (const auto& axis : axes)
        if (axis.empty()) return out;

    std::vector<std::size_t> idx(axes.size(), 0);
    for (;;) {
        std::vector<long> values;
        for (std::size_t k = 0; k < axes.size(); ++k) values.push_back(axes[k][idx[k]]);
        const long c = values.back();
        values.pop_back();

        RunConfig cfg{make(values), std::nullopt, mc, {OutputFormat::Json, precision}};
        if (scaled) {
            IntVector h;
            try {
                h = build_model(std::get<SurfaceSpec>(cfg.surface)).canonical_ample;
            } catch (const Error&) {
                rethrow_located("surface");
            }
            for (auto& x : h) x *= c;
            cfg.ample = std::move(h);
        }
        out.rows.push_back(run(cfg));

        std::size_t k = axes.size();
        while (k > 0) {
            --k;
            if (++idx[k] < axes[k].size()) break;
            idx[k] = 0;
            if (k == 0) return out;
        }
        if (axes.empty()) return out;
    }
}

json sweep_to_json(const SweepResult& result) {
    json rows = json::array();
    for (const auto& r : result.rows) rows.push_back(to_json(r));
    return json{{"family", result.family}, {"count", result.rows.size()}, {"passed", result.passed()}, {"rows", rows}};
}

std::string emit_sweep_text(const SweepResult& result) {
    std::ostringstream os;
    os << "family " << result.family << ": " << result.rows.size() << " rows\n";
    if (!result.rows.empty()) {
        os << "surface\trho\tdisc\tH^2\tclosed_form\tpositive_cone\tmc\tmc_stderr\tchecks\n";
        for (const auto& r : result.rows) {
            const int p = r.precision;
            os << r.label << '\t' << r.rho << '\t' << r.discriminant << '\t' << r.h_squared << '\t'
               << (r.closed_form_volume ? format_real(*r.closed_form_volume, p) : "-") << '\t'
               << format_real(r.prop1_volume, p) << '\t' << (r.mc ? format_real(r.mc->estimate, p) : "-") << '\t'
               << (r.mc ? format_real(r.mc->std_error, p) : "-") << '\t' << (r.passed() ? "pass" : "FAIL") << '\n';
        }
    }
    os << (result.passed() ? "all rows passed\n" : "SOME ROWS FAILED\n");
    return os.str();
}

}  // namespace nefvol::app
