// nefvol: nef cone volumes and Néron–Severi discriminants of abelian surfaces.
//
// Exit status: 0 all checks passed, 2 usage or config error,
// 3 report produced but a check failed, 4 invalid surface or ample data.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nefvol/app/run.hpp"
#include "nefvol/conevol.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitCheckFailed = 3;
constexpr int kExitInvalidInput = 4;

struct Overrides {
    std::optional<std::uint64_t> samples;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> format;
    std::optional<int> precision;
    std::optional<unsigned> threads;
    bool no_mc = false;

    void attach(CLI::App* cmd) {
        cmd->add_option("--samples", samples, "Monte Carlo sample count")->check(CLI::PositiveNumber);
        cmd->add_option("--seed", seed, "Monte Carlo seed");
        cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--precision", precision, "Significant digits for reals")->check(CLI::Range(1, 17));
        cmd->add_option("--threads", threads, "Monte Carlo worker threads (0 = all cores)");
        cmd->add_flag("--no-mc", no_mc, "Skip the Monte Carlo estimate");
    }

    void apply(nefvol::app::McConfig& mc, nefvol::app::OutputConfig& out) const {
        if (samples) mc.samples = *samples;
        if (seed) mc.seed = *seed;
        if (threads) mc.threads = *threads;
        if (no_mc) mc.enabled = false;
        if (format) out.format = nefvol::app::parse_format(*format);
        if (precision) out.precision = *precision;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Nef cone volumes and discriminants of abelian surfaces"};
    app.require_subcommand(1);

    std::string config_arg;
    Overrides run_opts;
    auto* run_cmd = app.add_subcommand("run", "Run the full pipeline for one surface");
    run_cmd->add_option("config", config_arg, "Config file path or inline JSON document")->required();
    run_opts.attach(run_cmd);

    std::string family;
    std::vector<std::string> ranges;
    Overrides sweep_opts;
    auto* sweep_cmd = app.add_subcommand("sweep", "Run the pipeline over a parameter grid of one family");
    sweep_cmd->add_option("family", family, "Surface kind, e.g. simple_real_mult")->required();
    sweep_cmd->add_option("ranges", ranges, "Parameter ranges: name=v1,v2,lo..hi");
    sweep_opts.attach(sweep_cmd);

    int rho = 0;
    int vrho_precision = 17;
    auto* vrho_cmd = app.add_subcommand("vrho", "Print the standard truncated cone volume V_rho");
    vrho_cmd->add_option("rho", rho, "Picard number")->required();
    vrho_cmd->add_option("--precision", vrho_precision, "Significant digits")->check(CLI::Range(1, 17));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*run_cmd) {
            nefvol::app::RunConfig cfg = nefvol::app::load_config(config_arg);
            run_opts.apply(cfg.mc, cfg.output);
            const auto report = nefvol::app::run(cfg);
            std::cout << (cfg.output.format == nefvol::app::OutputFormat::Json ? nefvol::app::emit_json(report)
                                                                                 : nefvol::app::emit_text(report));
            return report.passed() ? kExitOk : kExitCheckFailed;
        }
        if (*sweep_cmd) {
            nefvol::app::McConfig mc;
            nefvol::app::OutputConfig out;
            sweep_opts.apply(mc, out);
            const auto result = nefvol::app::sweep(nefvol::app::parse_sweep(family, ranges), mc, out.precision);
            if (out.format == nefvol::app::OutputFormat::Json)
                std::cout << nefvol::app::sweep_to_json(result).dump(2) << "\n";
            else
                std::cout << nefvol::app::emit_sweep_text(result);
            return result.passed() ? kExitOk : kExitCheckFailed;
        }
        if (*vrho_cmd) {
            std::cout << nefvol::app::format_real(nefvol::v_rho(rho), vrho_precision) << "\n";
            return kExitOk;
        }
    } catch (const nefvol::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const nefvol::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const nefvol::Error& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInvalidInput;
    }
    return kExitUsage;
}
