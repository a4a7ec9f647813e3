#include "eitmech/app/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eitmech/app/config.hpp"
#include "eitmech/app/experiments.hpp"
#include "eitmech/app/output.hpp"
#include "eitmech/presets.hpp"
#include "eitmech/version.hpp"

namespace eitmech::app {

namespace fs = std::filesystem;

namespace {

struct Options {
    std::string config;
    std::string preset;
    std::string out;
    std::string model;
    std::size_t workers = 0;
    bool seedless = false;
};

ExperimentConfig preset_config(const std::string& name) {
    ExperimentConfig cfg;
    if (name == "cooling") {
        cfg.params = presets::cooling();
        cfg.amplitude = presets::cooling_amplitude;
    } else if (name == "mapping") {
        cfg.params = presets::mapping();
        cfg.amplitude = presets::mapping_amplitude;
    } else if (name == "entanglement") {
        cfg.params = presets::entanglement();
    } else {
        fail(ErrorKind::InvalidConfig, "unknown preset '" + name + "' (cooling, mapping, entanglement)");
    }
    cfg.label = "preset " + name;
    return cfg;
}

fs::path output_dir(const Options& opt, const ExperimentConfig& cfg) {
    if (!opt.out.empty()) return opt.out;
    if (!cfg.output_dir.empty()) return cfg.output_dir;
    if (const char* env = std::getenv("EITMECH_OUTPUT_DIR"); env && *env) return env;
    return "eitmech-out";
}

int exit_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidConfig:
        case ErrorKind::InvalidParameter:
        case ErrorKind::NotFound: return exit_config_error;
        default: return exit_numeric_failure;
    }
}

void print_files(std::ostream& out, const RunOutput& r) {
    for (const auto& f : r.files) out << "wrote " << f.string() << "\n";
}

int all_unstable_check(const SweepResult& s, std::ostream& err) {
    if (!s.rows.empty() && s.count_status("unstable") == s.rows.size()) {
        err << "eitmech: every sweep point is unstable\n";
        return exit_all_unstable;
    }
    return exit_ok;
}

int execute(Command command, const Options& opt, std::ostream& out, std::ostream& err) {
    if (!opt.config.empty() && !opt.preset.empty()) {
        fail(ErrorKind::InvalidConfig, "give either --config or --preset, not both");
    }
    if (opt.config.empty() && opt.preset.empty()) {
        fail(ErrorKind::InvalidConfig, "a --config file or a --preset is required");
    }
    ExperimentConfig cfg = opt.config.empty() ? preset_config(opt.preset) : load_config(opt.config);
    if (cfg.command && *cfg.command != command) {
        fail(ErrorKind::InvalidConfig, "config is for '" + std::string(to_string(*cfg.command)) +
                                           "' but the subcommand is '" +
                                           std::string(to_string(command)) + "'");
    }
    if (!opt.model.empty()) {
        cfg.tier = parse_model_tier(opt.model);
        cfg.tier_set = true;
    }
    if (opt.workers > 0) cfg.workers = opt.workers;
    if (command != Command::Spectrum) (void)effective_tier(cfg, command);  // reject bad tiers early

    const fs::path dir = output_dir(opt, cfg);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) fail(ErrorKind::InvalidConfig, "cannot create output directory '" + dir.string() + "'");

    switch (command) {
        case Command::Spectrum: {
            const SpectrumResult r = run_spectrum(cfg);
            const RunOutput o = write_spectrum(cfg, r, dir);
            print_files(out, o);
            if (r.halfwidth_eit) {
                out << "halfwidth " << *r.halfwidth_eit << " rad/s, kappa_EIT " << r.kappa_eit
                    << " rad/s\n";
            }
            return exit_ok;
        }
        case Command::Cool: {
            const CoolingResult r = run_cooling_sweep(cfg);
            print_files(out, write_cooling(cfg, r, dir));
            if (const auto m = sweep_min(r.sweep, "n_f")) {
                out << "min n_f = " << m->observed << " at " << r.sweep.parameter << " = " << m->value
                    << " (" << r.sweep.unit << ")\n";
            }
            return all_unstable_check(r.sweep, err);
        }
        case Command::Map: {
            const MappingResult r = run_mapping(cfg);
            print_files(out, write_mapping(cfg, r, dir));
            out << "ratios (g_eff/gamma_m n_i, g_eff/gamma_O, g_eff/gamma_E) = (" << r.ratios[0] << ", "
                << r.ratios[1] << ", " << r.ratios[2] << ")\n";
            return exit_ok;
        }
        case Command::Entangle: {
            const EntanglementResult r = run_entanglement_sweep(cfg);
            print_files(out, write_entanglement(cfg, r, dir));
            if (const auto m = sweep_max(r.sweep, "E_N")) {
                out << "max E_N = " << m->observed << " at " << r.sweep.parameter << " = " << m->value
                    << " (" << r.sweep.unit << ")\n";
            }
            return all_unstable_check(r.sweep, err);
        }
        case Command::Rates: {
            const RatesReport r = print_rates(cfg);
            out << format_rates(r);
            print_files(out, write_rates(cfg, r, dir));
            return exit_ok;
        }
    }
    return exit_ok;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hybrid atom-cavity-mirror simulator (linearized Gaussian dynamics)", "eitmech"};
    app.set_version_flag("--version", std::string(version()));
    app.require_subcommand(1);

    Options opt;
    std::optional<Command> chosen;
    const std::vector<std::pair<Command, const char*>> commands = {
        {Command::Spectrum, "Cavity transmission with and without atoms"},
        {Command::Cool, "Steady-state mirror occupancy over a parameter sweep"},
        {Command::Map, "Atom-to-mirror state transfer in the reduced model"},
        {Command::Entangle, "Atom-mirror logarithmic negativity over a sweep"},
        {Command::Rates, "Derived rates, closed-form predictions and regime checks"},
    };
    for (const auto& [cmd, help] : commands) {
        CLI::App* sub = app.add_subcommand(std::string(to_string(cmd)), help);
        sub->add_option("--config", opt.config, "Config file (or a CSV written by an earlier run)");
        sub->add_option("--preset", opt.preset, "Built-in parameters: cooling, mapping, entanglement");
        sub->add_option("--out", opt.out, "Output directory (default: $EITMECH_OUTPUT_DIR or ./eitmech-out)");
        sub->add_option("--workers", opt.workers, "Worker threads for sweeps (0: all cores)");
        sub->add_option("--model", opt.model, "Model tier: full, rwa-anti-stokes, rwa-stokes, bare");
        sub->add_flag("--seedless", opt.seedless,
                      "Accepted for scripts; every computation is deterministic already");
        const Command c = cmd;
        sub->callback([&chosen, c] { chosen = c; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_config_error;
    }

    try {
        return execute(*chosen, opt, out, err);
    } catch (const Error& e) {
        err << "eitmech: " << to_string(e.kind()) << ": " << e.what() << "\n";
        return exit_for(e.kind());
    } catch (const std::exception& e) {
        err << "eitmech: " << e.what() << "\n";
        return exit_numeric_failure;
    }
}

}  // namespace eitmech::app
