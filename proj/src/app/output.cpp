#include "eitmech/app/output.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "eitmech/errors.hpp"
#include "eitmech/solver.hpp"
#include "eitmech/version.hpp"

namespace eitmech::app {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json optional_number(const std::optional<double>& v) {
    return v ? number_or_null(*v) : json(nullptr);
}

std::string cell(const std::optional<double>& v) { return v ? format_number(*v) : std::string(); }

std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\n") == std::string::npos) return text;
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') out += '"';
        out += c == '\n' ? ' ' : c;
    }
    return out + "\"";
}

std::string prefix_for(const ExperimentConfig& cfg, Command command) {
    return cfg.output_prefix.empty() ? std::string(to_string(command)) : cfg.output_prefix;
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorKind::NumericFailure, "cannot write '" + path.string() + "'");
    out << content;
    if (!out) fail(ErrorKind::NumericFailure, "write failed for '" + path.string() + "'");
}

json base_summary(const ExperimentConfig& cfg, Command command) {
    json j;
    j["tool"] = "eitmech";
    j["version"] = std::string(version());
    j["command"] = std::string(to_string(command));
    json conv = json::object();
    for (const auto& [k, v] : run_conventions(cfg, command)) conv[k] = v;
    j["conventions"] = conv;
    return j;
}

void finish(RunOutput& out, const ExperimentConfig& cfg, Command command, const fs::path& dir) {
    json files = json::array();
    for (const auto& f : out.files) files.push_back(f.filename().string());
    out.summary["files"] = files;
    const fs::path path = dir / (prefix_for(cfg, command) + ".json");
    write_file(path, out.summary.dump(2) + "\n");
    out.files.push_back(path);
}

json extremum_json(const std::optional<Extremum>& e) {
    if (!e) return nullptr;
    return {{"value", number_or_null(e->observed)}, {"at", e->value}, {"index", e->index}};
}

std::string sweep_table(const std::string& header, const SweepResult& main,
                        const std::optional<SweepResult>& bare) {
    std::ostringstream os;
    os << header;
    os << "value,internal_value";
    for (const auto& c : main.columns) os << "," << c;
    os << ",warnings,status";
    if (bare) {
        for (const auto& c : bare->columns) os << "," << c << "_bare";
        os << ",status_bare";
    }
    os << ",detail\n";
    for (std::size_t i = 0; i < main.rows.size(); ++i) {
        const SweepRow& r = main.rows[i];
        os << format_number(r.value) << "," << format_number(r.internal_value);
        for (const auto& v : r.observables) os << "," << cell(v);
        os << "," << r.warnings << "," << r.status;
        std::string detail = r.detail;
        if (bare) {
            const SweepRow& b = bare->rows[i];
            for (const auto& v : b.observables) os << "," << cell(v);
            os << "," << b.status;
            if (!b.detail.empty()) detail += (detail.empty() ? "" : "; ") + std::string("bare: ") + b.detail;
        }
        os << "," << csv_field(detail) << "\n";
    }
    return os.str();
}

json sweep_counts(const SweepResult& s) {
    const std::size_t ok = s.count_status("ok"), unstable = s.count_status("unstable");
    return {{"points", s.rows.size()},
            {"ok", ok},
            {"unstable", unstable},
            {"failed", s.rows.size() - ok - unstable}};
}

}  // namespace

std::string format_number(double value) {
    std::array<char, 40> buf{};
    std::snprintf(buf.data(), buf.size(), "%.17g", value);
    return buf.data();
}

std::string run_header(const ExperimentConfig& config, Command command) {
    ExperimentConfig c = config;
    c.command = command;
    if (command != Command::Spectrum) {
        c.tier = effective_tier(config, command);
        c.tier_set = true;
    }
    c.workers = 0;
    c.output_dir.clear();
    if (command == Command::Cool || command == Command::Entangle) c.sweep = effective_sweep(config, command);

    std::ostringstream os;
    os << header_begin << "\n";
    for (const auto& [k, v] : run_conventions(c, command)) os << "## " << k << " = " << v << "\n";
    std::istringstream lines(render_config(c));
    std::string line;
    while (std::getline(lines, line)) os << (line.empty() ? "#" : "# " + line) << "\n";
    os << header_end << "\n";
    return os.str();
}

RunOutput write_spectrum(const ExperimentConfig& cfg, const SpectrumResult& r, const fs::path& dir) {
    RunOutput out;
    const double om = cfg.params.omega_m;
    std::vector<int> marker(r.frequencies.size(), 0);
    for (int sign : {-1, 1}) {
        const double target = sign * om;
        const double lo = r.frequencies.front(), hi = r.frequencies.back();
        if (target < lo || target > hi) continue;
        std::size_t best = 0;
        for (std::size_t i = 1; i < r.frequencies.size(); ++i) {
            if (std::abs(r.frequencies[i] - target) < std::abs(r.frequencies[best] - target)) best = i;
        }
        marker[best] = sign;
    }

    std::ostringstream os;
    os << run_header(cfg, Command::Spectrum);
    os << "omega,omega_over_omega_m,power_eit,re_eit,im_eit,power_bare,re_bare,im_bare,sideband_marker\n";
    for (std::size_t i = 0; i < r.frequencies.size(); ++i) {
        os << format_number(r.frequencies[i]) << ","
           << (om > 0.0 ? format_number(r.frequencies[i] / om) : std::string()) << ","
           << format_number(std::norm(r.eit[i])) << "," << format_number(r.eit[i].real()) << ","
           << format_number(r.eit[i].imag()) << "," << format_number(std::norm(r.bare[i])) << ","
           << format_number(r.bare[i].real()) << "," << format_number(r.bare[i].imag()) << ","
           << marker[i] << "\n";
    }
    const fs::path csv = dir / (prefix_for(cfg, Command::Spectrum) + ".csv");
    write_file(csv, os.str());
    out.files.push_back(csv);

    json j = base_summary(cfg, Command::Spectrum);
    j["points"] = r.frequencies.size();
    j["kappa_eit"] = number_or_null(r.kappa_eit);
    j["kappa"] = cfg.params.kappa;
    j["halfwidth_eit"] = optional_number(r.halfwidth_eit);
    j["halfwidth_bare"] = optional_number(r.halfwidth_bare);
    if (!r.halfwidth_eit_error.empty()) j["halfwidth_eit_error"] = r.halfwidth_eit_error;
    if (!r.halfwidth_bare_error.empty()) j["halfwidth_bare_error"] = r.halfwidth_bare_error;
    if (r.halfwidth_eit && r.kappa_eit > 0.0) j["halfwidth_over_kappa_eit"] = *r.halfwidth_eit / r.kappa_eit;
    j["peak_eit"] = r.peak_eit;
    j["sideband_markers"] = {r.sideband_markers[0], r.sideband_markers[1]};
    out.summary = std::move(j);
    finish(out, cfg, Command::Spectrum, dir);
    return out;
}

RunOutput write_cooling(const ExperimentConfig& cfg, const CoolingResult& r, const fs::path& dir) {
    RunOutput out;
    const fs::path csv = dir / (prefix_for(cfg, Command::Cool) + ".csv");
    write_file(csv, sweep_table(run_header(cfg, Command::Cool), r.sweep, r.bare));
    out.files.push_back(csv);

    json j = base_summary(cfg, Command::Cool);
    j["parameter"] = r.sweep.parameter;
    j["unit"] = r.sweep.unit;
    j["counts"] = sweep_counts(r.sweep);
    j["min_n_f"] = extremum_json(sweep_min(r.sweep, "n_f"));
    if (r.bare) {
        j["bare_delta_c"] = r.bare_delta_c;
        j["bare_counts"] = sweep_counts(*r.bare);
        j["bare_min_n_f"] = extremum_json(sweep_min(*r.bare, "n_f"));
        // Ratio at the last sweep point where both runs are stable.
        json ratio = nullptr;
        for (std::size_t i = r.sweep.rows.size(); i-- > 0;) {
            const auto eit = r.sweep.at(i, "n_f");
            const auto bare = r.bare->at(i, "n_f");
            if (r.sweep.rows[i].status == "ok" && r.bare->rows[i].status == "ok" && eit && bare && *eit > 0.0) {
                ratio = {{"at", r.sweep.rows[i].value}, {"bare_over_eit", *bare / *eit}};
                break;
            }
        }
        j["last_common_point"] = ratio;
    }
    out.summary = std::move(j);
    finish(out, cfg, Command::Cool, dir);
    return out;
}

RunOutput write_mapping(const ExperimentConfig& cfg, const MappingResult& r, const fs::path& dir) {
    RunOutput out;
    const std::string prefix = prefix_for(cfg, Command::Map);
    const std::string header = run_header(cfg, Command::Map);

    // Trajectory, decimated for file size.
    const std::size_t n = r.times.size();
    const std::size_t stride = n > 5000 ? (n + 4998) / 4999 : 1;
    std::ostringstream os;
    os << header;
    os << "t,t_over_swap,n_atom,n_mirror,fidelity_mirror_to_atom0,fidelity_atom_to_mirror0,"
          "fidelity_mirror_to_atom0_rotated,min_variance_mirror,min_variance_atom\n";
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < n; i += stride) keep.push_back(i);
    if (keep.back() != n - 1) keep.push_back(n - 1);
    for (const std::size_t i : keep) {
        os << format_number(r.times[i]) << "," << format_number(r.times[i] / r.swap_time) << ","
           << format_number(r.n_atom[i]) << "," << format_number(r.n_mirror[i]) << ","
           << format_number(r.fidelity_mirror[i]) << "," << format_number(r.fidelity_atom[i]) << ","
           << format_number(r.fidelity_mirror_rotated[i]) << "," << format_number(r.min_variance_mirror[i]) << "," << format_number(r.min_variance_atom[i])
           << "\n";
    }
    const fs::path traj = dir / (prefix + "_trajectory.csv");
    write_file(traj, os.str());
    out.files.push_back(traj);

    for (const MappingSnapshot& s : r.snapshots) {
        for (const auto& [mode, grid] : {std::pair{"c2", &s.atom}, std::pair{"b", &s.mirror}}) {
            std::ostringstream w;
            w << header << "# snapshot t = " << format_number(s.time) << "\nx,p,W\n";
            for (std::size_t i = 0; i < grid->x_axis.size(); ++i) {
                for (std::size_t k = 0; k < grid->p_axis.size(); ++k) {
                    w << format_number(grid->x_axis[i]) << "," << format_number(grid->p_axis[k]) << ","
                      << format_number(grid->values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)))
                      << "\n";
                }
            }
            const fs::path path = dir / (prefix + "_wigner_" + mode + "_" + s.tag + ".csv");
            write_file(path, w.str());
            out.files.push_back(path);
        }
    }

    auto at_time = [&](double t) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < n; ++i) {
            if (std::abs(r.times[i] - t) < std::abs(r.times[best] - t)) best = i;
        }
        return best;
    };
    auto point = [&](double t) {
        const std::size_t k = at_time(t);
        return json{{"t", r.times[k]},
                    {"n_atom", r.n_atom[k]},
                    {"n_mirror", r.n_mirror[k]},
                    {"fidelity_mirror_to_atom0", r.fidelity_mirror[k]},
                    {"fidelity_atom_to_mirror0", r.fidelity_atom[k]},
                    {"fidelity_mirror_to_atom0_rotated", r.fidelity_mirror_rotated[k]},
                    {"min_variance_mirror", r.min_variance_mirror[k]}};
    };

    json j = base_summary(cfg, Command::Map);
    j["g_eff"] = r.rates.g_eff;
    j["ratios"] = {{"g_eff_over_gamma_m_n_i", number_or_null(r.ratios[0])},
                   {"g_eff_over_gamma_O", number_or_null(r.ratios[1])},
                   {"g_eff_over_gamma_E", number_or_null(r.ratios[2])}};
    j["squeeze"] = cfg.mapping.squeeze;
    j["squeeze_angle"] = cfg.mapping.angle;
    j["thermal"] = cfg.mapping.thermal;
    j["swap_time"] = r.swap_time;
    j["half_time"] = r.half_time;
    j["t_final"] = r.t_final;
    if (r.half_time <= r.t_final * (1.0 + 1e-12)) j["at_half_time"] = point(r.half_time);
    if (r.swap_time <= r.t_final * (1.0 + 1e-12)) j["at_swap_time"] = point(r.swap_time);
    const auto best = std::max_element(r.fidelity_mirror.begin(), r.fidelity_mirror.end());
    const std::size_t kb = static_cast<std::size_t>(best - r.fidelity_mirror.begin());
    j["best_fidelity_mirror_to_atom0"] = {{"value", *best},
                                          {"t", r.times[kb]},
                                          {"t_over_swap", r.times[kb] / r.swap_time}};
    j["min_uncertainty_margin"] = r.min_uncertainty_margin;
    if (r.full) {
        json cc = json::array();
        for (std::size_t i = 0; i < r.full->times.size(); ++i) {
            cc.push_back({{"t", r.full->times[i]},
                          {"n_mirror_full", r.full->n_mirror_full[i]},
                          {"n_mirror_reduced", r.full->n_mirror_reduced[i]},
                          {"n_atom_full", r.full->n_atom_full[i]},
                          {"n_atom_reduced", r.full->n_atom_reduced[i]}});
        }
        j["full_crosscheck"] = cc;
    }
    out.summary = std::move(j);
    finish(out, cfg, Command::Map, dir);
    return out;
}

RunOutput write_entanglement(const ExperimentConfig& cfg, const EntanglementResult& r,
                             const fs::path& dir) {
    RunOutput out;
    const fs::path csv = dir / (prefix_for(cfg, Command::Entangle) + ".csv");
    write_file(csv, sweep_table(run_header(cfg, Command::Entangle), r.sweep, std::nullopt));
    out.files.push_back(csv);

    json j = base_summary(cfg, Command::Entangle);
    j["parameter"] = r.sweep.parameter;
    j["unit"] = r.sweep.unit;
    j["counts"] = sweep_counts(r.sweep);
    j["max_E_N"] = extremum_json(sweep_max(r.sweep, "E_N"));
    j["first_zero"] = optional_number(r.first_zero);
    j["first_unstable"] = optional_number(r.first_unstable);
    j["threshold_G"] = optional_number(r.threshold);
    j["threshold_G_hz"] = r.threshold ? number_or_null(cyclic(*r.threshold)) : json(nullptr);
    if (r.increasing_until_unstable) j["increasing_until_unstable"] = *r.increasing_until_unstable;
    j["g_far"] = number_or_null(r.g_far);
    j["crossover_n_i"] = optional_number(r.crossover);
    out.summary = std::move(j);
    finish(out, cfg, Command::Entangle, dir);
    return out;
}

RunOutput write_rates(const ExperimentConfig& cfg, const RatesReport& r, const fs::path& dir) {
    RunOutput out;
    json j = base_summary(cfg, Command::Rates);
    const DerivedRates& d = r.rates;
    json rates = json::object();
    for (const auto& [name, v] : {std::pair{"C", d.C}, {"Gamma_O", d.Gamma_O}, {"Gamma_E", d.Gamma_E},
                                  {"gamma_O", d.gamma_O}, {"gamma_E", d.gamma_E},
                                  {"kappa_eit", d.kappa_eit}, {"g_eff", d.g_eff}, {"g_far", d.g_far}}) {
        rates[name] = number_or_null(v);
    }
    j["rates"] = rates;
    j["collective_coupling"] = r.params.collective_coupling();
    j["closed_form_cooling"] = {{"n_f", number_or_null(r.prediction.n_f)},
                                {"cooling_rate", number_or_null(r.prediction.cooling_rate)},
                                {"heating_rate", number_or_null(r.prediction.heating_rate)}};
    j["crossover_n_i"] = optional_number(r.crossover);
    json warnings = json::array();
    for (const auto& w : r.prediction.warnings) warnings.push_back({{"name", w.name}, {"message", w.message}});
    j["regime_warnings"] = warnings;
    if (r.stability) {
        j["stability"] = {{"spectral_abscissa", r.stability->spectral_abscissa},
                          {"stable", r.stability->stable}};
    } else {
        j["stability"] = {{"error", r.stability_error}};
    }
    std::ostringstream cfg_text;
    cfg_text << run_header(cfg, Command::Rates);
    j["header"] = cfg_text.str();
    out.summary = std::move(j);
    finish(out, cfg, Command::Rates, dir);
    return out;
}

std::string format_rates(const RatesReport& r) {
    std::ostringstream os;
    auto line = [&os](const char* name, double v, bool rate) {
        char buf[160];
        if (rate) {
            std::snprintf(buf, sizeof buf, "  %-10s = %.6g rad/s  [(2pi) %.6g Hz]\n", name, v, cyclic(v));
        } else {
            std::snprintf(buf, sizeof buf, "  %-10s = %.6g\n", name, v);
        }
        os << buf;
    };
    const DerivedRates& d = r.rates;
    os << "derived rates\n";
    line("g_N", r.params.collective_coupling(), true);
    line("C", d.C, false);
    line("Gamma_O", d.Gamma_O, true);
    line("Gamma_E", d.Gamma_E, true);
    line("gamma_O", d.gamma_O, true);
    line("gamma_E", d.gamma_E, true);
    line("kappa_EIT", d.kappa_eit, true);
    line("g_eff", d.g_eff, true);
    line("g_far", d.g_far, true);
    os << "closed-form predictions\n";
    line("n_f", r.prediction.n_f, false);
    line("cooling", r.prediction.cooling_rate, true);
    line("heating", r.prediction.heating_rate, true);
    if (r.crossover) line("n_i*", *r.crossover, false);
    os << "regime warnings\n";
    if (r.prediction.warnings.empty()) os << "  none\n";
    for (const auto& w : r.prediction.warnings) os << "  " << w.name << ": " << w.message << "\n";
    os << "stability (" << to_string(r.tier) << " model)\n";
    if (r.stability) {
        char buf[120];
        std::snprintf(buf, sizeof buf, "  spectral abscissa = %.6g rad/s, %s\n",
                      r.stability->spectral_abscissa, r.stability->stable ? "stable" : "UNSTABLE");
        os << buf;
    } else {
        os << "  error: " << r.stability_error << "\n";
    }
    return os.str();
}

}  // namespace eitmech::app
