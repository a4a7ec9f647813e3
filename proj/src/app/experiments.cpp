#include "eitmech/app/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "eitmech/errors.hpp"
#include "eitmech/response.hpp"
#include "eitmech/solver.hpp"
#include "eitmech/version.hpp"

namespace eitmech::app {

namespace {

void flag_error(SweepRow& row, const Error& e) {
    row.status = std::string(to_string(e.kind()));
    row.detail = e.what();
}

double min_variance(const Eigen::Matrix2d& V) {
    return Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d>(V, Eigen::EigenvaluesOnly)
        .eigenvalues()
        .minCoeff();
}

std::size_t snapshot_index(double time, double t_final, std::size_t steps) {
    return static_cast<std::size_t>(std::llround(time / t_final * static_cast<double>(steps)));
}

bool tier_allowed(Command command, ModelTier tier) {
    switch (command) {
        case Command::Cool: return tier != ModelTier::RwaStokes;
        case Command::Map: return tier == ModelTier::RwaAntiStokes;
        case Command::Entangle: return tier == ModelTier::Full || tier == ModelTier::RwaStokes;
        case Command::Spectrum:
        case Command::Rates: return true;
    }
    return true;
}

SweepRow cooling_point(const SystemParams& base, const SweepSpec& sweep, double value,
                       ModelTier tier, double amplitude, bool closed_form_columns) {
    SweepRow row;
    row.value = value;
    row.observables.assign(closed_form_columns ? 5 : 2, std::nullopt);
    try {
        row.internal_value = sweep_to_internal(sweep, value, base);
        const SystemParams p = apply_sweep(base, sweep, value);
        row.warnings = validate_regime(p, amplitude).size();
        const LinearModel model = build_model(tier, p);
        const Stability st = stability(model);
        row.observables[1] = st.spectral_abscissa;
        if (closed_form_columns) {
            const DerivedRates r = derived_rates(p);
            row.observables[2] = predict_cooling(p).n_f;
            row.observables[3] = r.kappa_eit;
            try {
                row.observables[4] = extract_halfwidth(sample_response(p, default_spectrum_grid(p)));
            } catch (const Error&) {
                // no clean transmission peak at this point; left empty
            }
        }
        if (!st.stable) {
            row.status = "unstable";
            return row;
        }
        row.observables[0] = occupancy(steady_covariance(model), "b");
    } catch (const Error& e) {
        flag_error(row, e);
    }
    return row;
}

SweepRow entanglement_point(const SystemParams& base, const SweepSpec& sweep, double value,
                            ModelTier tier, double amplitude) {
    SweepRow row;
    row.value = value;
    row.observables.assign(4, std::nullopt);
    try {
        row.internal_value = sweep_to_internal(sweep, value, base);
        const SystemParams p = apply_sweep(base, sweep, value);
        row.warnings = validate_regime(p, amplitude).size();
        const LinearModel model = build_model(tier, p);
        const Stability st = stability(model);
        row.observables[1] = st.spectral_abscissa;
        if (!st.stable) {
            row.status = "unstable";
            return row;
        }
        const GaussianState s = steady_covariance(model);
        row.observables[0] = log_negativity(s, "c2", "b");
        row.observables[2] = occupancy(s, "b");
        row.observables[3] = occupancy(s, "c2");
    } catch (const Error& e) {
        flag_error(row, e);
    }
    return row;
}

template <class Cmp>
std::optional<Extremum> sweep_extremum(const SweepResult& sweep, const std::string& column, Cmp better) {
    const std::size_t c = sweep.column(column);
    std::optional<Extremum> best;
    for (std::size_t i = 0; i < sweep.rows.size(); ++i) {
        const SweepRow& r = sweep.rows[i];
        if (r.status != "ok" || !r.observables[c]) continue;
        if (!best || better(*r.observables[c], best->observed)) best = Extremum{i, r.value, *r.observables[c]};
    }
    return best;
}

}  // namespace

ModelTier effective_tier(const ExperimentConfig& cfg, Command command) {
    const ModelTier tier = cfg.tier_set ? cfg.tier
                                        : (command == Command::Map ? ModelTier::RwaAntiStokes
                                                                   : ModelTier::Full);
    if (!tier_allowed(command, tier)) {
        fail(ErrorKind::InvalidConfig, "model tier '" + std::string(to_string(tier)) +
                                           "' is not supported by '" +
                                           std::string(to_string(command)) + "'");
    }
    return tier;
}

SweepSpec effective_sweep(const ExperimentConfig& cfg, Command command) {
    if (cfg.sweep) return *cfg.sweep;
    return default_sweep(command, "delta");
}

std::vector<std::pair<std::string, std::string>> run_conventions(const ExperimentConfig& cfg,
                                                                 Command command) {
    std::vector<std::pair<std::string, std::string>> c;
    c.emplace_back("tool", "eitmech " + std::string(version()));
    c.emplace_back("command", std::string(to_string(command)));
    if (command != Command::Spectrum) {
        c.emplace_back("model_tier", std::string(to_string(effective_tier(cfg, command))));
    }
    c.emplace_back("units", "angular (rad/s) internally; header values are angular");
    c.emplace_back("one_photon_detuning", cfg.params.Delta ? "fixed" : "follows-delta");
    c.emplace_back("noise_normalization",
                   "<o_in o_in^dag> = 2 Gamma_o (vacuum inputs give vacuum steady states)");
    c.emplace_back("mirror_coupling", "db/dt contains +i G (a + a^dag), <a> real and positive");
    c.emplace_back("mirror_damping",
                   "non-RWA -gamma_m (b - b^dag) in full and bare tiers, RWA in reduced tiers");
    c.emplace_back("quadratures", "x = (o + o^dag)/sqrt(2), p = -i(o - o^dag)/sqrt(2), vacuum 1/2");
    c.emplace_back("log_negativity", "natural log, E_N = max(0, -ln 2 nu)");
    if (command == Command::Map) {
        c.emplace_back("squeeze_axis", "theta = " + std::to_string(cfg.mapping.angle) + " rad");
        c.emplace_back("swap_time_unit", "pi/g_eff");
    }
    c.emplace_back("randomness", "none; outputs do not depend on --workers");
    return c;
}

SpectrumResult run_spectrum(const ExperimentConfig& cfg) {
    const SystemParams& p = cfg.params;
    p.validate();
    if (!(p.kappa > 0.0)) fail(ErrorKind::InvalidConfig, "spectrum needs kappa > 0");
    SpectrumResult out;
    const double center = cfg.spectrum.center.value_or(p.delta);
    const double half = cfg.spectrum.span * p.kappa;
    out.frequencies = linspace(center - half, center + half, cfg.spectrum.points);

    SystemParams empty = p;
    empty.g = 0.0;
    const Spectrum eit = sample_response(p, out.frequencies);
    const Spectrum bare = sample_response(empty, out.frequencies);
    out.eit = eit.values;
    out.bare = bare.values;
    try {
        out.halfwidth_eit = extract_halfwidth(eit);
    } catch (const Error& e) {
        out.halfwidth_eit_error = e.what();
    }
    try {
        out.halfwidth_bare = extract_halfwidth(bare);
    } catch (const Error& e) {
        out.halfwidth_bare_error = e.what();
    }
    const std::vector<double> power = eit.power();
    const auto peak = std::max_element(power.begin(), power.end()) - power.begin();
    out.peak_eit = out.frequencies[static_cast<std::size_t>(peak)];
    out.kappa_eit = p.gamma > 0.0 ? derived_rates(p).kappa_eit : p.gamma_c + p.kappa;
    out.sideband_markers = {-p.omega_m, p.omega_m};
    return out;
}

CoolingResult run_cooling_sweep(const ExperimentConfig& cfg, std::size_t workers) {
    CoolingResult out;
    out.tier = effective_tier(cfg, Command::Cool);
    const SweepSpec sweep = effective_sweep(cfg, Command::Cool);
    const SystemParams base = cfg.params;
    base.validate();
    const std::vector<double> values = sweep.values();
    const bool closed_form = out.tier != ModelTier::Bare;

    out.sweep.parameter = sweep.parameter;
    out.sweep.unit = std::string(to_string(sweep.unit));
    out.sweep.columns = {"n_f", "spectral_abscissa"};
    if (closed_form) {
        for (const char* c : {"n_f_closed_form", "kappa_eit", "kappa_eit_extracted"}) {
            out.sweep.columns.emplace_back(c);
        }
    }
    const std::function<SweepRow(std::size_t)> eval = [&](std::size_t i) {
        return cooling_point(base, sweep, values[i], out.tier, cfg.amplitude, closed_form);
    };
    out.sweep.rows = parallel_map<SweepRow>(values.size(), cfg.workers ? cfg.workers : workers, eval);

    const bool paired =
        cfg.bare.enabled.value_or(out.tier == ModelTier::Full && sweep.parameter == "G");
    if (paired && out.tier != ModelTier::Bare) {
        SystemParams bare = base;
        out.bare_delta_c = cfg.bare.delta_c.value_or(0.5 * base.kappa);
        bare.delta_c = out.bare_delta_c;
        SweepResult b;
        b.parameter = sweep.parameter;
        b.unit = out.sweep.unit;
        b.columns = {"n_f", "spectral_abscissa"};
        const std::function<SweepRow(std::size_t)> eval_bare = [&](std::size_t i) {
            return cooling_point(bare, sweep, values[i], ModelTier::Bare, cfg.amplitude, false);
        };
        b.rows = parallel_map<SweepRow>(values.size(), cfg.workers ? cfg.workers : workers, eval_bare);
        out.bare = std::move(b);
    }
    return out;
}

MappingResult run_mapping(const ExperimentConfig& cfg) {
    const ModelTier tier = effective_tier(cfg, Command::Map);
    const SystemParams& p = cfg.params;
    const MappingSettings& m = cfg.mapping;
    MappingResult out;
    out.rates = derived_rates(p);
    const DerivedRates& r = out.rates;
    if (!(r.g_eff > 0.0)) fail(ErrorKind::InvalidConfig, "g_eff = 0: no atom-mirror coupling to map with");

    const double inf = std::numeric_limits<double>::infinity();
    const double thermal = p.gamma_m * p.n_i;
    out.ratios = {thermal > 0.0 ? r.g_eff / thermal : inf, r.gamma_O > 0.0 ? r.g_eff / r.gamma_O : inf,
                  r.gamma_E > 0.0 ? r.g_eff / r.gamma_E : inf};
    out.swap_time = pi / r.g_eff;
    out.half_time = 0.5 * out.swap_time;
    out.t_final = m.t_final * out.swap_time;

    const std::vector<std::string> labels = {"c2", "b"};
    const std::vector<ModeSpec> specs = {ModeSpec::squeezed(m.squeeze, m.angle),
                                         ModeSpec::thermal(m.thermal)};
    const GaussianState initial = prepare_product_state(labels, specs);
    const LinearModel model = build_model(tier, p);
    const Trajectory traj = propagate(model, initial, out.t_final, out.t_final / static_cast<double>(m.steps));

    const Eigen::Matrix2d V_atom0 = initial.mode_covariance("c2");
    const Eigen::Vector2d mu_atom0 = initial.mode_mean("c2");
    const Eigen::Matrix2d V_mirror0 = initial.mode_covariance("b");
    const Eigen::Vector2d mu_mirror0 = initial.mode_mean("b");
    out.min_uncertainty_margin = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < traj.times.size(); ++k) {
        const GaussianState& s = traj.states[k];
        out.times.push_back(traj.times[k]);
        out.n_atom.push_back(occupancy(s, "c2"));
        out.n_mirror.push_back(occupancy(s, "b"));
        out.fidelity_mirror.push_back(
            gaussian_fidelity(s.mode_covariance("b"), s.mode_mean("b"), V_atom0, mu_atom0));
        out.fidelity_mirror_rotated.push_back(
            gaussian_fidelity_up_to_rotation(s.mode_covariance("b"), s.mode_mean("b"), V_atom0, mu_atom0)
                .fidelity);
        out.fidelity_atom.push_back(
            gaussian_fidelity(s.mode_covariance("c2"), s.mode_mean("c2"), V_mirror0, mu_mirror0));
        out.min_variance_mirror.push_back(min_variance(s.mode_covariance("b")));
        out.min_variance_atom.push_back(min_variance(s.mode_covariance("c2")));
        out.min_uncertainty_margin = std::min(out.min_uncertainty_margin, uncertainty_margin(s.covariance));
    }

    std::vector<std::pair<std::string, double>> marks = {{"t0", 0.0}};
    if (out.half_time <= out.t_final * (1.0 + 1e-12)) marks.emplace_back("half", out.half_time);
    if (out.swap_time <= out.t_final * (1.0 + 1e-12)) marks.emplace_back("full", out.swap_time);
    for (const auto& [tag, t] : marks) {
        const std::size_t k = std::min(snapshot_index(t, out.t_final, m.steps), traj.states.size() - 1);
        const GaussianState& s = traj.states[k];
        MappingSnapshot snap;
        snap.tag = tag;
        snap.time = traj.times[k];
        snap.atom = wigner(s, "c2", WignerGridSpec::around(s, "c2", m.wigner_sigmas, m.wigner_points));
        snap.mirror = wigner(s, "b", WignerGridSpec::around(s, "b", m.wigner_sigmas, m.wigner_points));
        out.snapshots.push_back(std::move(snap));
    }

    if (m.full_crosscheck) {
        const std::vector<std::string> full_labels = {"c2", "c3", "a", "b"};
        const std::vector<ModeSpec> full_specs = {ModeSpec::squeezed(m.squeeze, m.angle),
                                                  ModeSpec::vacuum(), ModeSpec::vacuum(),
                                                  ModeSpec::thermal(m.thermal)};
        const GaussianState full0 = prepare_product_state(full_labels, full_specs);
        const Trajectory ft = propagate(build_full(p), full0, out.t_final,
                                        out.t_final / static_cast<double>(m.full_steps));
        MappingCrosscheck cc;
        for (const auto& [tag, t] : marks) {
            const std::size_t kf = std::min(snapshot_index(t, out.t_final, m.full_steps), ft.states.size() - 1);
            const std::size_t kr = std::min(snapshot_index(t, out.t_final, m.steps), traj.states.size() - 1);
            cc.times.push_back(ft.times[kf]);
            cc.n_mirror_full.push_back(occupancy(ft.states[kf], "b"));
            cc.n_atom_full.push_back(occupancy(ft.states[kf], "c2"));
            cc.n_mirror_reduced.push_back(out.n_mirror[kr]);
            cc.n_atom_reduced.push_back(out.n_atom[kr]);
        }
        out.full = std::move(cc);
    }
    return out;
}

EntanglementResult run_entanglement_sweep(const ExperimentConfig& cfg, std::size_t workers) {
    EntanglementResult out;
    out.tier = effective_tier(cfg, Command::Entangle);
    const SweepSpec sweep = effective_sweep(cfg, Command::Entangle);
    const SystemParams base = cfg.params;
    base.validate();
    const std::vector<double> values = sweep.values();

    out.sweep.parameter = sweep.parameter;
    out.sweep.unit = std::string(to_string(sweep.unit));
    out.sweep.columns = {"E_N", "spectral_abscissa", "n_b", "n_c2"};
    const std::function<SweepRow(std::size_t)> eval = [&](std::size_t i) {
        return entanglement_point(base, sweep, values[i], out.tier, cfg.amplitude);
    };
    out.sweep.rows = parallel_map<SweepRow>(values.size(), cfg.workers ? cfg.workers : workers, eval);

    const auto& rows = out.sweep.rows;
    for (const SweepRow& r : rows) {
        if (r.status == "ok" && r.observables[0] && *r.observables[0] == 0.0) {
            out.first_zero = r.value;
            break;
        }
    }
    const auto unstable = std::find_if(rows.begin(), rows.end(),
                                       [](const SweepRow& r) { return r.status == "unstable"; });
    if (unstable != rows.end()) out.first_unstable = unstable->value;

    if (sweep.parameter == "G") {
        bool increasing = true;
        std::optional<double> previous;
        for (auto it = rows.begin(); it != unstable; ++it) {
            if (it->status != "ok" || !it->observables[0]) {
                increasing = false;
                break;
            }
            if (previous && *it->observables[0] < *previous) increasing = false;
            previous = it->observables[0];
        }
        out.increasing_until_unstable = increasing;
        if (unstable != rows.end() && unstable != rows.begin() && std::prev(unstable)->status == "ok") {
            try {
                const ModelTier tier = out.tier;
                out.threshold = instability_threshold(
                    base, [tier](const SystemParams& q) { return build_model(tier, q); },
                    std::prev(unstable)->internal_value, unstable->internal_value);
            } catch (const Error&) {
                // stability is not monotone in G here; no single threshold to report
            }
        }
    }

    try {
        out.g_far = derived_rates(base).g_far;
        if (base.gamma_m > 0.0) out.crossover = predict_entanglement_crossover(base);
    } catch (const Error&) {
        // kappa or gamma zero: closed-form rates undefined
    }
    return out;
}

RatesReport print_rates(const ExperimentConfig& cfg) {
    RatesReport out;
    out.params = cfg.params;
    out.rates = derived_rates(cfg.params);
    out.prediction = predict_cooling(cfg.params, cfg.amplitude);
    if (cfg.params.gamma_m > 0.0) out.crossover = predict_entanglement_crossover(cfg.params);
    out.tier = effective_tier(cfg, Command::Rates);
    try {
        out.stability = stability(build_model(out.tier, cfg.params));
    } catch (const Error& e) {
        out.stability_error = e.what();
    }
    return out;
}

std::optional<Extremum> sweep_min(const SweepResult& sweep, const std::string& column) {
    return sweep_extremum(sweep, column, [](double a, double b) { return a < b; });
}

std::optional<Extremum> sweep_max(const SweepResult& sweep, const std::string& column) {
    return sweep_extremum(sweep, column, [](double a, double b) { return a > b; });
}

}  // namespace eitmech::app
