#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eitmech/analytics.hpp"
#include "eitmech/app/config.hpp"
#include "eitmech/app/sweep.hpp"
#include "eitmech/linsys.hpp"
#include "eitmech/metrics.hpp"
#include "eitmech/model.hpp"

namespace eitmech::app {

// Tier actually used for a command: the configured one if given, otherwise
// rwa-anti-stokes for `map` and full for everything else. Throws
// Error{InvalidConfig} for tiers a command does not support.
ModelTier effective_tier(const ExperimentConfig& config, Command command);

// Sweep actually used: the configured one or the built-in default for the
// command (a delta sweep for cool and entangle).
SweepSpec effective_sweep(const ExperimentConfig& config, Command command);

// Conventions written into every run header and JSON summary.
std::vector<std::pair<std::string, std::string>> run_conventions(const ExperimentConfig& config,
                                                                 Command command);

struct SpectrumResult {
    std::vector<double> frequencies;  // probe offset, rad/s
    std::vector<std::complex<double>> eit;
    std::vector<std::complex<double>> bare;  // same parameters with gN = 0
    std::optional<double> halfwidth_eit;
    std::optional<double> halfwidth_bare;
    std::string halfwidth_eit_error;
    std::string halfwidth_bare_error;
    double peak_eit = 0.0;          // frequency of max |response|^2
    double kappa_eit = 0.0;         // closed form
    std::array<double, 2> sideband_markers{};  // -omega_m, +omega_m
};

SpectrumResult run_spectrum(const ExperimentConfig& config);

struct CoolingResult {
    ModelTier tier = ModelTier::Full;
    SweepResult sweep;
    std::optional<SweepResult> bare;  // paired atom-free run on the same grid
    double bare_delta_c = 0.0;
};

// Steady-state mirror occupancy over the sweep. Unstable or failing points
// become flagged rows and the run continues.
CoolingResult run_cooling_sweep(const ExperimentConfig& config, std::size_t workers = 0);

struct MappingSnapshot {
    std::string tag;  // t0, half, full
    double time = 0.0;
    WignerGrid atom;
    WignerGrid mirror;
};

struct MappingCrosscheck {
    std::vector<double> times;
    std::vector<double> n_mirror_full;
    std::vector<double> n_mirror_reduced;
    std::vector<double> n_atom_full;
    std::vector<double> n_atom_reduced;
};

struct MappingResult {
    DerivedRates rates;
    std::array<double, 3> ratios{};  // g_eff/(gamma_m n_i), g_eff/gamma_O, g_eff/gamma_E
    double swap_time = 0.0;          // pi/g_eff
    double half_time = 0.0;          // pi/(2 g_eff)
    double t_final = 0.0;
    std::vector<double> times;
    std::vector<double> n_atom;
    std::vector<double> n_mirror;
    std::vector<double> fidelity_mirror;  // F(mirror(t), atom(0))
    std::vector<double> fidelity_atom;    // F(atom(t), mirror(0))
    // max over a phase rotation of the initial atomic state; the beamsplitter
    // coupling hands the state over rotated, so this isolates decoherence.
    std::vector<double> fidelity_mirror_rotated;
    std::vector<double> min_variance_mirror;
    std::vector<double> min_variance_atom;
    std::vector<MappingSnapshot> snapshots;
    double min_uncertainty_margin = 0.0;  // over the whole trajectory
    std::optional<MappingCrosscheck> full;
};

MappingResult run_mapping(const ExperimentConfig& config);

struct EntanglementResult {
    ModelTier tier = ModelTier::Full;
    SweepResult sweep;
    std::optional<double> first_zero;         // first swept value with E_N = 0
    std::optional<double> first_unstable;     // first swept value flagged unstable
    std::optional<double> threshold;          // bisected G*, rad/s (G sweeps only)
    std::optional<bool> increasing_until_unstable;  // G sweeps only
    double g_far = 0.0;
    std::optional<double> crossover;          // g_far/gamma_m
};

EntanglementResult run_entanglement_sweep(const ExperimentConfig& config, std::size_t workers = 0);

struct RatesReport {
    SystemParams params;
    DerivedRates rates;
    CoolingPrediction prediction;
    std::optional<double> crossover;
    ModelTier tier = ModelTier::Full;
    std::optional<Stability> stability;
    std::string stability_error;
};

RatesReport print_rates(const ExperimentConfig& config);

struct Extremum {
    std::size_t index = 0;
    double value = 0.0;     // swept coordinate
    double observed = 0.0;  // observable there
};

// Over rows with status ok and a value in the column; empty if none.
std::optional<Extremum> sweep_min(const SweepResult& sweep, const std::string& column);
std::optional<Extremum> sweep_max(const SweepResult& sweep, const std::string& column);

}  // namespace eitmech::app
