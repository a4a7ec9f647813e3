#include <doctest.h>

#include "check.hpp"
#include "eitmech/app/experiments.hpp"
#include "eitmech/app/output.hpp"
#include "eitmech/errors.hpp"
#include "eitmech/presets.hpp"
#include "frozen_values.hpp"

using namespace eitmech;
using namespace eitmech::app;
using check::rel_err;

namespace {

ExperimentConfig preset(const SystemParams& p, Command c) {
    ExperimentConfig cfg;
    cfg.params = p;
    cfg.command = c;
    cfg.workers = 2;
    return cfg;
}

}  // namespace

TEST_CASE("tiers per command") {
    ExperimentConfig cfg = preset(presets::cooling(), Command::Cool);
    CHECK(effective_tier(cfg, Command::Cool) == ModelTier::Full);
    CHECK(effective_tier(cfg, Command::Map) == ModelTier::RwaAntiStokes);
    cfg.tier = ModelTier::RwaStokes;
    cfg.tier_set = true;
    CHECK_THROWS_AS(effective_tier(cfg, Command::Cool), Error);
    CHECK(effective_tier(cfg, Command::Entangle) == ModelTier::RwaStokes);
    cfg.tier = ModelTier::Full;
    CHECK_THROWS_AS(effective_tier(cfg, Command::Map), Error);
}

TEST_CASE("cooling sweep flags unstable points and keeps going") {
    ExperimentConfig cfg = preset(presets::cooling(), Command::Cool);
    cfg.sweep = SweepSpec{"G", 100e3, 400e3, 4, GridScale::Linear, SweepUnit::Hz};
    const CoolingResult r = run_cooling_sweep(cfg);
    REQUIRE(r.sweep.rows.size() == 4);
    CHECK(r.sweep.rows[0].status == "ok");
    CHECK(rel_err(*r.sweep.at(0, "n_f"), frozen::nf_full_G100k) < 1e-8);
    CHECK(rel_err(*r.sweep.at(1, "n_f"), frozen::nf_full_cooling) < 1e-8);
    CHECK(r.sweep.rows[3].status == "unstable");
    CHECK_FALSE(r.sweep.at(3, "n_f").has_value());
    CHECK(*r.sweep.at(3, "spectral_abscissa") > 0.0);
    CHECK(r.sweep.at(1, "kappa_eit_extracted").has_value());

    // a G sweep on the full model brings its atom-free partner at kappa/2
    REQUIRE(r.bare.has_value());
    CHECK(r.bare_delta_c == doctest::Approx(0.5 * cfg.params.kappa));
    CHECK(rel_err(*r.bare->at(1, "n_f"), frozen::nf_bare_G200k) < 1e-8);
}

TEST_CASE("default cooling sweep matches the reference grid") {
    const CoolingResult r = run_cooling_sweep(preset(presets::cooling(), Command::Cool));
    CHECK(r.sweep.rows.size() == 200);
    CHECK_FALSE(r.bare.has_value());
    const auto m = sweep_min(r.sweep, "n_f");
    REQUIRE(m.has_value());
    CHECK(static_cast<int>(m->index) == frozen::cool_sweep_argmin_index);
    CHECK(rel_err(m->observed, frozen::cool_sweep_min) < 1e-8);
}

TEST_CASE("entanglement sweep locates the maximum and the instability") {
    const EntanglementResult r = run_entanglement_sweep(preset(presets::entanglement(), Command::Entangle));
    const auto m = sweep_max(r.sweep, "E_N");
    REQUIRE(m.has_value());
    CHECK(static_cast<int>(m->index) == frozen::ent_sweep_argmax_index);
    CHECK(rel_err(m->observed, frozen::ent_sweep_max) < 1e-7);
    REQUIRE(r.first_unstable.has_value());
    CHECK(*r.first_unstable == doctest::Approx(frozen::ent_sweep_first_unstable));
    CHECK_FALSE(r.threshold.has_value());
    CHECK(rel_err(*r.crossover, frozen::entanglement_g_far / presets::entanglement().gamma_m) < 1e-12);
}

TEST_CASE("entanglement G sweep reports the threshold") {
    ExperimentConfig cfg = preset(presets::entanglement(), Command::Entangle);
    cfg.sweep = SweepSpec{"G", 10e3, 3e6, 40, GridScale::Log, SweepUnit::Hz};
    const EntanglementResult r = run_entanglement_sweep(cfg);
    REQUIRE(r.threshold.has_value());
    CHECK(cyclic(*r.threshold) == doctest::Approx(577e3).epsilon(0.01));
    REQUIRE(r.increasing_until_unstable.has_value());
    CHECK(*r.increasing_until_unstable);
}

TEST_CASE("mapping run") {
    ExperimentConfig cfg = preset(presets::mapping(), Command::Map);
    cfg.mapping.steps = 200;
    cfg.mapping.wigner_points = 21;
    const MappingResult r = run_mapping(cfg);
    CHECK(r.ratios[0] == doctest::Approx(25.0).epsilon(1e-3));
    CHECK(r.ratios[1] == doctest::Approx(66666.7).epsilon(1e-3));
    CHECK(r.ratios[2] == doctest::Approx(5.0).epsilon(1e-3));
    CHECK(r.times.size() == 201);
    CHECK(r.snapshots.size() == 3);
    CHECK(rel_err(r.fidelity_mirror.back(), frozen::map_full_fidelity) < 1e-7);
    CHECK(rel_err(r.min_variance_mirror[100], frozen::map_half_min_variance) < 1e-7);
    CHECK(r.fidelity_mirror_rotated[100] >= r.fidelity_mirror[100]);
    CHECK(r.min_uncertainty_margin > -1e-9);
    CHECK_FALSE(r.full.has_value());
}

TEST_CASE("spectrum run") {
    ExperimentConfig cfg = preset(presets::cooling(), Command::Spectrum);
    const SpectrumResult r = run_spectrum(cfg);
    REQUIRE(r.halfwidth_eit.has_value());
    CHECK(rel_err(*r.halfwidth_eit, frozen::halfwidth_cooling) < 1e-9);
    REQUIRE(r.halfwidth_bare.has_value());
    CHECK(*r.halfwidth_bare == doctest::Approx(cfg.params.kappa).epsilon(1e-3));
    CHECK(r.sideband_markers[1] == cfg.params.omega_m);
}

TEST_CASE("rates report") {
    const RatesReport r = print_rates(preset(presets::cooling(), Command::Rates));
    CHECK(rel_err(r.rates.g_eff, frozen::cooling_g_eff) < 1e-13);
    REQUIRE(r.stability.has_value());
    CHECK(r.stability->stable);
    const std::string text = format_rates(r);
    CHECK(text.find("kappa_EIT") != std::string::npos);
}

TEST_CASE("written outputs start with the run header") {
    check::TempDir dir("eitmech-out");
    ExperimentConfig cfg = preset(presets::cooling(), Command::Cool);
    cfg.sweep = SweepSpec{"G", 100e3, 200e3, 3, GridScale::Log, SweepUnit::Hz};
    const RunOutput o = write_cooling(cfg, run_cooling_sweep(cfg), dir.path());
    REQUIRE_FALSE(o.files.empty());
    const std::string csv = check::slurp(o.files.front());
    CHECK(csv.rfind(std::string(header_begin), 0) == 0);
    CHECK(csv.find(std::string(header_end)) != std::string::npos);
    CHECK(o.summary.contains("min_n_f"));
    // the header alone reproduces the config
    const ExperimentConfig back = parse_config(csv);
    CHECK(back.params.G == cfg.params.G);
    CHECK(back.sweep->values() == cfg.sweep->values());
}
