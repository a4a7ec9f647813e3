#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eitmech/errors.hpp"
#include "eitmech/grid.hpp"
#include "eitmech/linsys.hpp"
#include "eitmech/model.hpp"

namespace eitmech::app {

enum class Command { Spectrum, Cool, Map, Entangle, Rates };

std::string_view to_string(Command command) noexcept;
Command parse_command(std::string_view text);

// How sweep values written in a config map onto angular parameters.
enum class SweepUnit {
    OmegaM,   // multiples of omega_m
    Hz,       // cyclic frequency, multiplied by 2 pi
    Angular,  // rad/s as written
    None,     // dimensionless (n_i)
};

std::string_view to_string(SweepUnit unit) noexcept;

struct SweepSpec {
    std::string parameter;
    double min = 0.0;
    double max = 0.0;
    std::size_t count = 0;
    GridScale scale = GridScale::Linear;
    SweepUnit unit = SweepUnit::Hz;

    std::vector<double> values() const;  // in config units
};

// Built-in grids; throws Error{InvalidConfig} for combinations without one.
SweepSpec default_sweep(Command command, std::string_view parameter);

// Angular (or dimensionless) value of a sweep coordinate for the given base.
double sweep_to_internal(const SweepSpec& sweep, double value, const SystemParams& base);
// Returns params with the swept field set.
SystemParams apply_sweep(const SystemParams& base, const SweepSpec& sweep, double value);

struct BareSettings {
    std::optional<bool> enabled;      // unset: on for full-model G sweeps
    std::optional<double> delta_c;    // unset: kappa/2
};

struct MappingSettings {
    double squeeze = 1.0;
    double angle = 0.0;
    double thermal = 2.0;
    double t_final = 1.0;             // in units of pi/g_eff
    std::size_t steps = 2000;         // must be even
    std::size_t wigner_points = 101;
    double wigner_sigmas = 6.0;
    bool full_crosscheck = false;
    std::size_t full_steps = 20000;
};

struct SpectrumSettings {
    double span = 5.0;                // half width of the grid in units of kappa
    std::size_t points = 2001;
    std::optional<double> center;     // unset: delta
};

struct ExperimentConfig {
    std::optional<Command> command;
    ModelTier tier = ModelTier::Full;
    bool tier_set = false;
    std::string label;
    double amplitude = 0.0;           // |<a>| for the weak-probe check
    SystemParams params;
    std::optional<double> temperature;  // kelvin, if n_i came from it
    std::optional<SweepSpec> sweep;
    BareSettings bare;
    MappingSettings mapping;
    SpectrumSettings spectrum;
    std::string output_dir;
    std::string output_prefix;
    std::size_t workers = 0;          // 0: hardware concurrency
};

// Parse errors carry a "<origin>:<line>: key 'k': ..." prefix and
// ErrorKind::InvalidConfig.
ExperimentConfig parse_config(std::string_view text, std::string_view origin = "config");
ExperimentConfig load_config(const std::string& path);

// A run header written by render_header can be fed back to parse_config
// unchanged: the CSV body after the header is ignored.
inline constexpr std::string_view header_begin = "# eitmech run header";
inline constexpr std::string_view header_end = "# end-header";

// Canonical config text with every parameter resolved in angular units and
// printed with round-trip precision.
std::string render_config(const ExperimentConfig& config);

}  // namespace eitmech::app
