#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace eitmech {

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 2.0 * pi;

// Converts a cyclic frequency (Hz) into the angular units used everywhere
// inside the library.
constexpr double angular(double hz) noexcept { return two_pi * hz; }
constexpr double cyclic(double rad_per_s) noexcept { return rad_per_s / two_pi; }

// Physical parameters of the atoms + cavity + mirror system. All rates and
// detunings are angular (rad/s).
struct SystemParams {
    double omega_m = 0.0;   // mechanical resonance
    double gamma_m = 0.0;   // mechanical amplitude damping (energy decay 2*gamma_m)
    double n_i = 0.0;       // thermal occupancy of the mechanical bath
    double kappa = 0.0;     // cavity field decay (halfwidth)
    double delta_c = 0.0;   // effective cavity detuning
    double G = 0.0;         // linearized optomechanical coupling G0*<a>, <a> real
    double G0 = 0.0;        // single-photon optomechanical coupling
    double g = 0.0;         // single-atom cavity coupling
    std::int64_t N = 1;     // number of atoms
    double gamma = 0.0;     // optical dipole decay (3-1)
    double gamma_c = 0.0;   // ground-state coherence decay
    double Omega = 0.0;     // control Rabi frequency
    double delta = 0.0;     // two-photon detuning
    // One-photon detuning. Unset means the control field is resonant, so the
    // one-photon detuning follows the two-photon detuning.
    std::optional<double> Delta;

    double collective_coupling() const noexcept;
    double one_photon_detuning() const noexcept { return Delta.value_or(delta); }

    // Throws Error{InvalidParameter} naming the first violated invariant.
    void validate() const;
};

double damping_from_quality_factor(double omega_m, double quality_factor);

struct DerivedRates {
    double C = 0.0;          // cooperativity gN^2/(kappa gamma)
    double Gamma_O = 0.0;    // optical cooling rate G^2/kappa
    double Gamma_E = 0.0;    // excited-ground decay rate Omega^2/gamma
    double gamma_O = 0.0;    // Gamma_O/(1+C)
    double gamma_E = 0.0;    // Gamma_E/(1+C)
    double kappa_eit = 0.0;  // EIT-narrowed cavity halfwidth
    double g_eff = 0.0;      // sqrt(C gamma_E gamma_O)
    double g_far = 0.0;      // far-detuned atom-mirror coupling
};

DerivedRates derived_rates(const SystemParams& params);

enum class RegimeCondition {
    WeakProbe,
    WeakProbeMargin,
    StrongCoupling,
    StrongCouplingMargin,
    EitSharpness,
    SidebandResolution,
};

struct RegimeWarning {
    RegimeCondition condition;
    std::string name;
    std::string message;
};

// Checks the working assumptions of the model. Violations are reported, never
// thrown; an empty list means every condition holds.
std::vector<RegimeWarning> validate_regime(const SystemParams& params,
                                           double intracavity_amplitude);

bool has_warning(const std::vector<RegimeWarning>& warnings, RegimeCondition condition);

// Bose-Einstein occupancy 1/(exp(hbar omega / kB T) - 1).
double thermal_occupancy(double temperature_kelvin, double omega);

}  // namespace eitmech
