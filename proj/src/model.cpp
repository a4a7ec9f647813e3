#include "eitmech/model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "eitmech/errors.hpp"

namespace eitmech {

namespace {

constexpr double hbar = 1.054571817e-34;     // J s
constexpr double k_boltzmann = 1.380649e-23;  // J/K

void require(bool ok, const char* what) {
    if (!ok) fail(ErrorKind::InvalidParameter, what);
}

std::string ratio_text(double value) {
    std::ostringstream os;
    os.precision(3);
    os << value;
    return os.str();
}

}  // namespace

double SystemParams::collective_coupling() const noexcept {
    return g * std::sqrt(static_cast<double>(N));
}

void SystemParams::validate() const {
    const double all[] = {omega_m, gamma_m, n_i, kappa, delta_c, G, G0,
                          g, gamma, gamma_c, Omega, delta};
    require(std::all_of(std::begin(all), std::end(all),
                        [](double v) { return std::isfinite(v); }),
            "parameters must be finite");
    require(!Delta || std::isfinite(*Delta), "Delta must be finite");
    require(omega_m >= 0.0, "omega_m must be >= 0");
    require(kappa >= 0.0, "kappa must be >= 0");
    require(gamma >= 0.0, "gamma must be >= 0");
    require(G >= 0.0, "G must be >= 0");
    require(G0 >= 0.0, "G0 must be >= 0");
    require(Omega >= 0.0, "Omega must be >= 0");
    require(g >= 0.0, "g must be >= 0");
    require(gamma_m >= 0.0, "gamma_m must be >= 0");
    require(gamma_c >= 0.0, "gamma_c must be >= 0");
    require(n_i >= 0.0, "n_i must be >= 0");
    require(N >= 1, "N must be >= 1");
}

double damping_from_quality_factor(double omega_m, double quality_factor) {
    require(quality_factor > 0.0 && std::isfinite(quality_factor),
            "quality factor must be positive");
    return omega_m / quality_factor;
}

DerivedRates derived_rates(const SystemParams& p) {
    p.validate();
    require(p.kappa > 0.0, "kappa must be > 0 for derived rates");
    require(p.gamma > 0.0, "gamma must be > 0 for derived rates");

    const double gN = p.collective_coupling();
    const double gN2 = gN * gN;

    DerivedRates r;
    r.C = gN2 / (p.kappa * p.gamma);
    r.Gamma_O = p.G * p.G / p.kappa;
    r.Gamma_E = p.Omega * p.Omega / p.gamma;
    r.gamma_O = r.Gamma_O / (1.0 + r.C);
    r.gamma_E = r.Gamma_E / (1.0 + r.C);
    // Without atoms there is no transparency window; the response falls back
    // to the bare cavity line.
    r.kappa_eit = gN2 > 0.0 ? p.gamma_c + p.kappa * p.Omega * p.Omega / gN2
                            : p.gamma_c + p.kappa;
    r.g_eff = std::sqrt(r.C * r.gamma_E * r.gamma_O);

    const double far_den = std::sqrt(gN2 * gN2 + p.gamma * p.gamma * p.delta_c * p.delta_c);
    r.g_far = far_den > 0.0 ? p.Omega * gN * p.G / far_den : 0.0;
    return r;
}

std::vector<RegimeWarning> validate_regime(const SystemParams& p, double intracavity_amplitude) {
    std::vector<RegimeWarning> out;
    auto warn = [&out](RegimeCondition c, std::string name, std::string msg) {
        out.push_back({c, std::move(name), std::move(msg)});
    };

    const double gN = p.collective_coupling();
    const double probe = p.g * std::abs(intracavity_amplitude);
    if (probe >= p.Omega) {
        warn(RegimeCondition::WeakProbe, "weak-probe",
             "g|<a>| >= Omega: bosonized atomic modes not justified");
    } else if (probe >= 0.1 * p.Omega) {
        warn(RegimeCondition::WeakProbeMargin, "weak-probe-margin",
             "g|<a>|/Omega = " + ratio_text(probe / p.Omega) + " (less than 10x margin)");
    }

    // kappa/gN < G/Omega < gN/gamma
    if (gN > 0.0 && p.Omega > 0.0 && p.gamma > 0.0) {
        const double lower = p.kappa / gN;
        const double middle = p.G / p.Omega;
        const double upper = gN / p.gamma;
        if (!(lower < middle && middle < upper)) {
            warn(RegimeCondition::StrongCoupling, "strong-coupling",
                 "kappa/gN < G/Omega < gN/gamma violated: " + ratio_text(lower) + ", " +
                     ratio_text(middle) + ", " + ratio_text(upper));
        } else if (middle < 10.0 * lower || upper < 10.0 * middle) {
            warn(RegimeCondition::StrongCouplingMargin, "strong-coupling-margin",
                 "strong-coupling window holds with less than 10x margin: " +
                     ratio_text(lower) + ", " + ratio_text(middle) + ", " + ratio_text(upper));
        }
    } else {
        warn(RegimeCondition::StrongCoupling, "strong-coupling",
             "strong-coupling window undefined (gN, Omega or gamma is zero)");
    }

    const bool sharp = p.gamma_c < p.kappa && gN > p.Omega && p.Omega >= 10.0 * p.gamma_c &&
                       p.Omega > 0.0 && p.Omega * p.Omega >= 10.0 * p.gamma_c * p.gamma;
    if (!sharp) {
        warn(RegimeCondition::EitSharpness, "eit-sharpness",
             "EIT window not sharp: need gamma_c < kappa, gN > Omega, Omega >> gamma_c, "
             "Omega^2 >> gamma_c*gamma");
    }

    if (p.kappa > 0.0 && p.gamma > 0.0) {
        const double kappa_eit = derived_rates(p).kappa_eit;
        if (!(kappa_eit < p.omega_m)) {
            warn(RegimeCondition::SidebandResolution, "sideband-resolution",
                 "kappa_EIT/omega_m = " + ratio_text(kappa_eit / p.omega_m) + " >= 1");
        }
    } else {
        warn(RegimeCondition::SidebandResolution, "sideband-resolution",
             "kappa_EIT undefined (kappa or gamma is zero)");
    }
    return out;
}

bool has_warning(const std::vector<RegimeWarning>& warnings, RegimeCondition condition) {
    return std::any_of(warnings.begin(), warnings.end(),
                       [condition](const RegimeWarning& w) { return w.condition == condition; });
}

double thermal_occupancy(double temperature_kelvin, double omega) {
    require(temperature_kelvin > 0.0, "temperature must be > 0");
    require(omega > 0.0, "omega must be > 0");
    const double x = hbar * omega / (k_boltzmann * temperature_kelvin);
    return 1.0 / std::expm1(x);
}

}  // namespace eitmech
