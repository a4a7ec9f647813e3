#pragma once

#include "eitmech/model.hpp"

// Reference operating points: Rb-like ensemble in a 1 MHz cavity with a
// 200 kHz membrane mode.
namespace eitmech::presets {

inline constexpr double cooling_amplitude = 1e3;  // |<a>| for the cooling point
inline constexpr double mapping_amplitude = 250.0;

// Anti-Stokes EIT cooling: delta = Delta_c = omega_m.
inline SystemParams cooling() {
    SystemParams p;
    p.omega_m = angular(200e3);
    p.gamma_m = damping_from_quality_factor(p.omega_m, 1e7);
    p.n_i = 1e5;
    p.kappa = angular(1e6);
    p.delta_c = p.omega_m;
    p.G = angular(200e3);
    p.G0 = angular(200.0);
    p.g = angular(100e3);
    p.N = 100'000'000;
    p.gamma = angular(3e6);
    p.gamma_c = angular(1e3);
    p.Omega = angular(300e6);
    p.delta = p.omega_m;
    return p;
}

// Strong-coupling state transfer.
inline SystemParams mapping() {
    SystemParams p = cooling();
    p.Omega = angular(100e6);
    p.G = angular(500e3);
    p.G0 = angular(2e3);
    return p;
}

// Stokes-side entanglement with a far-detuned cavity.
inline SystemParams entanglement() {
    SystemParams p = cooling();
    p.N = 10'000;
    p.Omega = angular(1.2e6);
    p.delta_c = -12.0 * p.kappa;
    p.G = angular(1e6);
    p.delta = -p.omega_m;
    return p;
}

}  // namespace eitmech::presets
