#pragma once

#include <complex>
#include <span>
#include <vector>

#include "eitmech/model.hpp"

namespace eitmech {

using complex = std::complex<double>;

// Probe-offset spectrum: frequencies strictly increasing, one value per point.
struct Spectrum {
    std::vector<double> frequencies;
    std::vector<complex> values;

    std::vector<double> power() const;  // |value|^2
};

// EIT susceptibility seen by a probe at offset omega from the carrier:
//   i gN^2 / (gamma + i(Delta - omega) + Omega^2 / (gamma_c + i(delta - omega)))
// Throws Error{SingularPoint} on an exact pole.
complex chi_eit(double omega, const SystemParams& params);

// Intracavity response kappa / (kappa + i(Delta_c - omega) - i chi_eit(omega)),
// equal to 1 for an empty resonant cavity at omega = 0.
complex cavity_response(double omega, const SystemParams& params);

Spectrum sample_response(const SystemParams& params, std::span<const double> frequencies);

// Half width at half maximum of |values|^2 around the global maximum, with
// linear interpolation of the crossings. Throws Error{ExtractionFailure}.
double extract_halfwidth(const Spectrum& spectrum);

// Default grid: [delta - 5 kappa, delta + 5 kappa], 2001 points.
std::vector<double> default_spectrum_grid(const SystemParams& params);

}  // namespace eitmech
