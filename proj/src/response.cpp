#include "eitmech/response.hpp"

#include <algorithm>
#include <cmath>

#include "eitmech/errors.hpp"
#include "eitmech/grid.hpp"

namespace eitmech {

std::vector<double> Spectrum::power() const {
    std::vector<double> out(values.size());
    std::transform(values.begin(), values.end(), out.begin(),
                   [](complex v) { return std::norm(v); });
    return out;
}

complex chi_eit(double omega, const SystemParams& p) {
    const double gN = p.collective_coupling();
    if (gN == 0.0) return {0.0, 0.0};

    const complex ground{p.gamma_c, p.delta - omega};
    complex den{p.gamma, p.one_photon_detuning() - omega};
    if (p.Omega > 0.0) {
        // Dark-state resonance: the control term diverges and the medium is transparent.
        if (ground == complex{0.0, 0.0}) return {0.0, 0.0};
        den += p.Omega * p.Omega / ground;
    }
    if (den == complex{0.0, 0.0}) {
        fail(ErrorKind::SingularPoint, "chi_eit: exact pole of the susceptibility");
    }
    return complex{0.0, gN * gN} / den;
}

complex cavity_response(double omega, const SystemParams& p) {
    const complex den = complex{p.kappa, p.delta_c - omega} - complex{0.0, 1.0} * chi_eit(omega, p);
    return p.kappa / den;
}

Spectrum sample_response(const SystemParams& p, std::span<const double> frequencies) {
    if (!std::is_sorted(frequencies.begin(), frequencies.end()) ||
        std::adjacent_find(frequencies.begin(), frequencies.end()) != frequencies.end()) {
        fail(ErrorKind::InvalidParameter, "spectrum frequencies must be strictly increasing");
    }
    Spectrum s;
    s.frequencies.assign(frequencies.begin(), frequencies.end());
    s.values.resize(frequencies.size());
    std::transform(frequencies.begin(), frequencies.end(), s.values.begin(),
                   [&p](double w) { return cavity_response(w, p); });
    return s;
}

double extract_halfwidth(const Spectrum& spectrum) {
    const auto& f = spectrum.frequencies;
    if (f.size() != spectrum.values.size() || f.size() < 3) {
        fail(ErrorKind::ExtractionFailure, "spectrum too short or inconsistent");
    }
    const std::vector<double> power = spectrum.power();
    const auto peak_it = std::max_element(power.begin(), power.end());
    const std::size_t peak = static_cast<std::size_t>(peak_it - power.begin());
    if (peak == 0 || peak + 1 == power.size()) {
        fail(ErrorKind::ExtractionFailure, "maximum at spectrum endpoint");
    }
    const double half = 0.5 * power[peak];

    auto crossing = [&](std::size_t inside, std::size_t outside) {
        const double t = (power[inside] - half) / (power[inside] - power[outside]);
        return f[inside] + t * (f[outside] - f[inside]);
    };

    std::size_t i = peak;
    while (i > 0 && power[i - 1] > half) --i;
    if (i == 0) fail(ErrorKind::ExtractionFailure, "half maximum not crossed below the peak");
    const double left = crossing(i, i - 1);

    std::size_t j = peak;
    while (j + 1 < power.size() && power[j + 1] > half) ++j;
    if (j + 1 == power.size()) {
        fail(ErrorKind::ExtractionFailure, "half maximum not crossed above the peak");
    }
    const double right = crossing(j, j + 1);
    return 0.5 * (right - left);
}

std::vector<double> default_spectrum_grid(const SystemParams& p) {
    return linspace(p.delta - 5.0 * p.kappa, p.delta + 5.0 * p.kappa, 2001);
}

}  // namespace eitmech
