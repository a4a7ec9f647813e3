#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "eitmech/model.hpp"

namespace eitmech {

// Quadrature convention for every mode o:
//   x = (o + o^dag)/sqrt(2),  p = -i (o - o^dag)/sqrt(2),
// vacuum variance 1/2, vectors ordered (x1, p1, ..., xn, pn).

std::size_t mode_index(std::span<const std::string> labels, std::string_view label);

// White-noise input of one mode: <o_in(t) o_in^dag(t')> = anti_normal delta(t-t'),
// <o_in^dag(t) o_in(t')> = normal delta(t-t'). Inputs of different modes are
// uncorrelated.
struct NoiseInput {
    double anti_normal = 0.0;
    double normal = 0.0;

    static NoiseInput thermal(double rate, double occupancy) {
        return {2.0 * rate * (occupancy + 1.0), 2.0 * rate * occupancy};
    }
};

// Fluctuation equations in complex form: do/dt = M o + N o^dag + o_in.
struct ComplexModel {
    std::vector<std::string> labels;
    Eigen::MatrixXcd M;
    Eigen::MatrixXcd N;
    std::vector<NoiseInput> noise;
};

// dV/dt = A V + V A^T + D over quadratures. Immutable once built.
struct LinearModel {
    std::vector<std::string> labels;
    Eigen::MatrixXd A;
    Eigen::MatrixXd D;

    std::size_t mode_count() const noexcept { return labels.size(); }
    std::size_t index_of(std::string_view label) const { return mode_index(labels, label); }
};

enum class ModelTier { Full, RwaAntiStokes, RwaStokes, Bare };

std::string_view to_string(ModelTier tier) noexcept;
ModelTier parse_model_tier(std::string_view text);  // full | rwa-anti-stokes | rwa-stokes | bare

// Modes (c2, c3, a, b), linearized about a real positive <a>.
ComplexModel complex_full(const SystemParams& params);
// Modes (c2, b) after adiabatic elimination, anti-Stokes resonance (beamsplitter).
ComplexModel complex_rwa_anti_stokes(const SystemParams& params);
// Modes (c2, b), Stokes resonance (two-mode squeezing).
ComplexModel complex_rwa_stokes(const SystemParams& params);
// Modes (a, b) without atoms.
ComplexModel complex_bare(const SystemParams& params);

LinearModel to_quadratures(const ComplexModel& model);

// Quadrature vector (x1, p1, ...) of a complex amplitude vector.
Eigen::VectorXd quadrature_image(const Eigen::VectorXcd& amplitudes);

LinearModel build_full(const SystemParams& params);
LinearModel build_rwa_anti_stokes(const SystemParams& params);
LinearModel build_rwa_stokes(const SystemParams& params);
LinearModel build_bare(const SystemParams& params);
LinearModel build_model(ModelTier tier, const SystemParams& params);

struct Stability {
    double spectral_abscissa;  // max Re(eigenvalue of A)
    bool stable;               // spectral_abscissa < 0
};

Stability stability(const LinearModel& model);

using ModelBuilder = std::function<LinearModel(const SystemParams&)>;

// Bisects on G for the zero crossing of the spectral abscissa, to relative
// tolerance rel_tol. Requires a stable model at G_lo and an unstable one at
// G_hi, otherwise throws Error{NoThreshold}.
double instability_threshold(const SystemParams& params, const ModelBuilder& builder,
                             double G_lo, double G_hi, double rel_tol = 1e-4);

}  // namespace eitmech
