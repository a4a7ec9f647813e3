#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "eitmech/solver.hpp"

namespace eitmech {

// Mean excitation number (<x^2> + <p^2> - 1)/2 including the coherent part.
double occupancy(const GaussianState& state, std::string_view mode);

// Logarithmic negativity (natural log) between two modes, from the smallest
// symplectic eigenvalue of the partially transposed two-mode covariance.
// Throws Error{InvalidState} for unphysical input.
double log_negativity(const GaussianState& state, std::string_view first, std::string_view second);

struct ModeSpec {
    enum class Kind { Vacuum, Thermal, Squeezed };

    Kind kind = Kind::Vacuum;
    double occupancy = 0.0;  // thermal only
    double squeeze = 0.0;    // r; squeezed variance e^{-2r}/2 along angle theta
    double angle = 0.0;      // theta, rad; 0 squeezes x

    static ModeSpec vacuum() { return {}; }
    static ModeSpec thermal(double n) { return {Kind::Thermal, n, 0.0, 0.0}; }
    static ModeSpec squeezed(double r, double theta = 0.0) { return {Kind::Squeezed, 0.0, r, theta}; }
};

Eigen::Matrix2d mode_spec_covariance(const ModeSpec& spec);

// Zero-mean product state, one spec per label. Throws Error{InvalidParameter}.
GaussianState prepare_product_state(std::span<const std::string> labels,
                                    std::span<const ModeSpec> specs);

struct WignerGridSpec {
    double x_min = -5.0, x_max = 5.0;
    double p_min = -5.0, p_max = 5.0;
    std::size_t x_points = 101;
    std::size_t p_points = 101;

    // Square grid centred on the mode mean spanning +-sigmas standard
    // deviations of the widest direction.
    static WignerGridSpec around(const GaussianState& state, std::string_view mode,
                                 double sigmas = 6.0, std::size_t points = 101);
};

struct WignerGrid {
    std::vector<double> x_axis;
    std::vector<double> p_axis;
    Eigen::MatrixXd values;  // values(i, j) = W(x_axis[i], p_axis[j])

    double integrated_mass() const;  // trapezoidal rule
};

// W(xi) = exp(-(xi-mu)^T V^{-1} (xi-mu)/2) / (2 pi sqrt(det V)) for the reduced mode.
WignerGrid wigner(const GaussianState& state, std::string_view mode, const WignerGridSpec& grid);

// Closed-form single-mode Gaussian fidelity. Symmetric; equals 1 for identical states.
double gaussian_fidelity(const GaussianState& s1, const GaussianState& s2, std::string_view mode);
// Compares mode `first` of s1 with mode `second` of s2 (e.g. a mapped state).
double gaussian_fidelity(const GaussianState& s1, std::string_view first, const GaussianState& s2,
                         std::string_view second);
double gaussian_fidelity(const Eigen::Matrix2d& V1, const Eigen::Vector2d& mu1,
                         const Eigen::Matrix2d& V2, const Eigen::Vector2d& mu2);

struct RotatedFidelity {
    double fidelity = 0.0;
    double angle = 0.0;  // phase-space rotation applied to the second state, rad
};

// max over phi of F(state1, R(phi) state2): fidelity up to a local phase
// rotation, found by a 1440-point scan refined with golden-section search.
RotatedFidelity gaussian_fidelity_up_to_rotation(const Eigen::Matrix2d& V1, const Eigen::Vector2d& mu1,
                                                 const Eigen::Matrix2d& V2, const Eigen::Vector2d& mu2);

}  // namespace eitmech
