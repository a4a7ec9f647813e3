#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "eitmech/linsys.hpp"

namespace eitmech {

// Gaussian state of n modes: quadrature means and symmetric covariance
// V_ij = <{dxi_i, dxi_j}>/2 (vacuum = I/2).
struct GaussianState {
    std::vector<std::string> labels;
    Eigen::VectorXd mean;
    Eigen::MatrixXd covariance;

    std::size_t mode_count() const noexcept { return labels.size(); }
    std::size_t index_of(std::string_view label) const { return mode_index(labels, label); }

    Eigen::Matrix2d mode_covariance(std::string_view label) const;
    Eigen::Vector2d mode_mean(std::string_view label) const;
    // Two-mode reduced covariance [[A, C], [C^T, B]].
    Eigen::Matrix4d pair_covariance(std::string_view first, std::string_view second) const;
};

// Smallest eigenvalue of V + (i/2) Omega_s; >= 0 for physical states.
double uncertainty_margin(const Eigen::MatrixXd& covariance);
bool is_physical(const GaussianState& state, double tolerance = 1e-9);

enum class VectorizationOrder { ColumnMajor, RowMajor };

// Solves A V + V A^T + D = 0 through (I (x) A + A (x) I) vec(V) = -vec(D),
// with one step of iterative refinement.
Eigen::MatrixXd solve_lyapunov(const Eigen::MatrixXd& A, const Eigen::MatrixXd& D,
                               VectorizationOrder order = VectorizationOrder::ColumnMajor);

// Steady state of a stable model (zero mean). Throws Error{UnstableSystem}.
GaussianState steady_covariance(const LinearModel& model);

// ||A V + V A^T + D||_F / max(||D||_F, eps)
double lyapunov_residual(const LinearModel& model, const Eigen::MatrixXd& V);

// Exact one-step map for a fixed step dt:
//   mu -> F mu,  V -> F V F^T + Q,  F = e^{A dt},  Q = int_0^dt e^{As} D e^{A^T s} ds,
// with F and Q read off exp([[A, D], [0, -A^T]] dt).
class Propagator {
public:
    Propagator(const LinearModel& model, double dt);

    GaussianState step(const GaussianState& state) const;
    // Map for twice the step: F -> F^2, Q -> F Q F^T + Q. Repeated squaring
    // reaches long times without exponentiating a huge augmented matrix.
    Propagator squared() const;
    double dt() const noexcept { return dt_; }
    const Eigen::MatrixXd& transition() const noexcept { return F_; }
    const Eigen::MatrixXd& accumulated_noise() const noexcept { return Q_; }

private:
    Propagator(double dt, Eigen::MatrixXd F, Eigen::MatrixXd Q)
        : dt_(dt), F_(std::move(F)), Q_(std::move(Q)) {}

    double dt_;
    Eigen::MatrixXd F_;
    Eigen::MatrixXd Q_;
};

struct Trajectory {
    std::vector<double> times;
    std::vector<GaussianState> states;
};

// min(1/(50 max|Re lambda|), t_final/1000)
double default_time_step(const LinearModel& model, double t_final);

// Uniform steps from t = 0 to t_final inclusive. The step is shrunk so that
// t_final is hit exactly.
Trajectory propagate(const LinearModel& model, const GaussianState& initial, double t_final,
                     std::optional<double> dt = std::nullopt);

// Keeps at most max_samples evenly strided samples, always including both ends.
Trajectory decimate(const Trajectory& trajectory, std::size_t max_samples = 5000);

}  // namespace eitmech
