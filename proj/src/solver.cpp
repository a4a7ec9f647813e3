#include "eitmech/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <unsupported/Eigen/MatrixFunctions>

#include "eitmech/errors.hpp"

namespace eitmech {

namespace {

Eigen::MatrixXcd symplectic_form(Eigen::Index modes) {
    Eigen::MatrixXcd omega = Eigen::MatrixXcd::Zero(2 * modes, 2 * modes);
    for (Eigen::Index j = 0; j < modes; ++j) {
        omega(2 * j, 2 * j + 1) = 1.0;
        omega(2 * j + 1, 2 * j) = -1.0;
    }
    return omega;
}

void check_model(const LinearModel& model) {
    const auto dim = static_cast<Eigen::Index>(2 * model.mode_count());
    if (model.A.rows() != dim || model.A.cols() != dim || model.D.rows() != dim ||
        model.D.cols() != dim) {
        fail(ErrorKind::InvalidParameter, "model matrices inconsistent with mode labels");
    }
}

// Kronecker operator acting on vec(V) for the chosen vectorization.
Eigen::MatrixXd lyapunov_operator(const Eigen::MatrixXd& A, VectorizationOrder order) {
    const Eigen::Index n = A.rows();
    Eigen::MatrixXd K = Eigen::MatrixXd::Zero(n * n, n * n);
    auto idx = [n, order](Eigen::Index i, Eigen::Index j) {
        return order == VectorizationOrder::ColumnMajor ? i + j * n : j + i * n;
    };
    // (A V + V A^T)_{ij} = sum_k A_ik V_kj + V_ik A_jk
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            const Eigen::Index row = idx(i, j);
            for (Eigen::Index k = 0; k < n; ++k) {
                K(row, idx(k, j)) += A(i, k);
                K(row, idx(i, k)) += A(j, k);
            }
        }
    }
    return K;
}

Eigen::VectorXd vectorize(const Eigen::MatrixXd& M, VectorizationOrder order) {
    const Eigen::Index n = M.rows();
    Eigen::VectorXd v(n * n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            v(order == VectorizationOrder::ColumnMajor ? i + j * n : j + i * n) = M(i, j);
        }
    }
    return v;
}

Eigen::MatrixXd unvectorize(const Eigen::VectorXd& v, Eigen::Index n, VectorizationOrder order) {
    Eigen::MatrixXd M(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            M(i, j) = v(order == VectorizationOrder::ColumnMajor ? i + j * n : j + i * n);
        }
    }
    return M;
}

}  // namespace

Eigen::Matrix2d GaussianState::mode_covariance(std::string_view label) const {
    const auto j = static_cast<Eigen::Index>(2 * index_of(label));
    return covariance.block<2, 2>(j, j);
}

Eigen::Vector2d GaussianState::mode_mean(std::string_view label) const {
    const auto j = static_cast<Eigen::Index>(2 * index_of(label));
    return mean.segment<2>(j);
}

Eigen::Matrix4d GaussianState::pair_covariance(std::string_view first,
                                               std::string_view second) const {
    const auto a = static_cast<Eigen::Index>(2 * index_of(first));
    const auto b = static_cast<Eigen::Index>(2 * index_of(second));
    const Eigen::Index idx[4] = {a, a + 1, b, b + 1};
    Eigen::Matrix4d out;
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) out(r, c) = covariance(idx[r], idx[c]);
    }
    return out;
}

double uncertainty_margin(const Eigen::MatrixXd& covariance) {
    const Eigen::Index modes = covariance.rows() / 2;
    const Eigen::MatrixXcd H =
        covariance.cast<std::complex<double>>() +
        std::complex<double>(0.0, 0.5) * symplectic_form(modes);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(H, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        fail(ErrorKind::NumericFailure, "eigenvalue computation failed");
    }
    return solver.eigenvalues().minCoeff();
}

bool is_physical(const GaussianState& state, double tolerance) {
    const Eigen::MatrixXd& V = state.covariance;
    if (!V.allFinite()) return false;
    const double scale = std::max(1.0, V.cwiseAbs().maxCoeff());
    if ((V - V.transpose()).cwiseAbs().maxCoeff() > tolerance * scale) return false;
    return uncertainty_margin(V) >= -tolerance * scale;
}

Eigen::MatrixXd solve_lyapunov(const Eigen::MatrixXd& A, const Eigen::MatrixXd& D,
                               VectorizationOrder order) {
    const Eigen::Index n = A.rows();
    const Eigen::MatrixXd K = lyapunov_operator(A, order);
    const Eigen::VectorXd rhs = -vectorize(D, order);
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(K);
    Eigen::VectorXd v = lu.solve(rhs);
    v += lu.solve(rhs - K * v);
    if (!v.allFinite()) fail(ErrorKind::NumericFailure, "Lyapunov solve produced non-finite values");
    Eigen::MatrixXd V = unvectorize(v, n, order);
    return 0.5 * (V + V.transpose());
}

GaussianState steady_covariance(const LinearModel& model) {
    check_model(model);
    const Stability s = stability(model);
    if (!s.stable) {
        fail(ErrorKind::UnstableSystem,
             "model is unstable (spectral abscissa " + std::to_string(s.spectral_abscissa) + ")");
    }
    GaussianState state;
    state.labels = model.labels;
    state.mean = Eigen::VectorXd::Zero(model.A.rows());
    state.covariance = solve_lyapunov(model.A, model.D);
    return state;
}

double lyapunov_residual(const LinearModel& model, const Eigen::MatrixXd& V) {
    if (V.rows() != model.A.rows() || V.cols() != model.A.cols()) {
        fail(ErrorKind::InvalidParameter, "covariance dimension does not match the model");
    }
    const Eigen::MatrixXd R = model.A * V + V * model.A.transpose() + model.D;
    return R.norm() / std::max(model.D.norm(), std::numeric_limits<double>::epsilon());
}

Propagator::Propagator(const LinearModel& model, double dt) : dt_(dt) {
    check_model(model);
    if (!(dt > 0.0) || !std::isfinite(dt)) fail(ErrorKind::InvalidParameter, "dt must be > 0");
    const Eigen::Index n = model.A.rows();
    Eigen::MatrixXd block = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    block.topLeftCorner(n, n) = model.A * dt;
    block.topRightCorner(n, n) = model.D * dt;
    block.bottomRightCorner(n, n) = -model.A.transpose() * dt;
    const Eigen::MatrixXd E = block.exp();
    if (!E.allFinite()) fail(ErrorKind::NumericFailure, "matrix exponential overflowed");
    F_ = E.topLeftCorner(n, n);
    const Eigen::MatrixXd Q = E.topRightCorner(n, n) * F_.transpose();
    Q_ = 0.5 * (Q + Q.transpose());
}

GaussianState Propagator::step(const GaussianState& state) const {
    GaussianState next;
    next.labels = state.labels;
    next.mean = F_ * state.mean;
    Eigen::MatrixXd V = F_ * state.covariance * F_.transpose() + Q_;
    next.covariance = 0.5 * (V + V.transpose());
    return next;
}

Propagator Propagator::squared() const {
    Eigen::MatrixXd Q = F_ * Q_ * F_.transpose() + Q_;
    return Propagator(2.0 * dt_, F_ * F_, 0.5 * (Q + Q.transpose()));
}

double default_time_step(const LinearModel& model, double t_final) {
    Eigen::EigenSolver<Eigen::MatrixXd> solver(model.A, false);
    if (solver.info() != Eigen::Success) fail(ErrorKind::NumericFailure, "eigenvalue computation failed");
    const double fastest = solver.eigenvalues().real().cwiseAbs().maxCoeff();
    const double coarse = t_final / 1000.0;
    return fastest > 0.0 ? std::min(1.0 / (50.0 * fastest), coarse) : coarse;
}

Trajectory propagate(const LinearModel& model, const GaussianState& initial, double t_final,
                     std::optional<double> dt) {
    check_model(model);
    if (initial.labels != model.labels) {
        fail(ErrorKind::InvalidParameter, "initial state modes do not match the model");
    }
    if (!(t_final >= 0.0) || !std::isfinite(t_final)) {
        fail(ErrorKind::InvalidParameter, "t_final must be >= 0");
    }
    if (!is_physical(initial)) fail(ErrorKind::InvalidState, "initial state violates the uncertainty relation");

    Trajectory out;
    out.times.push_back(0.0);
    out.states.push_back(initial);
    if (t_final == 0.0) return out;

    const double requested = dt.value_or(default_time_step(model, t_final));
    if (!(requested > 0.0)) fail(ErrorKind::InvalidParameter, "dt must be > 0");
    const auto steps = static_cast<std::size_t>(std::max(1.0, std::ceil(t_final / requested - 1e-9)));
    const double h = t_final / static_cast<double>(steps);
    const Propagator prop(model, h);

    out.times.reserve(steps + 1);
    out.states.reserve(steps + 1);
    for (std::size_t k = 1; k <= steps; ++k) {
        out.states.push_back(prop.step(out.states.back()));
        out.times.push_back(k == steps ? t_final : h * static_cast<double>(k));
    }
    return out;
}

Trajectory decimate(const Trajectory& trajectory, std::size_t max_samples) {
    const std::size_t n = trajectory.times.size();
    if (max_samples < 2 || n <= max_samples) return trajectory;
    Trajectory out;
    const std::size_t stride = (n - 1 + max_samples - 2) / (max_samples - 1);
    for (std::size_t i = 0; i < n; i += stride) {
        out.times.push_back(trajectory.times[i]);
        out.states.push_back(trajectory.states[i]);
    }
    if (out.times.back() != trajectory.times.back()) {
        out.times.push_back(trajectory.times.back());
        out.states.push_back(trajectory.states.back());
    }
    return out;
}

}  // namespace eitmech
