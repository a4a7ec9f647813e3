#include "eitmech/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "eitmech/errors.hpp"
#include "eitmech/grid.hpp"

namespace eitmech {

double occupancy(const GaussianState& state, std::string_view mode) {
    const Eigen::Matrix2d V = state.mode_covariance(mode);
    const Eigen::Vector2d mu = state.mode_mean(mode);
    return 0.5 * (V.trace() - 1.0) + 0.5 * mu.squaredNorm();
}

double log_negativity(const GaussianState& state, std::string_view first, std::string_view second) {
    const Eigen::Matrix4d W = state.pair_covariance(first, second);
    const Eigen::Matrix2d A = W.topLeftCorner<2, 2>();
    const Eigen::Matrix2d B = W.bottomRightCorner<2, 2>();
    const Eigen::Matrix2d C = W.topRightCorner<2, 2>();
    if (C.isZero(0.0)) return 0.0;  // product state

    const double sigma = A.determinant() + B.determinant() - 2.0 * C.determinant();
    const double det = W.determinant();
    double disc = sigma * sigma - 4.0 * det;
    if (disc < 0.0) {
        if (disc < -1e-9 * sigma * sigma) {
            fail(ErrorKind::InvalidState, "two-mode covariance is not a physical state");
        }
        disc = 0.0;
    }
    const double nu_sq = 0.5 * (sigma - std::sqrt(disc));
    if (!(nu_sq > 0.0)) fail(ErrorKind::InvalidState, "non-positive symplectic eigenvalue");
    return std::max(0.0, -std::log(2.0 * std::sqrt(nu_sq)));
}

Eigen::Matrix2d mode_spec_covariance(const ModeSpec& spec) {
    switch (spec.kind) {
        case ModeSpec::Kind::Vacuum:
            return 0.5 * Eigen::Matrix2d::Identity();
        case ModeSpec::Kind::Thermal:
            if (!(spec.occupancy >= 0.0) || !std::isfinite(spec.occupancy)) {
                fail(ErrorKind::InvalidParameter, "thermal occupancy must be >= 0");
            }
            return (spec.occupancy + 0.5) * Eigen::Matrix2d::Identity();
        case ModeSpec::Kind::Squeezed: {
            if (!std::isfinite(spec.squeeze) || !std::isfinite(spec.angle)) {
                fail(ErrorKind::InvalidParameter, "squeezing parameters must be finite");
            }
            const double c = std::cos(spec.angle), s = std::sin(spec.angle);
            Eigen::Matrix2d R;
            R << c, -s, s, c;
            const Eigen::Vector2d diag(std::exp(-2.0 * spec.squeeze), std::exp(2.0 * spec.squeeze));
            return R * (0.5 * diag).asDiagonal() * R.transpose();
        }
    }
    return 0.5 * Eigen::Matrix2d::Identity();
}

GaussianState prepare_product_state(std::span<const std::string> labels,
                                    std::span<const ModeSpec> specs) {
    if (labels.size() != specs.size()) {
        fail(ErrorKind::InvalidParameter, "one mode spec per label required");
    }
    const auto n = static_cast<Eigen::Index>(labels.size());
    GaussianState state;
    state.labels.assign(labels.begin(), labels.end());
    state.mean = Eigen::VectorXd::Zero(2 * n);
    state.covariance = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    for (Eigen::Index j = 0; j < n; ++j) {
        state.covariance.block<2, 2>(2 * j, 2 * j) = mode_spec_covariance(specs[static_cast<std::size_t>(j)]);
    }
    return state;
}

WignerGridSpec WignerGridSpec::around(const GaussianState& state, std::string_view mode,
                                      double sigmas, std::size_t points) {
    const Eigen::Matrix2d V = state.mode_covariance(mode);
    const Eigen::Vector2d mu = state.mode_mean(mode);
    const double width = sigmas * std::sqrt(Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d>(V)
                                                .eigenvalues()
                                                .maxCoeff());
    return {mu(0) - width, mu(0) + width, mu(1) - width, mu(1) + width, points, points};
}

double WignerGrid::integrated_mass() const {
    auto weights = [](const std::vector<double>& axis) {
        std::vector<double> w(axis.size(), 0.0);
        for (std::size_t i = 0; i + 1 < axis.size(); ++i) {
            const double h = 0.5 * (axis[i + 1] - axis[i]);
            w[i] += h;
            w[i + 1] += h;
        }
        return w;
    };
    const std::vector<double> wx = weights(x_axis), wp = weights(p_axis);
    double total = 0.0;
    for (std::size_t i = 0; i < wx.size(); ++i) {
        for (std::size_t j = 0; j < wp.size(); ++j) {
            total += wx[i] * wp[j] * values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
        }
    }
    return total;
}

WignerGrid wigner(const GaussianState& state, std::string_view mode, const WignerGridSpec& spec) {
    const Eigen::Matrix2d V = state.mode_covariance(mode);
    const Eigen::Vector2d mu = state.mode_mean(mode);
    const double det = V.determinant();
    if (!(det > 0.0) || !(V(0, 0) > 0.0)) {
        fail(ErrorKind::InvalidState, "reduced covariance is not positive definite");
    }
    const Eigen::Matrix2d inv = V.inverse();
    const double norm = 1.0 / (two_pi * std::sqrt(det));

    WignerGrid out;
    out.x_axis = linspace(spec.x_min, spec.x_max, spec.x_points);
    out.p_axis = linspace(spec.p_min, spec.p_max, spec.p_points);
    out.values.resize(static_cast<Eigen::Index>(spec.x_points), static_cast<Eigen::Index>(spec.p_points));
    for (std::size_t i = 0; i < spec.x_points; ++i) {
        for (std::size_t j = 0; j < spec.p_points; ++j) {
            const Eigen::Vector2d d(out.x_axis[i] - mu(0), out.p_axis[j] - mu(1));
            out.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                norm * std::exp(-0.5 * d.dot(inv * d));
        }
    }
    return out;
}

double gaussian_fidelity(const Eigen::Matrix2d& V1, const Eigen::Vector2d& mu1,
                         const Eigen::Matrix2d& V2, const Eigen::Vector2d& mu2) {
    constexpr double tol = 1e-9;
    for (const Eigen::Matrix2d* V : {&V1, &V2}) {
        if (!V->allFinite() || !(V->determinant() >= 0.25 - tol) || !((*V)(0, 0) > 0.0) ||
            std::abs((*V)(0, 1) - (*V)(1, 0)) > tol * std::max(1.0, V->cwiseAbs().maxCoeff())) {
            fail(ErrorKind::InvalidState, "fidelity needs physical single-mode covariances");
        }
    }
    const Eigen::Matrix2d S = V1 + V2;
    const double delta = S.determinant();
    const double lambda = std::max(0.0, 4.0 * (V1.determinant() - 0.25) * (V2.determinant() - 0.25));
    const Eigen::Vector2d d = mu1 - mu2;
    const double overlap = std::exp(-0.5 * d.dot(S.inverse() * d));
    // 1/(sqrt(delta+lambda) - sqrt(lambda)) without the cancellation
    const double f = overlap * (std::sqrt(delta + lambda) + std::sqrt(lambda)) / delta;
    return std::clamp(f, 0.0, 1.0);
}

double gaussian_fidelity(const GaussianState& s1, const GaussianState& s2, std::string_view mode) {
    return gaussian_fidelity(s1.mode_covariance(mode), s1.mode_mean(mode), s2.mode_covariance(mode),
                             s2.mode_mean(mode));
}

double gaussian_fidelity(const GaussianState& s1, std::string_view first, const GaussianState& s2,
                         std::string_view second) {
    return gaussian_fidelity(s1.mode_covariance(first), s1.mode_mean(first),
                             s2.mode_covariance(second), s2.mode_mean(second));
}

RotatedFidelity gaussian_fidelity_up_to_rotation(const Eigen::Matrix2d& V1, const Eigen::Vector2d& mu1,
                                                 const Eigen::Matrix2d& V2, const Eigen::Vector2d& mu2) {
    auto at = [&](double phi) {
        Eigen::Matrix2d R;
        R << std::cos(phi), -std::sin(phi), std::sin(phi), std::cos(phi);
        return gaussian_fidelity(V1, mu1, R * V2 * R.transpose(), R * mu2);
    };
    constexpr int scan = 1440;
    const double step = two_pi / scan;
    RotatedFidelity best{at(0.0), 0.0};
    for (int k = 1; k < scan; ++k) {
        const double f = at(k * step);
        if (f > best.fidelity) best = {f, k * step};
    }
    // golden-section refinement inside the bracketing cells
    const double golden = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = best.angle - step, b = best.angle + step;
    double c = b - golden * (b - a), d = a + golden * (b - a);
    double fc = at(c), fd = at(d);
    for (int it = 0; it < 60; ++it) {
        if (fc > fd) {
            b = d; d = c; fd = fc;
            c = b - golden * (b - a); fc = at(c);
        } else {
            a = c; c = d; fc = fd;
            d = a + golden * (b - a); fd = at(d);
        }
    }
    const double phi = 0.5 * (a + b);
    const double f = at(phi);
    if (f > best.fidelity) best = {f, std::remainder(phi, two_pi)};
    return best;
}

}  // namespace eitmech
