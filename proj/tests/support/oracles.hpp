#pragma once

// Test-only reference implementations. Nothing here calls into the library
// except for SystemParams and derived_rates; the drift matrices are rebuilt from
// the operator equations written out by hand.

#include <cmath>
#include <complex>
#include <functional>
#include <random>

#include <Eigen/Dense>

#include "eitmech/model.hpp"
#include "eitmech/presets.hpp"

namespace oracle {

using cd = std::complex<double>;
inline const cd I{0.0, 1.0};

using Rhs = std::function<Eigen::VectorXcd(const Eigen::VectorXcd&)>;

// Fluctuation right-hand side for (c2, c3, a, b), noise terms dropped.
inline Eigen::VectorXcd rhs_full(const eitmech::SystemParams& p, const Eigen::VectorXcd& o) {
    const cd c2 = o(0), c3 = o(1), a = o(2), b = o(3);
    const double gN = p.g * std::sqrt(static_cast<double>(p.N));
    const double Delta = p.Delta.value_or(p.delta);
    Eigen::VectorXcd f(4);
    f(0) = -(p.gamma_c + I * p.delta) * c2 + I * p.Omega * c3;
    f(1) = -(p.gamma + I * Delta) * c3 + I * gN * a + I * p.Omega * c2;
    f(2) = -(p.kappa + I * p.delta_c) * a + I * gN * c3 + I * p.G * (b + std::conj(b));
    f(3) = -(p.gamma_m + I * p.omega_m) * b + p.gamma_m * std::conj(b) +
           I * p.G * (a + std::conj(a));
    return f;
}

inline Eigen::VectorXcd rhs_bare(const eitmech::SystemParams& p, const Eigen::VectorXcd& o) {
    const cd a = o(0), b = o(1);
    Eigen::VectorXcd f(2);
    f(0) = -(p.kappa + I * p.delta_c) * a + I * p.G * (b + std::conj(b));
    f(1) = -(p.gamma_m + I * p.omega_m) * b + p.gamma_m * std::conj(b) +
           I * p.G * (a + std::conj(a));
    return f;
}

// Reduced (c2, b) dynamics: beamsplitter for the anti-Stokes resonance,
// two-mode squeezing for the Stokes one.
inline Eigen::VectorXcd rhs_reduced(const eitmech::SystemParams& p, const Eigen::VectorXcd& o,
                                    bool stokes) {
    const eitmech::DerivedRates r = eitmech::derived_rates(p);
    const cd c = o(0), b = o(1);
    const cd partner_b = stokes ? std::conj(b) : b;
    const cd partner_c = stokes ? std::conj(c) : c;
    Eigen::VectorXcd f(2);
    f(0) = -(p.gamma_c + r.gamma_E) * c - I * r.g_eff * partner_b;
    f(1) = -(p.gamma_m + r.gamma_O) * b - I * r.g_eff * partner_c;
    return f;
}

inline Eigen::VectorXcd amplitudes_of(const Eigen::VectorXd& xi) {
    const Eigen::Index n = xi.size() / 2;
    Eigen::VectorXcd o(n);
    for (Eigen::Index k = 0; k < n; ++k) o(k) = cd(xi(2 * k), xi(2 * k + 1)) / std::sqrt(2.0);
    return o;
}

inline Eigen::VectorXd quadratures_of(const Eigen::VectorXcd& o) {
    Eigen::VectorXd xi(2 * o.size());
    for (Eigen::Index k = 0; k < o.size(); ++k) {
        xi(2 * k) = std::sqrt(2.0) * o(k).real();
        xi(2 * k + 1) = std::sqrt(2.0) * o(k).imag();
    }
    return xi;
}

// Central differences of the right-hand side in quadrature coordinates.
inline Eigen::MatrixXd finite_difference_drift(const Rhs& rhs, Eigen::Index modes, double h = 1.0) {
    const Eigen::Index dim = 2 * modes;
    Eigen::MatrixXd A(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
        Eigen::VectorXd e = Eigen::VectorXd::Zero(dim);
        e(j) = h;
        const Eigen::VectorXd up = quadratures_of(rhs(amplitudes_of(e)));
        const Eigen::VectorXd down = quadratures_of(rhs(amplitudes_of(-e)));
        A.col(j) = (up - down) / (2.0 * h);
    }
    return A;
}

// Random parameters scattered log-uniformly around the cooling point, with
// the sign of the detunings drawn too.
inline eitmech::SystemParams random_params(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    auto scale = [&](double decades) { return std::pow(10.0, decades * u(rng)); };
    auto sign = [&] { return u(rng) < 0.0 ? -1.0 : 1.0; };

    eitmech::SystemParams p = eitmech::presets::cooling();
    p.omega_m *= scale(0.5);
    p.gamma_m *= scale(1.0);
    p.n_i = std::pow(10.0, 2.0 + 3.0 * (u(rng) + 1.0));
    p.kappa *= scale(0.5);
    p.delta_c = sign() * p.omega_m * scale(0.5);
    p.G *= scale(1.0);
    p.g *= scale(0.5);
    p.N = static_cast<std::int64_t>(std::pow(10.0, 5.0 + 2.0 * (u(rng) + 1.0)));
    p.gamma *= scale(0.5);
    p.gamma_c *= scale(1.0);
    p.Omega *= scale(1.0);
    p.delta = sign() * p.omega_m * scale(0.5);
    if (u(rng) > 0.0) p.Delta = sign() * p.gamma * scale(1.0);
    return p;
}

}  // namespace oracle
