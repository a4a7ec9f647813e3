#include <doctest.h>

#include <cmath>

#include "check.hpp"
#include "eitmech/errors.hpp"
#include "eitmech/metrics.hpp"
#include "eitmech/presets.hpp"
#include "eitmech/solver.hpp"
#include "frozen_values.hpp"

using namespace eitmech;
using check::rel_err;

TEST_CASE("steady-state occupancies against the reference solver") {
    SystemParams p = presets::cooling();
    CHECK(rel_err(occupancy(steady_covariance(build_full(p)), "b"), frozen::nf_full_cooling) < 1e-8);

    const std::pair<double, double> full[] = {
        {20e3, frozen::nf_full_G20k}, {50e3, frozen::nf_full_G50k}, {100e3, frozen::nf_full_G100k}};
    for (auto [G, expected] : full) {
        p.G = angular(G);
        CHECK(rel_err(occupancy(steady_covariance(build_full(p)), "b"), expected) < 1e-8);
    }
    const std::pair<double, double> rwa[] = {{20e3, frozen::nf_rwa_G20k},
                                             {50e3, frozen::nf_rwa_G50k},
                                             {100e3, frozen::nf_rwa_G100k},
                                             {200e3, frozen::nf_rwa_G200k}};
    for (auto [G, expected] : rwa) {
        p.G = angular(G);
        CHECK(rel_err(occupancy(steady_covariance(build_rwa_anti_stokes(p)), "b"), expected) < 1e-8);
    }
    p.delta_c = 0.5 * p.kappa;
    const std::pair<double, double> bare[] = {{10e3, frozen::nf_bare_G10k},
                                              {50e3, frozen::nf_bare_G50k},
                                              {100e3, frozen::nf_bare_G100k},
                                              {200e3, frozen::nf_bare_G200k}};
    for (auto [G, expected] : bare) {
        p.G = angular(G);
        CHECK(rel_err(occupancy(steady_covariance(build_bare(p)), "b"), expected) < 1e-8);
    }
}

TEST_CASE("both vectorization orders agree") {
    const LinearModel m = build_full(presets::cooling());
    const Eigen::MatrixXd a = solve_lyapunov(m.A, m.D, VectorizationOrder::ColumnMajor);
    const Eigen::MatrixXd b = solve_lyapunov(m.A, m.D, VectorizationOrder::RowMajor);
    CHECK((a - b).norm() / a.norm() < 1e-10);
    CHECK(lyapunov_residual(m, a) < 1e-10);
}

TEST_CASE("unstable models are refused") {
    try {
        steady_covariance(build_rwa_stokes(presets::entanglement()));
        FAIL("expected UnstableSystem");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnstableSystem);
    }
}

TEST_CASE("propagation relaxes to the steady state") {
    const LinearModel m = build_rwa_anti_stokes(presets::mapping());
    const std::vector<std::string> labels = m.labels;
    const std::vector<ModeSpec> specs = {ModeSpec::squeezed(1.0), ModeSpec::thermal(2.0)};
    const GaussianState start = prepare_product_state(labels, specs);
    const GaussianState ss = steady_covariance(m);

    Propagator step(m, 1e-7);
    for (int k = 0; k < 40; ++k) step = step.squared();  // ~1e5 s
    const GaussianState late = step.step(start);
    CHECK((late.covariance - ss.covariance).norm() / ss.covariance.norm() < 1e-9);
}

TEST_CASE("propagation matches the closed-form transient") {
    const SystemParams p = presets::mapping();
    const LinearModel m = build_rwa_anti_stokes(p);
    const std::vector<ModeSpec> specs = {ModeSpec::squeezed(1.0), ModeSpec::thermal(2.0)};
    const GaussianState start = prepare_product_state(m.labels, specs);
    const double geff = derived_rates(p).g_eff;

    const Trajectory half = propagate(m, start, pi / (2.0 * geff));
    const Trajectory full = propagate(m, start, pi / geff);
    CHECK(half.times.back() == pi / (2.0 * geff));
    CHECK(rel_err(occupancy(half.states.back(), "b"), frozen::map_half_n_mirror) < 1e-8);
    CHECK(rel_err(occupancy(full.states.back(), "b"), frozen::map_full_n_mirror) < 1e-8);
    const Eigen::Matrix2d vb = full.states.back().mode_covariance("b");
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(vb);
    CHECK(rel_err(es.eigenvalues().minCoeff(), frozen::map_full_min_variance) < 1e-8);
}

TEST_CASE("time step defaults and trajectory shape") {
    const LinearModel m = build_full(presets::cooling());
    const double dt = default_time_step(m, 1.0);
    CHECK(dt <= 1e-3);
    CHECK(dt > 0.0);

    const std::vector<ModeSpec> specs(4, ModeSpec::vacuum());
    const GaussianState vac = prepare_product_state(m.labels, specs);
    const Trajectory t = propagate(m, vac, 1e-6, 3e-7);
    CHECK(t.times.size() == 5);  // step shrunk to 2.5e-7 to land on t_final
    CHECK(t.times.back() == 1e-6);
    CHECK(propagate(m, vac, 0.0).times.size() == 1);
    CHECK_THROWS_AS(propagate(m, vac, -1.0), Error);
    CHECK_THROWS_AS(Propagator(m, 0.0), Error);
}

TEST_CASE("decimation keeps both ends") {
    Trajectory t;
    for (int k = 0; k < 10001; ++k) {
        t.times.push_back(k);
        t.states.push_back({});
    }
    const Trajectory d = decimate(t, 5000);
    CHECK(d.times.size() <= 5000);
    CHECK(d.times.front() == 0.0);
    CHECK(d.times.back() == 10000.0);
    CHECK(decimate(t, 20000).times.size() == 10001);
}

TEST_CASE("uncertainty margin and physicality") {
    const Eigen::MatrixXd vac = 0.5 * Eigen::MatrixXd::Identity(4, 4);
    CHECK(std::abs(uncertainty_margin(vac)) < 1e-15);
    GaussianState s{{"a", "b"}, Eigen::VectorXd::Zero(4), vac};
    CHECK(is_physical(s));
    s.covariance(0, 0) = 0.2;
    CHECK_FALSE(is_physical(s));
    s.covariance = vac;
    s.covariance(0, 1) = 0.1;  // asymmetric
    CHECK_FALSE(is_physical(s));
}
