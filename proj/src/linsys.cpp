#include "eitmech/linsys.hpp"

#include <algorithm>
#include <cmath>

#include "eitmech/errors.hpp"

namespace eitmech {

namespace {

using cd = std::complex<double>;
constexpr cd I{0.0, 1.0};

ComplexModel empty_model(std::vector<std::string> labels) {
    const auto n = static_cast<Eigen::Index>(labels.size());
    ComplexModel m;
    m.labels = std::move(labels);
    m.M = Eigen::MatrixXcd::Zero(n, n);
    m.N = Eigen::MatrixXcd::Zero(n, n);
    m.noise.resize(static_cast<std::size_t>(n));
    return m;
}

// Reduced two-mode model shared by both sidebands; only the coupling block differs.
ComplexModel reduced_model(const SystemParams& p, bool stokes) {
    const DerivedRates r = derived_rates(p);
    ComplexModel m = empty_model({"c2", "b"});
    m.M(0, 0) = -(p.gamma_c + r.gamma_E);
    m.M(1, 1) = -(p.gamma_m + r.gamma_O);
    Eigen::MatrixXcd& coupling = stokes ? m.N : m.M;
    coupling(0, 1) = -I * r.g_eff;
    coupling(1, 0) = -I * r.g_eff;
    m.noise[0] = {2.0 * (r.gamma_E + p.gamma_c), 0.0};
    m.noise[1] = {2.0 * (r.gamma_O + p.gamma_m * (p.n_i + 1.0)), 2.0 * p.gamma_m * p.n_i};
    return m;
}

}  // namespace

std::size_t mode_index(std::span<const std::string> labels, std::string_view label) {
    const auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) fail(ErrorKind::NotFound, "unknown mode label '" + std::string(label) + "'");
    return static_cast<std::size_t>(it - labels.begin());
}

std::string_view to_string(ModelTier tier) noexcept {
    switch (tier) {
        case ModelTier::Full: return "full";
        case ModelTier::RwaAntiStokes: return "rwa-anti-stokes";
        case ModelTier::RwaStokes: return "rwa-stokes";
        case ModelTier::Bare: return "bare";
    }
    return "full";
}

ModelTier parse_model_tier(std::string_view text) {
    for (ModelTier t : {ModelTier::Full, ModelTier::RwaAntiStokes, ModelTier::RwaStokes,
                        ModelTier::Bare}) {
        if (to_string(t) == text) return t;
    }
    fail(ErrorKind::InvalidConfig, "unknown model tier '" + std::string(text) +
                                       "' (expected full, rwa-anti-stokes, rwa-stokes or bare)");
}

ComplexModel complex_full(const SystemParams& p) {
    p.validate();
    const double gN = p.collective_coupling();
    enum { c2, c3, a, b };
    ComplexModel m = empty_model({"c2", "c3", "a", "b"});

    m.M(c2, c2) = -(p.gamma_c + I * p.delta);
    m.M(c2, c3) = I * p.Omega;

    m.M(c3, c3) = -(p.gamma + I * p.one_photon_detuning());
    m.M(c3, a) = I * gN;
    m.M(c3, c2) = I * p.Omega;

    m.M(a, a) = -(p.kappa + I * p.delta_c);
    m.M(a, c3) = I * gN;
    m.M(a, b) = I * p.G;
    m.N(a, b) = I * p.G;

    // Non-RWA Brownian damping: -gamma_m (b - b^dag) acts on momentum only.
    m.M(b, b) = -(p.gamma_m + I * p.omega_m);
    m.N(b, b) = p.gamma_m;
    m.M(b, a) = I * p.G;
    m.N(b, a) = I * p.G;

    m.noise[c2] = NoiseInput::thermal(p.gamma_c, 0.0);
    m.noise[c3] = NoiseInput::thermal(p.gamma, 0.0);
    m.noise[a] = NoiseInput::thermal(p.kappa, 0.0);
    m.noise[b] = NoiseInput::thermal(p.gamma_m, p.n_i);
    return m;
}

ComplexModel complex_rwa_anti_stokes(const SystemParams& p) { return reduced_model(p, false); }

ComplexModel complex_rwa_stokes(const SystemParams& p) { return reduced_model(p, true); }

ComplexModel complex_bare(const SystemParams& p) {
    p.validate();
    enum { a, b };
    ComplexModel m = empty_model({"a", "b"});
    m.M(a, a) = -(p.kappa + I * p.delta_c);
    m.M(a, b) = I * p.G;
    m.N(a, b) = I * p.G;
    m.M(b, b) = -(p.gamma_m + I * p.omega_m);
    m.N(b, b) = p.gamma_m;
    m.M(b, a) = I * p.G;
    m.N(b, a) = I * p.G;
    m.noise[a] = NoiseInput::thermal(p.kappa, 0.0);
    m.noise[b] = NoiseInput::thermal(p.gamma_m, p.n_i);
    return m;
}

LinearModel to_quadratures(const ComplexModel& cm) {
    const Eigen::Index n = cm.M.rows();
    // With o = (x + i p)/sqrt(2):  xdot + i pdot = M (x + i p) + N (x - i p).
    const Eigen::MatrixXd Mr = cm.M.real(), Mi = cm.M.imag();
    const Eigen::MatrixXd Nr = cm.N.real(), Ni = cm.N.imag();

    LinearModel lm;
    lm.labels = cm.labels;
    lm.A = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    lm.D = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index k = 0; k < n; ++k) {
            lm.A(2 * j, 2 * k) = Mr(j, k) + Nr(j, k);
            lm.A(2 * j, 2 * k + 1) = -Mi(j, k) + Ni(j, k);
            lm.A(2 * j + 1, 2 * k) = Mi(j, k) + Ni(j, k);
            lm.A(2 * j + 1, 2 * k + 1) = Mr(j, k) - Nr(j, k);
        }
        const NoiseInput& in = cm.noise[static_cast<std::size_t>(j)];
        const double d = 0.5 * (in.anti_normal + in.normal);
        lm.D(2 * j, 2 * j) = d;
        lm.D(2 * j + 1, 2 * j + 1) = d;
    }
    return lm;
}

Eigen::VectorXd quadrature_image(const Eigen::VectorXcd& amplitudes) {
    const Eigen::Index n = amplitudes.size();
    Eigen::VectorXd out(2 * n);
    for (Eigen::Index j = 0; j < n; ++j) {
        out(2 * j) = std::sqrt(2.0) * amplitudes(j).real();
        out(2 * j + 1) = std::sqrt(2.0) * amplitudes(j).imag();
    }
    return out;
}

LinearModel build_full(const SystemParams& p) { return to_quadratures(complex_full(p)); }
LinearModel build_rwa_anti_stokes(const SystemParams& p) {
    return to_quadratures(complex_rwa_anti_stokes(p));
}
LinearModel build_rwa_stokes(const SystemParams& p) { return to_quadratures(complex_rwa_stokes(p)); }
LinearModel build_bare(const SystemParams& p) { return to_quadratures(complex_bare(p)); }

LinearModel build_model(ModelTier tier, const SystemParams& p) {
    switch (tier) {
        case ModelTier::Full: return build_full(p);
        case ModelTier::RwaAntiStokes: return build_rwa_anti_stokes(p);
        case ModelTier::RwaStokes: return build_rwa_stokes(p);
        case ModelTier::Bare: return build_bare(p);
    }
    return build_full(p);
}

Stability stability(const LinearModel& model) {
    if (model.A.rows() != model.A.cols() || model.A.rows() == 0) {
        fail(ErrorKind::InvalidParameter, "drift matrix must be square and non-empty");
    }
    if (!model.A.allFinite()) fail(ErrorKind::NumericFailure, "drift matrix has non-finite entries");
    Eigen::EigenSolver<Eigen::MatrixXd> solver(model.A, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) {
        fail(ErrorKind::NumericFailure, "eigenvalue computation failed");
    }
    const double abscissa = solver.eigenvalues().real().maxCoeff();
    return {abscissa, abscissa < 0.0};
}

double instability_threshold(const SystemParams& params, const ModelBuilder& builder,
                             double G_lo, double G_hi, double rel_tol) {
    if (!(G_lo >= 0.0 && G_lo < G_hi) || !(rel_tol > 0.0)) {
        fail(ErrorKind::InvalidParameter, "instability_threshold needs 0 <= G_lo < G_hi");
    }
    auto stable_at = [&](double G) {
        SystemParams q = params;
        q.G = G;
        return stability(builder(q)).stable;
    };
    if (!stable_at(G_lo) || stable_at(G_hi)) {
        fail(ErrorKind::NoThreshold, "no stability change between G_lo and G_hi");
    }
    double lo = G_lo, hi = G_hi;
    while (hi - lo > rel_tol * hi) {
        const double mid = 0.5 * (lo + hi);
        (stable_at(mid) ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace eitmech
