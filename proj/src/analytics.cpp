#include "eitmech/analytics.hpp"

#include "eitmech/errors.hpp"

namespace eitmech {

CoolingPrediction predict_cooling(const SystemParams& p, double intracavity_amplitude) {
    const DerivedRates r = derived_rates(p);
    CoolingPrediction out;
    const double mech = p.gamma_m + r.Gamma_O;
    out.n_f = (mech > 0.0 ? p.gamma_m * p.n_i / mech : p.n_i) + p.gamma_c / (2.0 * r.kappa_eit);
    out.cooling_rate = r.Gamma_O * r.gamma_E / r.kappa_eit;
    out.heating_rate = 2.0 * p.gamma_m * p.n_i + r.gamma_O;
    out.warnings = validate_regime(p, intracavity_amplitude);
    return out;
}

double predict_entanglement_crossover(const SystemParams& p) {
    if (!(p.gamma_m > 0.0)) fail(ErrorKind::InvalidParameter, "gamma_m must be > 0");
    return derived_rates(p).g_far / p.gamma_m;
}

}  // namespace eitmech
