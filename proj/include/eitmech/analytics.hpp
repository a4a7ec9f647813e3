#pragma once

#include <vector>

#include "eitmech/model.hpp"

namespace eitmech {

struct CoolingPrediction {
    double n_f = 0.0;           // gamma_m n_i/(gamma_m + Gamma_O) + gamma_c/(2 kappa_EIT)
    double cooling_rate = 0.0;  // Gamma_O gamma_E / kappa_EIT
    double heating_rate = 0.0;  // 2 gamma_m n_i + gamma_O
    std::vector<RegimeWarning> warnings;
};

// Leading-order EIT cooling limit. Never throws for valid parameters with
// kappa, gamma > 0; regime violations come back as warnings.
CoolingPrediction predict_cooling(const SystemParams& params,
                                  double intracavity_amplitude = 0.0);

// Bath occupancy g_far/gamma_m at which the far-detuned atom-mirror coupling
// matches the thermal decoherence rate. Throws Error{InvalidParameter} if
// gamma_m = 0.
double predict_entanglement_crossover(const SystemParams& params);

}  // namespace eitmech
