#pragma once

// Generated by tests/support/generate_oracles.py. Do not edit by hand.
// Rates are angular (rad/s).

namespace frozen {

inline constexpr double cooling_C = 333333.33333333326;
inline constexpr double cooling_Gamma_O = 251327.41228718343;
inline constexpr double cooling_Gamma_E = 188495559215.38757;
inline constexpr double cooling_gamma_O = 0.75397997492162572;
inline constexpr double cooling_gamma_E = 565484.9811912193;
inline constexpr double cooling_kappa_eit = 571769.86295334238;
inline constexpr double cooling_g_eff = 376989.98746081284;
inline constexpr double cooling_g_far = 376991.11843070737;
inline constexpr double mapping_C = 333333.33333333326;
inline constexpr double mapping_Gamma_O = 1570796.3267948965;
inline constexpr double mapping_Gamma_E = 20943951023.93195;
inline constexpr double mapping_gamma_O = 4.7123748432601609;
inline constexpr double mapping_gamma_E = 62831.664576802134;
inline constexpr double mapping_kappa_eit = 69115.038378975456;
inline constexpr double mapping_g_eff = 314158.32288401067;
inline constexpr double mapping_g_far = 314159.26535892277;
inline constexpr double entanglement_C = 33.333333333333329;
inline constexpr double entanglement_Gamma_O = 6283185.307179586;
inline constexpr double entanglement_Gamma_E = 3015928.9474462015;
inline constexpr double entanglement_gamma_O = 183005.39729649283;
inline constexpr double entanglement_gamma_E = 87842.590702316564;
inline constexpr double entanglement_kappa_eit = 96761.053730565647;
inline constexpr double entanglement_g_eff = 732021.5891859713;
inline constexpr double entanglement_g_far = 709412.39543565747;
inline constexpr double thermal_1K = 104182.59568127275;
inline constexpr double thermal_20K = 2083661.4136094972;
inline constexpr double chi_cooling_re = -13962639.289953344;
inline constexpr double chi_cooling_im = 69906.314109055951;
inline constexpr double halfwidth_cooling = 524754.31478748797;
inline constexpr double nf_full_cooling = 0.18047211397247609;
inline constexpr double nf_full_G20k = 5.3434710052656573;
inline constexpr double nf_full_G50k = 0.91439300086818509;
inline constexpr double nf_full_G100k = 0.29018585580155176;
inline constexpr double nf_rwa_G20k = 5.0772768845509182;
inline constexpr double nf_rwa_G50k = 0.83086018173605014;
inline constexpr double nf_rwa_G100k = 0.22419977721140494;
inline constexpr double nf_rwa_G200k = 0.072533505575890889;
inline constexpr double nf_bare_G10k = 83.865162761117787;
inline constexpr double nf_bare_G50k = 6.0072116307199632;
inline constexpr double nf_bare_G100k = 3.6762484826458781;
inline constexpr double nf_bare_G200k = 3.6726522081833162;
inline constexpr int cool_sweep_argmin_index = 122;
inline constexpr double cool_sweep_argmin = 1.0520848517749659;
inline constexpr double cool_sweep_min = 0.17901458765998146;
inline constexpr int cool_sweep_index_of_one = 118;
inline constexpr int ent_sweep_argmax_index = 120;
inline constexpr double ent_sweep_argmax = -1.3115577889447239;
inline constexpr double ent_sweep_max = 0.84589467717018585;
inline constexpr double ent_sweep_first_unstable = -1.2974874371859297;
inline constexpr int ent_sweep_index_of_minus_one = 142;
inline constexpr double en_132_ni1e5 = 0.83875661084267505;
inline constexpr double en_132_ni20K = 0.026421929216045272;
inline constexpr double en_132_first_zero = 2257019.7196339215;
inline constexpr double map_half_fidelity = 0.29259070371948848;
inline constexpr double map_half_min_variance = 0.27598424834315505;
inline constexpr double map_half_n_mirror = 1.0751235492895184;
inline constexpr double map_full_fidelity = 0.33752827485416598;
inline constexpr double map_full_min_variance = 1.5920383908416142;
inline constexpr double map_full_n_mirror = 1.092372492861982;

}  // namespace frozen
