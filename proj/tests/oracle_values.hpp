// Generated by tests/oracles/generate.py. Do not edit by hand.

// Frozen oracle values for the unit tests; see generate.py for
// how each one is produced.
#pragma once

namespace oracle {

inline constexpr double beta_paper = 0.64549722436790281;       // sqrt(5/12)
inline constexpr double binding_u[] = {
    0.0010000000000000000, 0.10000000000000001, 0.50000000000000000, 1.0000000000000000,
    2.0000000000000000, 5.0000000000000000, 10.000000000000000, 20.000000000000000,
};
inline constexpr double binding_w[] = {
    33.531237452958393, 3.4631819373843441, 1.6934865704039210, 1.3140097247053748,
    1.0946471574797536, 1.0036250770662674, 1.0000177769054590, 1.0000000005741238,
};
inline constexpr double deriv_u[] = {
    0.10000000000000001, 0.50000000000000000, 1.0000000000000000, 2.0000000000000000,
    5.0000000000000000,
};
inline constexpr double binding_dw[] = {
    -16.378409862260484, -1.3569328867731753, -0.42572378174233197, -0.10574984297924070,
    -0.0039148022742325287,
};
inline constexpr double binding_d2w[] = {
    248.79716976339532, 4.3520148207084351, 0.75505842464947733, 0.12538158239815877,
    0.0042463649967133799,
};
inline constexpr double logA_u[] = {
    0.50000000000000000, 1.0000000000000000,
};
inline constexpr double logA_first[] = {
    -0.66558250935040305, -0.21624984484606529,
};
inline constexpr double logA_laplacian[] = {
    0.96085354784361702, 0.25670233477231956,
};
inline constexpr double p_u = 0.80000000000000000;
inline constexpr double p1_value = -1.6155686881220492;
inline constexpr double p2_value = 3.6458925482007814;
inline constexpr double light_u[] = {
    0.20000000000000001, 0.50000000000000000, 1.0000000000000000, 2.0000000000000000,
    5.0000000000000000,
};
inline constexpr double light_w[] = {
    2.5111429867683314, 1.6934865704039210, 1.3140097247053748, 1.0946471574797536,
    1.0036250770662674,
};
inline constexpr double light_A2[] = {
    0.54926161422111943, 0.27357508489036286, 0.18576825452510255, 0.15386063311415256,
    0.15718433857376027,
};
inline constexpr double light_overlap[] = {
    0.41210927738475385, 0.73221745436604170, 0.87202279130099430, 0.62788204252687252,
    0.062039610768470681,
};
inline constexpr double light_grad_integral[] = {
    0.41492048105000751, 1.9527845448417057, 5.1100801868858509, 9.3337625347259329,
    9.3146369748832853,
};
inline constexpr double xi_x = 0.050000000000000000;
inline constexpr double xi_value = 1.1504102720202644;

// ground-state moments and corrections, reduced units, M/m = 1000,
// beta^2 = 5/12, by direct quadrature of the radial density
inline constexpr double corr_mass_ratio = 1000.0;
inline constexpr double corr_E_inv_z = 214.15805864286102;
inline constexpr double corr_E_log = -5.2799978460178157;
inline constexpr double corr_E_log2 = 28.232996735452585;
inline constexpr double corr_E_loginv = -1224.2322976673278;
inline constexpr double corr_E_z_over_z0 = 3.7698250064370418;
inline constexpr double corr_binding_log = -0.83222468494701708;
inline constexpr double corr_a1 = 0.48048380822100882;
inline constexpr double corr_b = -1.3733403269014967;
inline constexpr double corr_c = 0.017782373988569847;
inline constexpr double corr_mixed1 = 0.56654921139549613;
inline constexpr double corr_mixed2 = 0.0036142002054871000;
inline constexpr double corr_symmetrization = 0.11872954859833634;

}  // namespace oracle
