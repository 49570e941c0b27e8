// Generated by tests/oracles/generate.py. Do not edit by hand.

// Reference grids for the special-function accuracy report,
// computed with 50-digit arithmetic.
#pragma once

namespace bo2d::reference {

inline constexpr double bessel_x[] = {
    0.0010000000000000000, 0.0030000000000000001, 0.010000000000000000, 0.029999999999999999,
    0.10000000000000001, 0.29999999999999999, 0.50000000000000000, 0.80000000000000004,
    1.0000000000000000, 1.3000000000000000, 1.7000000000000000, 1.9500000000000000,
    2.0000000000000000, 2.0499999999999998, 2.2999999999999998, 2.7000000000000002,
    3.0000000000000000, 4.0000000000000000, 5.0000000000000000, 7.0000000000000000,
    10.000000000000000, 14.000000000000000, 20.000000000000000, 26.000000000000000,
    30.000000000000000,
};
inline constexpr double bessel_k0[] = {
    7.0236888005623813, 5.9250900873994756, 4.7212447301610949, 3.6235295379295472,
    2.4270690247020166, 1.3724600605442974, 0.92441907122766586, 0.56534710526589563,
    0.42102443824070833, 0.27824764630002698, 0.16549631805699655, 0.12112262554268190,
    0.11389387274953344, 0.10712491837352753, 0.079139933002093644, 0.049255400915817582,
    0.034739504386279248, 0.011159676085853024, 0.0036910983340425943, 0.00042479574186923181,
    1.7780062316167652e-5, 2.7613708239816199e-7, 5.7412378153365243e-10, 1.2498773979850724e-12,
    2.1324774964630564e-14,
};
inline constexpr double bessel_k1[] = {
    999.99623815608555, 333.32369570946642, 99.973894118296246, 33.271487769478063,
    9.8538447808706056, 3.0559920334573251, 1.6564411200033009, 0.86178163447218027,
    0.60190723019723457, 0.37254749563196214, 0.20936248820408249, 0.14940014093158944,
    0.13986588181652243, 0.13099894526215050, 0.094982443845362658, 0.057738398956525935,
    0.040156431128194184, 0.012483498887268431, 0.0040446134454521642, 0.00045418248688489697,
    1.8648773453825585e-5, 2.8583436534402497e-7, 5.8830579695570382e-10, 1.2736907792389236e-12,
    2.1677320018915494e-14,
};
inline constexpr double bessel_k2[] = {
    1999999.5000009716, 222221.72222973168, 19999.500068389410, 2221.7227141698005,
    199.50396464211412, 21.745740283593132, 7.5501835512408694, 2.7198011914463462,
    1.6248388986351775, 0.85139763957996872, 0.41180512770885831, 0.27435353931867106,
    0.25375975456605586, 0.23492876740977192, 0.16173336243284379, 0.092024585328059013,
    0.061510458471742038, 0.017401425529487240, 0.0053089437122234600, 0.00055456216669348808,
    2.1509817006932769e-5, 3.1697056316159413e-7, 6.3295436122922281e-10, 1.3478536117726819e-12,
    2.2769929632558263e-14,
};
inline constexpr double bessel_k3[] = {
    7999999000.0001245, 296295962.96333794, 7999900.0012498820, 296262.96671040956,
    7990.0124304654348, 292.99919581469910, 62.057909529930256, 14.460787591703910,
    7.1012628247379445, 2.9922325404934043, 1.1783157298719844, 0.71217663184168394,
    0.64738539094863415, 0.58939654020804697, 0.37625785677204753, 0.19407111796105780,
    0.12217037575718357, 0.029884924416755671, 0.0082917684152309322, 0.00077107515356689016,
    2.7252700256598692e-5, 3.7639738339019472e-7, 7.1489666920154838e-10, 1.4810528733577978e-12,
    2.4713310636589929e-14,
};
inline constexpr double lgamma_x[] = {
    0.50000000000000000, 1.0000000000000000, 2.0000000000000000, 3.2909944487358058,
    3.7000000000000002, 10.300000000000001,
};
inline constexpr double lgamma_v[] = {
    0.57236494292470009, 0.0, 0.0, 0.97779378048666222,
    1.4280723266653881, 13.482036786138359,
};
inline constexpr double digamma_x[] = {
    1.0000000000000000, 2.0000000000000000, 0.69999999999999996, 2.2909944487358058,
    3.2909944487358058, 7.2999999999999998,
};
inline constexpr double digamma_v[] = {
    -0.57721566490153286, 0.42278433509846714, -1.2200235536979347, 0.59514231111682338,
    1.0316339842205318, 1.9178203356379861,
};
inline constexpr double trigamma_x[] = {
    1.0000000000000000, 0.50000000000000000, 3.2909944487358058, 3.2000000000000002,
    9.6999999999999993,
};
inline constexpr double trigamma_v[] = {
    1.6449340668482264, 4.9348022005446793, 0.35461948149981178, 0.36632119073140077,
    0.10858907302648522,
};
inline constexpr double laguerre_n[] = {
    3.0000000000000000, 5.0000000000000000, 10.000000000000000,
};
inline constexpr double laguerre_alpha[] = {
    1.2909944487358056, 0.50000000000000000, 1.2909944487358056,
};
inline constexpr double laguerre_x[] = {
    1.5000000000000000, 2.2999999999999998, 4.0000000000000000,
};
inline constexpr double laguerre_v[] = {
    -0.93426103615590013, 0.92253599999999974, -1.8237332974802210,
};

}  // namespace bo2d::reference
