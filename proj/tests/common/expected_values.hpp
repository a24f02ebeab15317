#pragma once

#include <cstddef>

// Frozen expected values for the rate-function tables (nine optimizer
// quantities at five alpha values per model) and the simulation baselines.
// These are the published reference numbers the implementation must
// reproduce to +-5e-4.
namespace expected {

struct RateTableRow {
    double alpha;
    double y1, gamma_g, a_cone, y2, nu, a0, c3, gamma, rate;
};

// beta = 0.22933, binary model.
inline constexpr RateTableRow kBinaryTable[5] = {
    {0.30, 0.3923, 0.1026, 0.2347, 0.2431, 0.5548, 1.6137, -0.5445, 0.1697, -0.0234},
    {0.35, 0.3666, 0.0866, 0.2234, 0.2907, 0.5185, 1.2611, -0.2770, 0.2346, -0.0058},
    {0.40, 0.3401, 0.0723, 0.2120, 0.3401, 0.4810, 1.0000, 0.0000, 0.3162, 0.0000},
    {0.45, 0.3127, 0.0596, 0.2006, 0.3910, 0.4422, 0.7997, 0.3023, 0.4194, -0.0056},
    {0.50, 0.2846, 0.0484, 0.1892, 0.4432, 0.4025, 0.6421, 0.6471, 0.5506, -0.0223},
};

// beta = 0.18469, mu = 0.85, box model.
inline constexpr RateTableRow kBoxTable[5] = {
    {0.40, 0.3588, 0.0607, 0.2806, 0.1994, 0.5074, 1.7994, -0.7866, 0.1757, -0.0284},
    {0.45, 0.3270, 0.0504, 0.2708, 0.2473, 0.4624, 1.3223, -0.3797, 0.2537, -0.0069},
    {0.50, 0.2951, 0.0414, 0.2612, 0.2951, 0.4173, 1.0000, 0.0000, 0.3536, 0.0000},
    {0.55, 0.2635, 0.0336, 0.2515, 0.3429, 0.3726, 0.7684, 0.3952, 0.4825, -0.0066},
    {0.60, 0.2321, 0.0269, 0.2418, 0.3904, 0.3282, 0.5945, 0.8424, 0.6514, -0.0262},
};

struct SimCell {
    double alpha;
    std::size_t n, m, k;
    double i_err_sim;  // published simulated decay rates
    double i_cor_sim;
};

// Binary simulation baseline, beta = 0.22933.
inline constexpr SimCell kBinarySim[5] = {
    {0.30, 140, 42, 32, -0.0001, -0.0309},
    {0.35, 300, 105, 69, -0.0001, -0.0110},
    {0.40, 300, 120, 69, -0.0029, -0.0018},
    {0.45, 300, 135, 69, -0.0130, -0.0001},
    {0.50, 140, 70, 32, -0.0359, -0.0000},
};

// Box simulation baseline, beta = 0.18469, mu = 0.85.
inline constexpr SimCell kBoxSim[5] = {
    {0.40, 125, 50, 23, -0.0000, -0.0407},
    {0.45, 300, 135, 55, -0.0001, -0.0118},
    {0.50, 300, 150, 55, -0.0030, -0.0017},
    {0.55, 300, 165, 55, -0.0140, -0.0001},
    {0.60, 125, 75, 23, -0.0463, -0.0000},
};

inline constexpr double kBinaryBeta = 0.22933;
inline constexpr double kBoxBeta = 0.18469;
inline constexpr double kBoxMu = 0.85;

}  // namespace expected
