#pragma once

#include "l1pt/model.hpp"

// Independent numeric optimization oracles. Nothing here reuses the
// closed-form fixed point: agreement between these optimizers and the
// analytic solution is the cross-check, so they must stay separate paths.
namespace l1pt::oracle {

// H(x) = x log x + (1-x) log(1-x) on [0,1], endpoint values 0 by continuity.
double entropy(double x);

struct ZetaProbPoint {
    double c3 = 0.0;
    double nu = 0.0;
    double a0 = 0.0;
    double value = 0.0;
};

// Probabilistic exponent zeta(c3, nu, a0) with the spherical term carried by
// gamma-hat(c3); one expression serves both tails (the lower tail is the
// same function at c3 < 0, a0 > 1). Returns +inf outside the representable
// region so minimizers reject it naturally.
double zeta_prob(const ModelParams& p, double c3, double nu, double a0);

// Nested line-search optimization of zeta_prob: min over c3 >= 0 of the
// inner (nu, a0 <= 1) minimum above the transition, min over c3 <= 0 of the
// inner (nu, a0 >= 1) maximum below it. The tail is classified by the sign
// of the expected-width gap. Five inner sub-bracket starts guard against a
// non-unimodal inner section.
ZetaProbPoint minimize_zeta_prob(const ModelParams& p);

struct GeomValue {
    double com = 0.0;
    double internal = 0.0;
    double external = 0.0;
    double total() const { return com + internal + external; }
};

// The three-part geometric exponent at explicit (gamma_g, y_e, y_i).
GeomValue zeta_geom(const ModelParams& p, double gamma_g, double y_e, double y_i);

struct GeometryParts {
    double gamma_g = 0.0;
    double y_i = 0.0;
    double y_e = 0.0;
    double psi_com = 0.0;
    double psi_int = 0.0;
    double psi_ext = 0.0;
    // com + int + ext. Numerically this is the combination that matches the
    // closed-form rate in BOTH tails (see README on the lower-tail sign).
    double psi_net = 0.0;
    // com + int - ext, the printed binary lower-tail combination; kept so
    // the discrepancy stays visible.
    double psi_net_alt = 0.0;
};

// Admissible gamma_g interval for the geometric program.
void gamma_g_range(const ModelParams& p, double& lo, double& hi);

// max over gamma_g of [psi_com + min_{y_i} int + max_{y_e} ext] by nested
// golden-section searches (each axis is provably unimodal).
GeometryParts solve_geom(const ModelParams& p);

}  // namespace l1pt::oracle
