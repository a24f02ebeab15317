#pragma once

#include <string>
#include <vector>

#include "l1pt/model.hpp"

// Closed-form large-deviation machinery: the f1 functions, the scalar fixed
// point determining y2, recovery of every optimizer variable, and the rate
// function for both models and both tails.
namespace l1pt::ldp {

enum class Tail { Upper, Lower, AtTransition };

struct LdpSolution {
    double y1 = 0.0;       // erf_inv of the f1 ratio
    double y2 = 0.0;       // fixed-point root
    double nu = 0.0;       // sqrt(2) * y1
    double a0 = 0.0;       // y1 / y2
    double c3 = 0.0;       // (1 - a0^2) sqrt(alpha) / a0
    double gamma = 0.0;    // sqrt(alpha) / (2 a0)
    double gamma_g = 0.0;  // geometric split weight at y_i = y2
    double a_cone = 0.0;   // angle ratio (binary or box variant)
    double rate = 0.0;     // <= 0, zero exactly on the transition curve
    Tail tail = Tail::AtTransition;
};

// f1(y; alpha, beta) for the binary model; the characterization uses both
// f1(y2; alpha, beta) and f1(-y2; alpha, 1-beta). Stable for |y| <= 25.
double f1_bin(double y, double alpha, double beta);

// Box variant with weight mu; the mirror call is f1_box(-y2, alpha, beta,
// 1-mu). Throws on the denominator pole.
double f1_box(double y, double alpha, double beta, double mu);

// LHS - 1 of the scalar fixed-point equation in y2. Throws when the f1
// ratio leaves (-1,1) (treated as infeasible by the bracket scan).
double fixed_point_residual(double y2, const ModelParams& p);

// Solve the fixed point by bracketed root finding (geometric scan of
// (1e-6, 10) in 256 steps, residual tolerance 1e-12), then recover every
// derived variable. Throws when no root exists or a pole is hit.
LdpSolution solve_ldp(const ModelParams& p);

// Rate of exponential decay: lim log(P_err)/n above the transition,
// lim log(P_cor)/n below it. Equals solve_ldp(p).rate.
double rate_function(const ModelParams& p);

struct RatePoint {
    double alpha = 0.0;
    LdpSolution sol;
};

struct RateCurve {
    std::vector<RatePoint> rows;
    std::vector<std::string> warnings;
};

RateCurve rate_curve(double beta, double mu, Model model, const std::vector<double>& alpha_grid);

// Stationarity identities shared with the geometric oracle: gamma_g and the
// cone angle ratio expressed through y_i.
double gamma_g_from_yi(const ModelParams& p, double yi);
double a_cone_from_gamma_g(const ModelParams& p, double gamma_g);

}  // namespace l1pt::ldp
