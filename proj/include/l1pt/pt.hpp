#pragma once

#include <string>
#include <vector>

#include "l1pt/model.hpp"

// Weak phase-transition characterizations for binary and box l1 recovery,
// their inversion along either axis, and the expected-Gaussian-width
// condition that must vanish on the same curve.
namespace l1pt::pt {

struct PtPoint {
    double alpha = 0.0;
    double beta = 0.0;
    double mu = 1.0;
};

struct CurveResult {
    std::vector<PtPoint> points;
    std::vector<std::string> warnings;  // skipped grid points, one note each
};

// Left-hand side of the binary transition characterization
//   (1-2b) e^{-y^2} / (2 sqrt(pi) a y),  y = erf_inv((1-2a)/(1-2b)).
// > 1 on the success side, < 1 on the failure side, = 1 on the curve.
// Domain: the erf_inv argument must lie in (0,1); alpha -> 1/2 is a pole.
double xi_bin(double alpha, double beta);

// Box analogue with y = erf_inv((1+b-2a)/((2mu-1)(1-b))) and prefactor
// (2mu-1)(1-b). Domain: argument in (-1,1), away from the y = 0 pole.
double xi_box(double alpha, double beta, double mu);

double xi(const ModelParams& p);

// Unique beta with xi(alpha, beta) = 1, solved to |xi - 1| <= 1e-12.
double pt_beta(double alpha, Model model, double mu = 1.0);

// Unique alpha with xi(alpha, beta) = 1.
double pt_alpha(double beta, Model model, double mu = 1.0);

CurveResult pt_curve(Model model, double mu, const std::vector<double>& alpha_grid);

// min over nu >= 0 of the root-mean expected squared Gaussian width of the
// restricted cone, minus sqrt(alpha). Zero exactly on the transition curve,
// negative on the success side.
double expected_width_gap(const ModelParams& p);

}  // namespace l1pt::pt
