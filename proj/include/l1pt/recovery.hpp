#pragma once

#include <vector>

#include "l1pt/instance.hpp"
#include "l1pt/simplex.hpp"

// The two recovery oracles: solve the box l1 program and compare against
// the planted vector, or test the null-space failure condition directly.
namespace l1pt::recovery {

struct BoxL1Result {
    std::vector<double> x;  // argmin of ||x||_1 s.t. Ax = y, 0 <= x <= 1
    lp::Result lp;
};

// min sum(x) s.t. Ax = y, 0 <= x <= 1 (the objective equals ||x||_1 on the
// feasible box). Throws if the solver fails or the certificate exceeds tol.
BoxL1Result solve_box_l1(const instance::ProblemInstance& inst, double tol = 1e-9);

// Exact-recovery comparison: max |x - x_true| <= success_tol.
bool matches_planted(const instance::ProblemInstance& inst, const std::vector<double>& x,
                     double success_tol = 1e-6);

struct NullSpaceResult {
    bool failure = false;   // a null-space witness with non-positive sum exists
    double optimum = 0.0;   // min sum(w) over the normalized sign cone
    lp::Result lp;
};

// Cone program over w in null(A): w >= 0 on planted zeros, w <= 0 on planted
// ones, free on interior entries, normalized to unit l1 mass. Failure of
// recovery is equivalent to the minimum of sum(w) being <= tol. A trivial
// null space (m = n) reports no failure.
NullSpaceResult null_space_failure(const instance::ProblemInstance& inst, double tol = 1e-9);

}  // namespace l1pt::recovery
