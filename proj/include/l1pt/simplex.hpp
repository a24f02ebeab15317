#pragma once

#include <cstddef>
#include <vector>

// Dense two-phase revised simplex for
//     min c'x   s.t.  A x = b,  0 <= x <= u   (u may be +inf)
// with an explicitly maintained basis inverse, Dantzig pricing falling back
// to Bland's rule on stalls, and a weak-duality certificate computed on
// every solve so that correctness does not rest on the pivoting path.
namespace l1pt::lp {

enum class Status { Optimal, Infeasible, IterationLimit, Numerical };

struct Problem {
    std::size_t m = 0;
    std::size_t n = 0;
    std::vector<double> cols;   // column-major, m * n
    std::vector<double> b;      // m
    std::vector<double> c;      // n
    std::vector<double> upper;  // n; +inf when absent

    const double* col(std::size_t j) const { return cols.data() + j * m; }
};

struct Options {
    double feas_tol = 1e-9;
    double opt_tol = 1e-9;
    double pivot_tol = 1e-10;
    // Deterministic rhs perturbation scale (anti-degeneracy); the exact rhs
    // is restored before certificates are computed.
    double perturb = 1e-9;
    int max_iter = 50000;
    int refactor_every = 96;
    int bland_after_stalls = 512;
};

struct Result {
    Status status = Status::Numerical;
    std::vector<double> x;     // n
    double objective = 0.0;
    std::vector<double> dual;  // m simplex multipliers from the final basis
    // certificates
    double primal_infeas = 0.0;  // max |Ax-b| / (1 + max|b|)
    double dual_infeas = 0.0;    // reduced-cost violation beyond tolerance
    double duality_gap = 0.0;    // |c'x - dual objective| / (1 + |c'x|)
    int iterations = 0;
    int phase1_iterations = 0;
    int degenerate_steps = 0;

    bool certified(double tol = 1e-9) const {
        return status == Status::Optimal && primal_infeas <= tol && dual_infeas <= tol &&
               duality_gap <= tol;
    }
};

Result solve(const Problem& p, const Options& opt = {});

}  // namespace l1pt::lp
