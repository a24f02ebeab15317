#include "l1pt/recovery.hpp"

#include <cmath>
#include <cstring>
#include <limits>
#include <stdexcept>

#include "l1pt/kernels.hpp"

namespace l1pt::recovery {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

BoxL1Result solve_box_l1(const instance::ProblemInstance& inst, double tol) {
    const std::size_t m = inst.dims.m, n = inst.dims.n;
    lp::Problem p;
    p.m = m;
    p.n = n;
    p.cols = inst.a;
    p.b = inst.y;
    p.c.assign(n, 1.0);
    p.upper.assign(n, 1.0);

    // Generic right-hand sides need no anti-degeneracy perturbation, and a
    // perturbed nearly-square system can turn infeasible when the planted
    // solution pins most bounds.
    lp::Options opt;
    opt.perturb = 0.0;
    BoxL1Result out;
    out.lp = lp::solve(p, opt);
    if (out.lp.status != lp::Status::Optimal)
        throw std::runtime_error("solve_box_l1: solver did not reach optimality");
    if (!out.lp.certified(tol > 1e-9 ? tol : 1e-9))
        throw std::runtime_error("solve_box_l1: optimality certificate failed");

    // The planted vector is feasible, so the optimum cannot exceed its mass.
    const double planted = kern::sum(inst.x_true.data(), n);
    if (out.lp.objective > planted + tol * (1.0 + planted))
        throw std::runtime_error("solve_box_l1: objective above the planted feasible value");

    out.x = out.lp.x;
    return out;
}

bool matches_planted(const instance::ProblemInstance& inst, const std::vector<double>& x,
                     double success_tol) {
    double dev = 0.0;
    for (std::size_t j = 0; j < inst.dims.n; ++j)
        dev = std::max(dev, std::fabs(x[j] - inst.x_true[j]));
    return dev <= success_tol;
}

NullSpaceResult null_space_failure(const instance::ProblemInstance& inst, double tol) {
    const std::size_t m = inst.dims.m, n = inst.dims.n;

    // Variables: one nonnegative variable per edge entry (sign baked into the
    // column), a nonnegative pair per interior entry. Rows: Aw = 0 plus the
    // unit-l1 normalization row.
    std::size_t n_interior = 0;
    for (auto e : inst.pattern)
        if (e == instance::Entry::Interior) ++n_interior;
    const std::size_t nv = n + n_interior;
    const std::size_t rows = m + 1;

    lp::Problem p;
    p.m = rows;
    p.n = nv;
    p.cols.assign(rows * nv, 0.0);
    p.b.assign(rows, 0.0);
    p.b[m] = 1.0;
    p.c.assign(nv, 0.0);
    p.upper.assign(nv, kInf);

    std::size_t v = 0;
    auto put_col = [&](const double* a_col, double sign) {
        double* dst = p.cols.data() + v * rows;
        for (std::size_t i = 0; i < m; ++i) dst[i] = sign * a_col[i];
        dst[m] = 1.0;        // every variable carries unit l1 weight
        p.c[v] = sign;       // contribution of this variable to sum(w)
        ++v;
    };
    for (std::size_t j = 0; j < n; ++j) {
        switch (inst.pattern[j]) {
            case instance::Entry::Zero: put_col(inst.col(j), +1.0); break;
            case instance::Entry::One: put_col(inst.col(j), -1.0); break;
            case instance::Entry::Interior:
                put_col(inst.col(j), +1.0);
                put_col(inst.col(j), -1.0);
                break;
        }
    }

    NullSpaceResult out;
    out.lp = lp::solve(p);
    if (out.lp.status == lp::Status::Infeasible) {
        // Trivial null space: no normalized witness exists at all.
        out.failure = false;
        out.optimum = kInf;
        return out;
    }
    if (out.lp.status != lp::Status::Optimal)
        throw std::runtime_error("null_space_failure: solver did not reach optimality");
    if (!out.lp.certified(1e-9))
        throw std::runtime_error("null_space_failure: optimality certificate failed");
    out.optimum = out.lp.objective;
    out.failure = out.optimum <= tol;
    return out;
}

}  // namespace l1pt::recovery
