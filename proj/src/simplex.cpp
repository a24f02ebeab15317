#include "l1pt/simplex.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "l1pt/kernels.hpp"

namespace l1pt::lp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Working state. Variables 0..n-1 are structural, n..n+m-1 artificial.
// Artificial column j-n is sign(b_i) * e_i, so the initial basis inverse is
// diagonal and the initial basic point |b| is feasible.
struct Tableau {
    const Problem& p;
    const Options& opt;
    std::size_t m, n, total;

    std::vector<double> binv;      // m*m row-major inverse of basis matrix
    std::vector<int> basis;        // var occupying each row
    std::vector<int> pos_in_basis; // var -> row, or -1
    std::vector<char> at_upper;    // nonbasic rest position
    std::vector<double> xb;        // basic values
    std::vector<double> ub;        // bounds incl. artificials
    std::vector<double> cost;      // current phase objective
    std::vector<double> art_sign;  // sign of b_i baked into artificial col
    std::vector<double> b_work;    // rhs actually solved against (perturbed)
    std::vector<double> y;         // duals
    std::vector<double> w;         // entering column in basis coordinates
    int iterations = 0;
    int degenerate = 0;
    int stalls = 0;

    explicit Tableau(const Problem& prob, const Options& o)
        : p(prob), opt(o), m(prob.m), n(prob.n), total(prob.n + prob.m) {
        binv.assign(m * m, 0.0);
        basis.resize(m);
        pos_in_basis.assign(total, -1);
        at_upper.assign(total, 0);
        xb.resize(m);
        ub = p.upper;
        ub.resize(total, kInf);
        cost.assign(total, 0.0);
        art_sign.resize(m);
        y.resize(m);
        w.resize(m);
        // Deterministic tiny rhs perturbation breaks the massive degeneracy
        // of all-zero rows (the anti-cycling workhorse; Bland is the backup).
        // Reduced costs do not involve b, so dual feasibility of the final
        // basis carries over to the exact problem when b is restored.
        const double scale = 1.0 + kern::max_abs(p.b.data(), m);
        b_work = p.b;
        double frac = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            frac += 0.6180339887498949;
            if (frac >= 1.0) frac -= 1.0;
            b_work[i] += opt.perturb * scale * (1.0 + frac);
        }
        for (std::size_t i = 0; i < m; ++i) {
            art_sign[i] = b_work[i] < 0.0 ? -1.0 : 1.0;
            basis[i] = static_cast<int>(n + i);
            pos_in_basis[n + i] = static_cast<int>(i);
            binv[i * m + i] = art_sign[i];
            xb[i] = std::fabs(b_work[i]);
        }
    }

    void restore_exact_rhs() {
        b_work = p.b;
        recompute_xb();
    }

    double* binv_row(std::size_t i) { return binv.data() + i * m; }

    double col_entry(std::size_t j, std::size_t i) const {
        return j < n ? p.cols[j * m + i] : (j - n == i ? art_sign[i] : 0.0);
    }

    // w = binv * a_j
    void ftran(std::size_t j) {
        if (j < n) {
            const double* a = p.col(j);
            for (std::size_t i = 0; i < m; ++i) w[i] = kern::dot(binv.data() + i * m, a, m);
        } else {
            const std::size_t r = j - n;
            for (std::size_t i = 0; i < m; ++i) w[i] = art_sign[r] * binv[i * m + r];
        }
    }

    void compute_duals() {
        for (std::size_t i = 0; i < m; ++i) y[i] = 0.0;
        for (std::size_t r = 0; r < m; ++r) {
            const double cb = cost[basis[r]];
            if (cb != 0.0) kern::axpy(cb, binv.data() + r * m, y.data(), m);
        }
    }

    double reduced_cost(std::size_t j) const {
        if (j < n) return cost[j] - kern::dot(y.data(), p.col(j), m);
        return cost[j] - y[j - n] * art_sign[j - n];
    }

    // Rebuild binv from scratch (Gauss-Jordan with partial pivoting) and
    // recompute xb. Returns false when the basis matrix is singular.
    bool refactorize() {
        std::vector<double> work(m * m);
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t i = 0; i < m; ++i) work[i * m + r] = col_entry(basis[r], i);
        std::vector<double> inv(m * m, 0.0);
        for (std::size_t i = 0; i < m; ++i) inv[i * m + i] = 1.0;
        for (std::size_t col = 0; col < m; ++col) {
            std::size_t piv = col;
            double best = std::fabs(work[col * m + col]);
            for (std::size_t i = col + 1; i < m; ++i) {
                const double v = std::fabs(work[i * m + col]);
                if (v > best) {
                    best = v;
                    piv = i;
                }
            }
            if (best < 1e-12) return false;
            if (piv != col) {
                for (std::size_t t = 0; t < m; ++t) {
                    std::swap(work[piv * m + t], work[col * m + t]);
                    std::swap(inv[piv * m + t], inv[col * m + t]);
                }
            }
            const double s = 1.0 / work[col * m + col];
            kern::scal(s, work.data() + col * m, m);
            kern::scal(s, inv.data() + col * m, m);
            for (std::size_t i = 0; i < m; ++i) {
                if (i == col) continue;
                const double f = work[i * m + col];
                if (f != 0.0) {
                    kern::axpy(-f, work.data() + col * m, work.data() + i * m, m);
                    kern::axpy(-f, inv.data() + col * m, inv.data() + i * m, m);
                }
            }
        }
        binv.swap(inv);
        recompute_xb();
        return true;
    }

    void recompute_xb() {
        std::vector<double> rhs(b_work);
        for (std::size_t j = 0; j < total; ++j) {
            if (pos_in_basis[j] >= 0 || !at_upper[j] || ub[j] == 0.0) continue;
            if (j < n)
                kern::axpy(-ub[j], p.col(j), rhs.data(), m);
            else
                rhs[j - n] -= ub[j] * art_sign[j - n];
        }
        for (std::size_t i = 0; i < m; ++i) xb[i] = kern::dot(binv.data() + i * m, rhs.data(), m);
    }

    double nonbasic_value(std::size_t j) const { return at_upper[j] ? ub[j] : 0.0; }

    // One simplex iteration. Returns: 0 optimal, 1 pivoted/flipped,
    // -1 numerical trouble, -2 unbounded.
    int iterate(bool allow_artificial_entering) {
        compute_duals();
        const bool bland = stalls > opt.bland_after_stalls;
        std::size_t enter = total;
        double best_viol = opt.opt_tol;
        double enter_dir = 1.0;
        const std::size_t scan_end = allow_artificial_entering ? total : n;
        for (std::size_t j = 0; j < scan_end; ++j) {
            if (pos_in_basis[j] >= 0 || ub[j] == 0.0) continue;
            const double d = reduced_cost(j);
            double viol = 0.0, dir = 1.0;
            if (!at_upper[j] && d < -opt.opt_tol) {
                viol = -d;
                dir = 1.0;
            } else if (at_upper[j] && d > opt.opt_tol) {
                viol = d;
                dir = -1.0;
            } else {
                continue;
            }
            if (bland) {
                enter = j;
                enter_dir = dir;
                break;
            }
            if (viol > best_viol) {
                best_viol = viol;
                enter = j;
                enter_dir = dir;
            }
        }
        if (enter == total) return 0;

        ftran(enter);

        // Ratio test: entering moves by t >= 0 in direction enter_dir;
        // basic i changes by -enter_dir * w[i] * t. First pass finds the
        // tightest limit, second picks the largest pivot among near-ties.
        auto row_limit = [&](std::size_t i, double& to_upper) {
            const double g = enter_dir * w[i];
            if (g > opt.pivot_tol) {
                to_upper = 0.0;
                return std::max(0.0, xb[i] / g);
            }
            if (g < -opt.pivot_tol) {
                const double cap = ub[basis[i]];
                if (cap < kInf) {
                    to_upper = cap;
                    return std::max(0.0, (cap - xb[i]) / (-g));
                }
            }
            return kInf;
        };
        double t_max = ub[enter];  // bound-flip limit (can be inf)
        for (std::size_t i = 0; i < m; ++i) {
            double dummy;
            t_max = std::min(t_max, row_limit(i, dummy));
        }
        if (t_max == kInf) return -2;
        int leave_row = -1;
        double leave_to_upper = 0.0;
        const double tie = t_max + 1e-9 * (1.0 + t_max);
        if (bland) {
            // Smallest basic variable index among the tied rows; together
            // with smallest-index entering this is Bland's anti-cycling rule.
            int best_var = std::numeric_limits<int>::max();
            for (std::size_t i = 0; i < m; ++i) {
                double to_upper;
                if (row_limit(i, to_upper) <= tie && basis[i] < best_var) {
                    best_var = basis[i];
                    leave_row = static_cast<int>(i);
                    leave_to_upper = to_upper;
                }
            }
        } else {
            // Prefer kicking artificials out, then the largest pivot.
            double best_pivot = 0.0;
            bool best_art = false;
            for (std::size_t i = 0; i < m; ++i) {
                double to_upper;
                if (row_limit(i, to_upper) > tie) continue;
                const bool is_art = basis[i] >= static_cast<int>(n);
                const double piv = std::fabs(w[i]);
                if (leave_row < 0 || (is_art && !best_art) ||
                    (is_art == best_art && piv > best_pivot)) {
                    best_pivot = piv;
                    best_art = is_art;
                    leave_row = static_cast<int>(i);
                    leave_to_upper = to_upper;
                }
            }
        }
        if (leave_row >= 0) {
            double dummy;
            t_max = std::min(t_max, row_limit(static_cast<std::size_t>(leave_row), dummy));
        }
        if (t_max < 1e-12) {
            ++stalls;
            ++degenerate;
        } else {
            stalls = 0;
        }

        if (leave_row < 0) {
            // Bound flip: entering runs to its other bound, basis unchanged.
            for (std::size_t i = 0; i < m; ++i) xb[i] -= t_max * enter_dir * w[i];
            at_upper[enter] = !at_upper[enter];
            ++iterations;
            return 1;
        }

        const std::size_t r = static_cast<std::size_t>(leave_row);
        const double piv = w[r];
        if (std::fabs(piv) < opt.pivot_tol) return -1;

        const int leaving = basis[r];
        pos_in_basis[leaving] = -1;
        at_upper[leaving] = leave_to_upper > 0.0;

        for (std::size_t i = 0; i < m; ++i)
            if (i != r) xb[i] -= t_max * enter_dir * w[i];
        xb[r] = nonbasic_value(enter) + enter_dir * t_max;

        basis[r] = static_cast<int>(enter);
        pos_in_basis[enter] = static_cast<int>(r);
        at_upper[enter] = 0;

        // binv <- E * binv with the eta column derived from w.
        const double inv_piv = 1.0 / piv;
        kern::scal(inv_piv, binv_row(r), m);
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r) continue;
            const double f = w[i];
            if (f != 0.0) kern::axpy(-f, binv_row(r), binv_row(i), m);
        }
        ++iterations;
        return 1;
    }

    // Run simplex until optimal for the loaded cost vector.
    Status run(bool allow_artificial_entering) {
        int since_refactor = 0;
        while (iterations < opt.max_iter) {
            const int rc = iterate(allow_artificial_entering);
            if (rc == 0) return Status::Optimal;
            if (rc == -2) return Status::Numerical;  // bounded problems only
            if (rc == -1) {
                if (!refactorize()) return Status::Numerical;
                since_refactor = 0;
                continue;
            }
            if (++since_refactor >= opt.refactor_every) {
                if (!refactorize()) return Status::Numerical;
                since_refactor = 0;
            }
        }
        return Status::IterationLimit;
    }
};

}  // namespace

Result solve(const Problem& p, const Options& opt) {
    if (p.cols.size() != p.m * p.n || p.b.size() != p.m || p.c.size() != p.n ||
        p.upper.size() != p.n)
        throw std::invalid_argument("lp::solve: inconsistent problem sizes");

    Result res;
    Tableau t(p, opt);
    const double bscale = 1.0 + kern::max_abs(p.b.data(), p.m);

    // Phase 1: minimize the artificial mass.
    for (std::size_t j = 0; j < p.m; ++j) t.cost[p.n + j] = 1.0;
    Status st = t.run(false);
    res.iterations = t.iterations;
    res.phase1_iterations = t.iterations;
    if (st != Status::Optimal) {
        res.status = st;
        res.degenerate_steps = t.degenerate;
        return res;
    }
    double art_mass = 0.0;
    for (std::size_t i = 0; i < t.m; ++i)
        if (t.basis[i] >= static_cast<int>(p.n)) art_mass += t.xb[i];
    for (std::size_t j = 0; j < p.m; ++j)
        if (t.pos_in_basis[p.n + j] < 0 && t.at_upper[p.n + j]) art_mass += t.ub[p.n + j];
    const double art_slack =
        opt.feas_tol * bscale + 4.0 * opt.perturb * bscale * static_cast<double>(p.m);
    if (art_mass > art_slack) {
        res.status = Status::Infeasible;
        return res;
    }

    // Pin artificials to zero; drive basic ones out where a pivot exists.
    for (std::size_t j = 0; j < p.m; ++j) t.ub[p.n + j] = 0.0;
    for (std::size_t i = 0; i < t.m; ++i) {
        if (t.basis[i] < static_cast<int>(p.n)) continue;
        for (std::size_t j = 0; j < p.n; ++j) {
            if (t.pos_in_basis[j] >= 0 || t.ub[j] == 0.0) continue;
            t.ftran(j);
            if (std::fabs(t.w[i]) > 1e-7) {
                const int leaving = t.basis[i];
                t.pos_in_basis[leaving] = -1;
                t.at_upper[leaving] = 0;
                t.basis[i] = static_cast<int>(j);
                t.pos_in_basis[j] = static_cast<int>(i);
                const double xj = t.nonbasic_value(j);
                t.at_upper[j] = 0;
                const double inv_piv = 1.0 / t.w[i];
                kern::scal(inv_piv, t.binv_row(i), t.m);
                for (std::size_t r = 0; r < t.m; ++r)
                    if (r != i && t.w[r] != 0.0) kern::axpy(-t.w[r], t.binv_row(i), t.binv_row(r), t.m);
                t.xb[i] = xj;  // degenerate pivot, value unchanged
                break;
            }
        }
    }
    if (!t.refactorize()) {
        res.status = Status::Numerical;
        return res;
    }

    // Phase 2: real costs.
    for (std::size_t j = 0; j < p.n; ++j) t.cost[j] = p.c[j];
    for (std::size_t j = 0; j < p.m; ++j) t.cost[p.n + j] = 0.0;
    t.stalls = 0;
    st = t.run(false);
    res.iterations = t.iterations;
    res.degenerate_steps = t.degenerate;
    if (st != Status::Optimal) {
        res.status = st;
        return res;
    }
    if (!t.refactorize()) {
        res.status = Status::Numerical;
        return res;
    }
    t.restore_exact_rhs();

    // Extract solution and certificates.
    res.x.assign(p.n, 0.0);
    for (std::size_t j = 0; j < p.n; ++j)
        if (t.pos_in_basis[j] < 0) res.x[j] = t.nonbasic_value(j);
    for (std::size_t i = 0; i < t.m; ++i)
        if (t.basis[i] < static_cast<int>(p.n)) res.x[t.basis[i]] = t.xb[i];
    for (std::size_t j = 0; j < p.n; ++j) {
        if (res.x[j] < 0.0 && res.x[j] > -opt.feas_tol) res.x[j] = 0.0;
        if (res.x[j] > t.ub[j] && res.x[j] < t.ub[j] + opt.feas_tol) res.x[j] = t.ub[j];
    }
    res.objective = kern::dot(p.c.data(), res.x.data(), p.n);

    std::vector<double> resid(p.b);
    for (std::size_t j = 0; j < p.n; ++j)
        if (res.x[j] != 0.0) kern::axpy(-res.x[j], p.col(j), resid.data(), p.m);
    res.primal_infeas = kern::max_abs(resid.data(), p.m) / bscale;

    t.compute_duals();
    res.dual = t.y;
    double dual_obj = kern::dot(t.y.data(), p.b.data(), p.m);
    double dual_viol = 0.0;
    for (std::size_t j = 0; j < p.n; ++j) {
        const double d = p.c[j] - kern::dot(t.y.data(), p.col(j), p.m);
        if (t.ub[j] == kInf) {
            dual_viol = std::max(dual_viol, -d);
        } else if (d < 0.0) {
            dual_obj += t.ub[j] * d;  // mu_j = -d charges the upper bound
        }
    }
    res.dual_infeas = std::max(0.0, dual_viol);
    res.duality_gap = std::fabs(res.objective - dual_obj) / (1.0 + std::fabs(res.objective));
    res.status = Status::Optimal;
    return res;
}

}  // namespace l1pt::lp
