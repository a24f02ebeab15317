#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>

// Bracketed scalar root finding and golden-section line search.
namespace l1pt::rootfind {

struct Bracket {
    double lo = 0.0, hi = 0.0;
    double flo = 0.0, fhi = 0.0;
};

// Scan [lo, hi] in `steps` geometric (or linear) panels for a sign change of
// f. Panels where f is non-finite are skipped. Returns the first bracket.
template <class F>
std::optional<Bracket> scan_bracket(F&& f, double lo, double hi, int steps, bool geometric = true) {
    double x_prev = lo;
    double f_prev = f(lo);
    for (int i = 1; i <= steps; ++i) {
        const double t = static_cast<double>(i) / steps;
        const double x = geometric ? lo * std::pow(hi / lo, t) : lo + (hi - lo) * t;
        const double fx = f(x);
        if (std::isfinite(f_prev) && std::isfinite(fx)) {
            if (f_prev == 0.0) return Bracket{x_prev, x_prev, 0.0, 0.0};
            if (f_prev * fx <= 0.0) return Bracket{x_prev, x, f_prev, fx};
        }
        x_prev = x;
        f_prev = fx;
    }
    return std::nullopt;
}

// Brent's method on a sign-changing bracket: inverse quadratic / secant steps
// guarded by bisection. Stops when |f| <= ftol or the bracket shrinks below
// xtol (absolute, plus a few ulps of the iterate).
template <class F>
double brent(F&& f, double a, double b, double fa, double fb, double ftol = 1e-12,
             double xtol = 0.0, int max_iter = 200) {
    if (!(std::isfinite(fa) && std::isfinite(fb)) || fa * fb > 0.0)
        throw std::invalid_argument("brent: invalid bracket");
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;

    double c = a, fc = fa;
    double d = b - a, e = d;
    for (int it = 0; it < max_iter; ++it) {
        if (std::fabs(fc) < std::fabs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol1 = 2.0 * 1.11e-16 * std::fabs(b) + 0.5 * xtol;
        const double xm = 0.5 * (c - b);
        if (std::fabs(fb) <= ftol || std::fabs(xm) <= tol1) return b;

        if (std::fabs(e) >= tol1 && std::fabs(fa) > std::fabs(fb)) {
            double p, q;
            const double s = fb / fa;
            if (a == c) {  // secant
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {  // inverse quadratic interpolation
                const double qq = fa / fc, r = fb / fc;
                p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            p = std::fabs(p);
            if (2.0 * p < std::min(3.0 * xm * q - std::fabs(tol1 * q), std::fabs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += (std::fabs(d) > tol1) ? d : std::copysign(tol1, xm);
        fb = f(b);
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            e = d = b - a;
        }
    }
    return b;
}

// Bracket by sign scan, then polish with brent. Throws if no sign change.
template <class F>
double solve(F&& f, double lo, double hi, int scan_steps = 64, double ftol = 1e-12,
             bool geometric = true) {
    auto br = scan_bracket(f, lo, hi, scan_steps, geometric);
    if (!br) throw std::runtime_error("rootfind::solve: no sign change in scan range");
    if (br->lo == br->hi) return br->lo;
    return brent(f, br->lo, br->hi, br->flo, br->fhi, ftol);
}

// Golden-section minimizer for a unimodal f on [a, b].
template <class F>
double golden_min(F&& f, double a, double b, double xtol = 1e-10) {
    constexpr double kInvPhi = 0.6180339887498948482;
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > xtol) {
        if (fc < fd) {
            b = d; d = c; fd = fc;
            c = b - kInvPhi * (b - a);
            fc = f(c);
        } else {
            a = c; c = d; fc = fd;
            d = a + kInvPhi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

template <class F>
double golden_max(F&& f, double a, double b, double xtol = 1e-10) {
    return golden_min([&](double x) { return -f(x); }, a, b, xtol);
}

// Parabolic refinement of a minimizer estimate. Golden section alone cannot
// localize a smooth minimum beyond ~sqrt(eps); a few central-difference
// parabola fits push the stationary point to ~1e-12 for well-scaled f.
template <class F>
double polish_min(F&& f, double x, double lo, double hi, double h = 1e-5, int iters = 3) {
    for (int it = 0; it < iters; ++it) {
        const double hl = std::min({h, x - lo, hi - x});
        if (!(hl > 0.0)) break;
        const double fm = f(x - hl), f0 = f(x), fp = f(x + hl);
        const double denom = fp - 2.0 * f0 + fm;
        if (!(denom > 0.0)) break;  // not locally convex at this scale
        double step = -0.5 * hl * (fp - fm) / denom;
        if (step > hl) step = hl;
        if (step < -hl) step = -hl;
        const double xn = std::min(hi, std::max(lo, x + step));
        if (xn == x) break;
        x = xn;
    }
    return x;
}

template <class F>
double polish_max(F&& f, double x, double lo, double hi, double h = 1e-5, int iters = 3) {
    return polish_min([&](double v) { return -f(v); }, x, lo, hi, h, iters);
}

}  // namespace l1pt::rootfind
