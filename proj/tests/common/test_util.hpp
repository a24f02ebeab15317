#pragma once

#include <cmath>
#include <algorithm>
#include <functional>
#include <vector>

// Shared test-only numeric helpers. These are independent oracles: nothing
// here calls back into the closed-form code paths they are used to check.
namespace testutil {

inline bool close_abs(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

inline bool close_rel(double a, double b, double tol) {
    return std::fabs(a - b) <= tol * std::max(1.0, std::max(std::fabs(a), std::fabs(b)));
}

// Composite Simpson rule on [a, b] with n panels (n even).
inline double simpson(const std::function<double(double)>& f, double a, double b, int n) {
    if (n % 2) ++n;
    const double h = (b - a) / n;
    double s = f(a) + f(b);
    for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
}

// Gauss-Hermite nodes/weights (weight e^{-x^2}) by Golub-Welsch: the Jacobi
// matrix of the Hermite recurrence is symmetric tridiagonal with zero
// diagonal and off-diagonals sqrt(j/2); implicit-shift QL gives eigenvalues
// (nodes) and first eigenvector components (weights). Stable at any n.
struct GaussHermite {
    std::vector<double> x, w;
    explicit GaussHermite(int n) {
        x.assign(n, 0.0);
        std::vector<double> e(n, 0.0), q(n, 0.0);
        for (int j = 1; j < n; ++j) e[j - 1] = std::sqrt(j / 2.0);
        q[0] = 1.0;  // first row of the accumulating eigenvector matrix
        auto sign = [](double a, double b) { return b >= 0.0 ? std::fabs(a) : -std::fabs(a); };
        for (int l = 0; l < n; ++l) {
            for (int iter = 0; iter < 60; ++iter) {
                int m = l;
                for (; m < n - 1; ++m) {
                    const double dd = std::fabs(x[m]) + std::fabs(x[m + 1]);
                    if (std::fabs(e[m]) <= 1e-16 * dd) break;
                }
                if (m == l) break;
                double g = (x[l + 1] - x[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = x[m] - x[l] + e[l] / (g + sign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                for (int i = m - 1; i >= l; --i) {
                    double f = s * e[i], b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        x[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = x[i + 1] - p;
                    r = (x[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    x[i + 1] = g + p;
                    g = c * r - b;
                    f = q[i + 1];
                    q[i + 1] = s * q[i] + c * f;
                    q[i] = c * q[i] - s * f;
                }
                x[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        }
        // Sort by node and form weights sqrt(pi) * q0^2.
        std::vector<int> idx(n);
        for (int i = 0; i < n; ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](int a, int b) { return x[a] < x[b]; });
        std::vector<double> xs(n);
        w.assign(n, 0.0);
        for (int i = 0; i < n; ++i) {
            xs[i] = x[idx[i]];
            w[i] = 1.7724538509055160273 * q[idx[i]] * q[idx[i]];
        }
        x.swap(xs);
    }

    // E f(h) for standard normal h.
    double gauss_mean(const std::function<double(double)>& f) const {
        double s = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) s += w[i] * f(x[i] * 1.4142135623730951);
        return s * 0.5641895835477563;  // 1/sqrt(pi)
    }
};

// Central second difference along a direction, for curvature-sign checks.
inline double second_diff(const std::function<double(double)>& f, double x, double h) {
    return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

}  // namespace testutil
