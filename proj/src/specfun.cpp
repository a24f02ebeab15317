#include "l1pt/specfun.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace l1pt::specfun {

namespace {

constexpr double kTwoOverSqrtPi = 1.1283791670955125738961589031;  // 2/sqrt(pi)
constexpr double kInvSqrtPi = 0.5641895835477562869480794516;      // 1/sqrt(pi)

void require_finite(double x, const char* msg) {
    if (!std::isfinite(x)) throw std::domain_error(msg);
}

// Laplace continued fraction for erfcx on x >= 4, modified Lentz.
// sqrt(pi) e^{x^2} erfc(x) = 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
double erfcx_cf(double x) {
    const double tiny = 1e-300;
    double f = x;
    if (f == 0.0) f = tiny;
    double c = f, d = 0.0;
    for (int k = 1; k <= 80; ++k) {
        const double a = 0.5 * k;
        d = x + a * d;
        if (d == 0.0) d = tiny;
        c = x + a / c;
        if (c == 0.0) c = tiny;
        d = 1.0 / d;
        const double delta = c * d;
        f *= delta;
        if (std::fabs(delta - 1.0) < 1e-17) break;
    }
    return kInvSqrtPi / f;
}

}  // namespace

double erf(double x) {
    require_finite(x, "erf: non-finite argument");
    return std::erf(x);
}

double erfc(double x) {
    require_finite(x, "erfc: non-finite argument");
    return std::erfc(x);
}

double erfcx(double x) {
    require_finite(x, "erfcx: non-finite argument");
    if (x < 0.0) {
        // erfcx(x) = 2 e^{x^2} - erfcx(-x); no cancellation since 2e^{x^2} >= 2.
        if (x < -26.6) return std::numeric_limits<double>::infinity();
        return 2.0 * std::exp(x * x) - erfcx(-x);
    }
    if (x <= 4.0) return std::exp(x * x) * std::erfc(x);
    return erfcx_cf(x);
}

double erf_inv(double p) {
    require_finite(p, "erf_inv: non-finite argument");
    if (p <= -1.0 || p >= 1.0) throw std::domain_error("erf_inv: argument outside (-1, 1)");
    if (p == 0.0) return 0.0;

    const double a = std::fabs(p);
    double x;
    if (a <= 0.7) {
        // Blair-style rational approximation in p^2.
        const double z = p * p;
        const double num = p * (((-0.140543331 * z + 0.914624893) * z - 1.645349621) * z + 0.886226899);
        const double den = (((0.012229801 * z - 0.329097515) * z + 1.442710462) * z - 2.118377725) * z + 1.0;
        x = num / den;
    } else {
        const double z = std::sqrt(-std::log(0.5 * (1.0 - a)));
        const double num = ((1.641345311 * z + 3.429567803) * z - 1.624906493) * z - 1.970840454;
        const double den = (1.637067800 * z + 3.543889200) * z + 1.0;
        x = std::copysign(num / den, p);
    }
    // Two Newton steps on erf(x) - p bring the guess to full precision.
    for (int it = 0; it < 2; ++it) {
        const double r = std::erf(x) - p;
        x -= r / (kTwoOverSqrtPi * std::exp(-x * x));
    }
    return x;
}

}  // namespace l1pt::specfun
