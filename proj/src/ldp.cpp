#include "l1pt/ldp.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "l1pt/rootfind.hpp"
#include "l1pt/specfun.hpp"

namespace l1pt::ldp {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;
constexpr double kSqrt2 = 1.4142135623730950488;
constexpr double kYMax = 25.0;

void check_y(double y) {
    if (!std::isfinite(y) || std::fabs(y) > kYMax)
        throw std::domain_error("f1: |y| > 25 is outside the representable range");
}

struct F1Pair {
    double plus;   // f1(+y2, .)
    double minus;  // f1(-y2, mirror weight)
};

F1Pair f1_pair(double y2, const ModelParams& p) {
    if (p.model == Model::Binary)
        return {f1_bin(y2, p.alpha, p.beta), f1_bin(-y2, p.alpha, 1.0 - p.beta)};
    return {f1_box(y2, p.alpha, p.beta, p.mu), f1_box(-y2, p.alpha, p.beta, 1.0 - p.mu)};
}

}  // namespace

double f1_bin(double y, double alpha, double beta) {
    check_y(y);
    // All e^{y^2} groups are carried by erfcx; the ratio term is multiplied
    // through by e^{-y^2} so that numerator and denominator stay bounded.
    const double den = kSqrtPi * y * specfun::erfc(-y) + std::exp(-y * y);
    return (1.0 - beta) / alpha * 2.0 * y / den - y * specfun::erfcx(y);
}

double f1_box(double y, double alpha, double beta, double mu) {
    check_y(y);
    const double den =
        alpha * (kSqrtPi * y * specfun::erfc(-y) + std::exp(-y * y)) - beta * std::exp(-y * y);
    if (den == 0.0) throw std::domain_error("f1_box: denominator pole");
    return 2.0 * mu * (1.0 - beta) * y / den - y * specfun::erfcx(y);
}

double fixed_point_residual(double y2, const ModelParams& p) {
    p.validate();
    if (!(y2 > 0.0)) throw std::domain_error("fixed_point_residual: y2 must be positive");
    const F1Pair f = f1_pair(y2, p);
    const double diff = f.plus - f.minus;
    const double ratio = (f.plus + f.minus) / diff;
    if (!(ratio > -1.0 && ratio < 1.0))
        throw std::domain_error("fixed_point_residual: f1 ratio outside (-1,1)");
    const double y1 = specfun::erf_inv(ratio);
    return 2.0 * y1 * std::exp(y1 * y1) / diff - 1.0;
}

double gamma_g_from_yi(const ModelParams& p, double yi) {
    const double ec_p = specfun::erfc(yi);
    const double ec_m = specfun::erfc(-yi);
    const double core = kSqrtPi * yi * specfun::erfcx(yi) * ec_m - ec_m;
    if (p.model == Model::Binary) return 0.5 * p.alpha * core + p.beta;
    return 0.5 * p.alpha * core - (1.0 - p.beta) * p.mu + 1.0 - 0.5 * ec_p * p.beta;
}

double a_cone_from_gamma_g(const ModelParams& p, double gg) {
    if (p.model == Model::Binary)
        return (p.alpha - p.beta + gg) / (1.0 - p.alpha - gg) * gg / (p.beta - gg);
    const double w1 = (1.0 - p.beta) * p.mu;
    const double w2 = (1.0 - p.mu) * (1.0 - p.beta);
    return (w1 - (1.0 - p.alpha - gg)) / (1.0 - p.alpha - gg) * gg / (w2 - gg);
}

LdpSolution solve_ldp(const ModelParams& p) {
    p.validate();
    auto resid = [&](double y2) {
        try {
            return fixed_point_residual(y2, p);
        } catch (const std::domain_error&) {
            return std::numeric_limits<double>::quiet_NaN();
        }
    };
    auto br = rootfind::scan_bracket(resid, 1e-6, 10.0, 256, true);
    if (!br)
        throw std::runtime_error("solve_ldp: no fixed-point root in (1e-6, 10)");
    const double y2 = br->lo == br->hi
                          ? br->lo
                          : rootfind::brent(resid, br->lo, br->hi, br->flo, br->fhi, 1e-12);
    const double check = resid(y2);
    if (!(std::fabs(check) <= 1e-10))
        throw std::runtime_error("solve_ldp: root rejected (pole crossing or non-convergence)");

    LdpSolution s;
    s.y2 = y2;
    const F1Pair f = f1_pair(y2, p);
    s.y1 = specfun::erf_inv((f.plus + f.minus) / (f.plus - f.minus));
    s.a0 = s.y1 / s.y2;
    s.nu = kSqrt2 * s.y1;
    s.c3 = (1.0 - s.a0 * s.a0) * std::sqrt(p.alpha) / s.a0;
    s.gamma = std::sqrt(p.alpha) / (2.0 * s.a0);
    s.gamma_g = gamma_g_from_yi(p, y2);
    s.a_cone = a_cone_from_gamma_g(p, s.gamma_g);

    // Rate function in erfcx-stable groups. t_plus carries
    // sqrt(pi) y2 e^{y2^2} erfc(-y2) + 1 and t_minus its mirrored twin.
    const double t_plus = kSqrtPi * y2 * specfun::erfcx(-y2) + 1.0;
    const double t_minus = -kSqrtPi * y2 * specfun::erfcx(y2) + 1.0;
    const double common = (p.alpha - 1.0) * std::log(s.y1 / s.y2) + y2 * y2 - s.y1 * s.y1;
    if (p.model == Model::Binary) {
        s.rate = common + (1.0 - p.beta) * std::log((1.0 - p.beta) / (p.alpha * t_plus)) +
                 p.beta * std::log(p.beta / (p.alpha * t_minus));
    } else {
        const double w1 = p.mu * (1.0 - p.beta);
        const double w2 = (1.0 - p.mu) * (1.0 - p.beta);
        s.rate = common + w1 * std::log(w1 / (p.alpha * t_plus - p.beta)) +
                 w2 * std::log(w2 / (p.alpha * t_minus - p.beta));
    }

    if (s.c3 > 1e-9)
        s.tail = Tail::Upper;
    else if (s.c3 < -1e-9)
        s.tail = Tail::Lower;
    else
        s.tail = Tail::AtTransition;
    return s;
}

double rate_function(const ModelParams& p) { return solve_ldp(p).rate; }

RateCurve rate_curve(double beta, double mu, Model model, const std::vector<double>& alpha_grid) {
    RateCurve out;
    for (double a : alpha_grid) {
        try {
            out.rows.push_back({a, solve_ldp({a, beta, mu, model})});
        } catch (const std::exception& e) {
            out.warnings.push_back("alpha=" + std::to_string(a) + ": " + e.what());
        }
    }
    return out;
}

}  // namespace l1pt::ldp
