#include "l1pt/oracles.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "l1pt/pt.hpp"
#include "l1pt/rootfind.hpp"
#include "l1pt/specfun.hpp"

namespace l1pt::oracle {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kSqrt2 = 1.4142135623730950488;
constexpr double kLog2 = 0.6931471805599453094;
constexpr double kNuMax = 8.0;
constexpr double kYMax = 8.0;

}  // namespace

double entropy(double x) {
    if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("entropy: argument outside [0,1]");
    if (x == 0.0 || x == 1.0) return 0.0;
    return x * std::log(x) + (1.0 - x) * std::log(1.0 - x);
}

double zeta_prob(const ModelParams& p, double c3, double nu, double a0) {
    p.validate();
    if (!(a0 > 0.0) || !(nu >= 0.0) || !std::isfinite(c3))
        throw std::domain_error("zeta_prob: need a0 > 0, nu >= 0, finite c3");

    const double gh = 0.25 * (c3 - std::sqrt(c3 * c3 + 4.0 * p.alpha));
    const double isph = gh * c3 - 0.5 * p.alpha * std::log(1.0 - c3 / (2.0 * gh));

    const double y1c = nu / kSqrt2;
    const double y2c = nu / (kSqrt2 * a0);
    const double shift = std::exp(y2c * y2c - y1c * y1c);  // +inf is acceptable here
    const double w1 = 0.5 * (std::exp(-y1c * y1c) * specfun::erfcx(y2c) / a0 + specfun::erfc(-y1c));
    const double w2 = 0.5 * (shift * specfun::erfc(-y2c) / a0 + specfun::erfc(y1c));

    double pen;
    if (a0 == 1.0)
        pen = (c3 == 0.0) ? 0.0 : kInf;
    else
        pen = c3 * c3 / (2.0 * (1.0 - a0 * a0));

    double v = -0.5 * c3 * c3 + isph + pen;
    if (p.model == Model::Binary) {
        v += (1.0 - p.beta) * std::log(w1) + p.beta * std::log(w2);
    } else {
        const double w3 = shift / a0;
        v += p.mu * (1.0 - p.beta) * std::log(w1) +
             (1.0 - p.mu) * (1.0 - p.beta) * std::log(w2) + p.beta * std::log(w3);
    }
    return std::isnan(v) ? kInf : v;
}

namespace {

// Inner optimum over (nu, a0) at fixed c3. sign = +1 minimizes (upper
// tail), -1 maximizes (lower tail). Five a0 sub-brackets guard the search.
ZetaProbPoint inner_opt(const ModelParams& p, double c3, double sign, double a_lo, double a_hi) {
    auto value = [&](double nu, double a0) { return sign * zeta_prob(p, c3, nu, a0); };
    auto best_nu = [&](double a0) {
        auto g = [&](double v) { return value(v, a0); };
        const double nu = rootfind::golden_min(g, 0.0, kNuMax, 1e-9);
        return rootfind::polish_min(g, nu, 0.0, kNuMax);
    };
    const std::array<std::pair<double, double>, 5> windows = {{
        {a_lo, a_hi},
        {a_lo, 0.5 * (a_lo + a_hi)},
        {0.5 * (a_lo + a_hi), a_hi},
        {a_lo + 0.25 * (a_hi - a_lo), a_lo + 0.75 * (a_hi - a_lo)},
        {a_lo, a_lo + 0.1 * (a_hi - a_lo)},
    }};
    ZetaProbPoint best{0.0, 0.0, 0.0, kInf};
    auto a_section = [&](double a) { return value(best_nu(a), a); };
    for (const auto& [lo, hi] : windows) {
        double a0 = rootfind::golden_min(a_section, lo, hi, 1e-9);
        a0 = rootfind::polish_min(a_section, a0, a_lo, a_hi);
        const double nu = best_nu(a0);
        const double v = value(nu, a0);
        if (v < best.value) best = {c3, nu, a0, v};
    }
    best.value *= sign;
    return best;
}

}  // namespace

ZetaProbPoint minimize_zeta_prob(const ModelParams& p) {
    p.validate();
    const bool upper = pt::expected_width_gap(p) <= 0.0;
    const double sign = upper ? 1.0 : -1.0;
    const double a_lo = upper ? 0.02 : 1.0 + 1e-9;
    const double a_hi = upper ? 1.0 : 40.0;

    auto outer = [&](double c3) { return inner_opt(p, c3, sign, a_lo, a_hi).value; };
    double c3 = upper ? rootfind::golden_min(outer, 0.0, 6.0, 1e-9)
                      : rootfind::golden_min(outer, -6.0, 0.0, 1e-9);
    c3 = upper ? rootfind::polish_min(outer, c3, 0.0, 6.0)
               : rootfind::polish_min(outer, c3, -6.0, 0.0);
    return inner_opt(p, c3, sign, a_lo, a_hi);
}

namespace {

struct Weights {
    double wz;      // off-support zero weight
    double wo;      // off-support one weight (box) or support weight (binary)
    double int_c;   // constant subtracted from psi_int
};

Weights geom_weights(const ModelParams& p) {
    if (p.model == Model::Binary) return {1.0 - p.beta, p.beta, p.alpha * kLog2};
    return {p.mu * (1.0 - p.beta), (1.0 - p.mu) * (1.0 - p.beta), (p.alpha - p.beta) * kLog2};
}

double psi_com(const ModelParams& p, double gg) {
    const Weights w = geom_weights(p);
    return -w.wz * entropy((1.0 - p.alpha - gg) / w.wz) - w.wo * entropy((w.wo - gg) / w.wo);
}

double int_section(const ModelParams& p, double gg, double yi) {
    const Weights w = geom_weights(p);
    return p.alpha * yi * yi + (w.wz - (1.0 - p.alpha - gg)) * std::log(specfun::erfc(yi)) +
           (w.wo - gg) * std::log(specfun::erfc(-yi)) - w.int_c;
}

double ext_section(const ModelParams& p, double gg, double ye) {
    return -p.alpha * ye * ye + (1.0 - p.alpha - gg) * std::log(specfun::erfc(-ye)) +
           gg * std::log(specfun::erfc(ye)) - (1.0 - p.alpha) * kLog2;
}

}  // namespace

void gamma_g_range(const ModelParams& p, double& lo, double& hi) {
    const Weights w = geom_weights(p);
    lo = std::max(0.0, 1.0 - p.alpha - w.wz);
    hi = std::min(1.0 - p.alpha, w.wo);
    if (!(hi > lo)) throw std::domain_error("gamma_g_range: empty interval");
}

GeomValue zeta_geom(const ModelParams& p, double gamma_g, double y_e, double y_i) {
    p.validate();
    double lo, hi;
    gamma_g_range(p, lo, hi);
    if (!(gamma_g >= lo && gamma_g <= hi))
        throw std::domain_error("zeta_geom: gamma_g outside admissible interval");
    if (!(y_e >= 0.0 && y_i >= 0.0)) throw std::domain_error("zeta_geom: y_e, y_i must be >= 0");
    return {psi_com(p, gamma_g), int_section(p, gamma_g, y_i), ext_section(p, gamma_g, y_e)};
}

GeometryParts solve_geom(const ModelParams& p) {
    p.validate();
    double lo, hi;
    gamma_g_range(p, lo, hi);
    const double pad = (hi - lo) * 1e-10;

    struct Eval {
        double yi, ye, net;
    };
    auto eval = [&](double gg) {
        auto isec = [&](double y) { return int_section(p, gg, y); };
        auto esec = [&](double y) { return ext_section(p, gg, y); };
        double yi = rootfind::golden_min(isec, 0.0, kYMax, 1e-9);
        yi = rootfind::polish_min(isec, yi, 0.0, kYMax);
        double ye = rootfind::golden_max(esec, 0.0, kYMax, 1e-9);
        ye = rootfind::polish_max(esec, ye, 0.0, kYMax);
        return Eval{yi, ye, psi_com(p, gg) + int_section(p, gg, yi) + ext_section(p, gg, ye)};
    };

    auto net_of = [&](double g) { return eval(g).net; };
    double gg = rootfind::golden_max(net_of, lo + pad, hi - pad, 1e-9);
    gg = rootfind::polish_max(net_of, gg, lo + pad, hi - pad, 1e-6);
    const Eval e = eval(gg);
    GeometryParts out;
    out.gamma_g = gg;
    out.y_i = e.yi;
    out.y_e = e.ye;
    out.psi_com = psi_com(p, gg);
    out.psi_int = int_section(p, gg, e.yi);
    out.psi_ext = ext_section(p, gg, e.ye);
    out.psi_net = out.psi_com + out.psi_int + out.psi_ext;
    out.psi_net_alt = out.psi_com + out.psi_int - out.psi_ext;
    return out;
}

}  // namespace l1pt::oracle
