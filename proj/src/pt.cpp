#include "l1pt/pt.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "l1pt/rootfind.hpp"
#include "l1pt/specfun.hpp"

namespace l1pt::pt {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;
constexpr double kSqrt2 = 1.4142135623730950488;
constexpr double kInvSqrt2Pi = 0.3989422804014326779;

double xi_from(double prefactor, double y, double alpha) {
    return prefactor * std::exp(-y * y) / (2.0 * kSqrtPi * alpha * y);
}

// Feasible beta interval (open) for xi(alpha, .) = 1 at fixed alpha.
void beta_range(double alpha, Model model, double mu, double& lo, double& hi) {
    if (model == Model::Binary) {
        lo = 0.0;
        hi = alpha;
    } else {
        // erf_inv argument in (0,1):  2a-1 < beta < (a+mu-1)/mu.
        lo = std::max(0.0, 2.0 * alpha - 1.0);
        hi = (alpha + mu - 1.0) / mu;
    }
    if (!(hi > lo)) throw std::domain_error("pt_beta: empty beta range at this alpha");
}

void alpha_range(double beta, Model model, double mu, double& lo, double& hi) {
    if (model == Model::Binary) {
        lo = beta;
        hi = 0.5;
    } else {
        lo = 1.0 - mu * (1.0 - beta);
        hi = 0.5 * (1.0 + beta);
    }
    if (!(hi > lo)) throw std::domain_error("pt_alpha: empty alpha range at this beta");
}

}  // namespace

double xi_bin(double alpha, double beta) {
    ModelParams{alpha, beta, 1.0, Model::Binary}.validate();
    const double arg = (1.0 - 2.0 * alpha) / (1.0 - 2.0 * beta);
    if (!(arg > 0.0 && arg < 1.0))
        throw std::domain_error("xi_bin: erf_inv argument outside (0,1)");
    const double y = specfun::erf_inv(arg);
    return xi_from(1.0 - 2.0 * beta, y, alpha);
}

double xi_box(double alpha, double beta, double mu) {
    ModelParams{alpha, beta, mu, Model::Box}.validate();
    const double arg = (1.0 + beta - 2.0 * alpha) / ((2.0 * mu - 1.0) * (1.0 - beta));
    if (!(arg > -1.0 && arg < 1.0))
        throw std::domain_error("xi_box: erf_inv argument outside (-1,1)");
    // Past the y = 0 pole (alpha >= (1+beta)/2) the pair sits strictly on
    // the success side; the characterization is off-scale there.
    if (arg <= 0.0) return std::numeric_limits<double>::infinity();
    return xi_from((2.0 * mu - 1.0) * (1.0 - beta), specfun::erf_inv(arg), alpha);
}

double xi(const ModelParams& p) {
    return p.model == Model::Binary ? xi_bin(p.alpha, p.beta) : xi_box(p.alpha, p.beta, p.mu);
}

double pt_beta(double alpha, Model model, double mu) {
    if (model == Model::Binary && !(alpha > 0.0 && alpha < 0.5))
        throw std::domain_error("pt_beta: binary model needs alpha in (0,1/2)");
    if (model == Model::Box && !(alpha > 1.0 - mu && alpha < 1.0))
        throw std::domain_error("pt_beta: box model needs alpha in (1-mu,1)");
    double lo, hi;
    beta_range(alpha, model, mu, lo, hi);
    const double w = hi - lo;
    auto f = [&](double b) {
        const double beta = lo + b;  // offset keeps the geometric scan positive
        return (model == Model::Binary ? xi_bin(alpha, beta) : xi_box(alpha, beta, mu)) - 1.0;
    };
    auto br = rootfind::scan_bracket(f, w * 1e-9, w * (1.0 - 1e-9), 64, true);
    if (!br) throw std::runtime_error("pt_beta: bracket scan failed");
    return lo + rootfind::brent(f, br->lo, br->hi, br->flo, br->fhi, 1e-12);
}

double pt_alpha(double beta, Model model, double mu) {
    if (model == Model::Binary && !(beta > 0.0 && beta < 0.5))
        throw std::domain_error("pt_alpha: binary model needs beta in (0,1/2)");
    if (model == Model::Box && !(beta > 0.0 && beta < 1.0))
        throw std::domain_error("pt_alpha: box model needs beta in (0,1)");
    double lo, hi;
    alpha_range(beta, model, mu, lo, hi);
    const double w = hi - lo;
    auto f = [&](double a) {
        const double alpha = lo + a;
        return (model == Model::Binary ? xi_bin(alpha, beta) : xi_box(alpha, beta, mu)) - 1.0;
    };
    auto br = rootfind::scan_bracket(f, w * 1e-9, w * (1.0 - 1e-9), 64, true);
    if (!br) throw std::runtime_error("pt_alpha: bracket scan failed");
    return lo + rootfind::brent(f, br->lo, br->hi, br->flo, br->fhi, 1e-12);
}

CurveResult pt_curve(Model model, double mu, const std::vector<double>& alpha_grid) {
    CurveResult out;
    for (double a : alpha_grid) {
        try {
            out.points.push_back({a, pt_beta(a, model, mu), model == Model::Box ? mu : 1.0});
        } catch (const std::exception& e) {
            out.warnings.push_back("alpha=" + std::to_string(a) + ": " + e.what());
        }
    }
    return out;
}

namespace {

// E max(h-nu,0)^2 and E max(h+nu,0)^2 for standard normal h, closed form.
double e_max_minus_sq(double nu) {
    const double q = 0.5 * specfun::erfc(nu / kSqrt2);
    const double phi = kInvSqrt2Pi * std::exp(-0.5 * nu * nu);
    return (1.0 + nu * nu) * q - nu * phi;
}

double e_max_plus_sq(double nu) {
    const double q = 0.5 * specfun::erfc(-nu / kSqrt2);
    const double phi = kInvSqrt2Pi * std::exp(-0.5 * nu * nu);
    return (1.0 + nu * nu) * q + nu * phi;
}

}  // namespace

double expected_width_gap(const ModelParams& p) {
    p.validate();
    auto width = [&](double nu) {
        double s;
        if (p.model == Model::Binary) {
            s = (1.0 - p.beta) * e_max_minus_sq(nu) + p.beta * e_max_plus_sq(nu);
        } else {
            s = p.mu * (1.0 - p.beta) * e_max_minus_sq(nu) +
                (1.0 - p.mu) * (1.0 - p.beta) * e_max_plus_sq(nu) +
                p.beta * (1.0 + nu * nu);
        }
        return std::sqrt(s);
    };
    const double nu_opt = rootfind::golden_min(width, 0.0, 12.0, 1e-12);
    return width(nu_opt) - std::sqrt(p.alpha);
}

}  // namespace l1pt::pt
