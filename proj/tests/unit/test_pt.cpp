#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "l1pt/pt.hpp"
#include "l1pt/rootfind.hpp"
#include "../common/test_util.hpp"

using namespace l1pt;
using testutil::close_abs;

TEST_CASE("transition characterizations at the reference points") {
    CHECK(close_abs(pt::xi_bin(0.40, 0.22933), 1.0, 5e-4));
    CHECK(pt::xi_bin(0.45, 0.22933) > 1.0);
    CHECK(pt::xi_bin(0.30, 0.22933) < 1.0);

    CHECK(close_abs(pt::xi_box(0.50, 0.18469, 0.85), 1.0, 5e-4));
    CHECK(pt::xi_box(0.60, 0.18469, 0.85) > 1.0);
    CHECK(pt::xi_box(0.40, 0.18469, 0.85) < 1.0);
}

TEST_CASE("domain errors of the characterizations") {
    CHECK_THROWS_AS(pt::xi_bin(0.50, 0.22933), std::domain_error);   // argument pole
    CHECK_THROWS_AS(pt::xi_bin(0.40, 0.45), std::domain_error);      // argument >= 1
    CHECK_THROWS_AS(pt::xi_box(0.50, 0.18469, 0.5), std::domain_error);  // mu pole
    CHECK_THROWS_AS(pt::xi_box(0.10, 0.05, 0.85), std::domain_error);    // argument outside
}

TEST_CASE("curve inversion along both axes") {
    CHECK(close_abs(pt::pt_beta(0.40, Model::Binary), 0.22933, 1e-5));
    CHECK(close_abs(pt::pt_beta(0.50, Model::Box, 0.85), 0.18469, 1e-5));
    CHECK(close_abs(pt::pt_alpha(0.22933, Model::Binary), 0.40, 1e-4));
    CHECK(close_abs(pt::pt_alpha(0.18469, Model::Box, 0.85), 0.50, 1e-4));

    // Defining property and mutual inversion.
    const double bstar = pt::pt_beta(0.45, Model::Binary);
    CHECK(std::fabs(pt::xi_bin(0.45, bstar) - 1.0) <= 1e-12);
    CHECK(close_abs(pt::pt_alpha(bstar, Model::Binary), 0.45, 1e-8));
    const double astar = pt::pt_alpha(0.30, Model::Box, 0.85);
    CHECK(close_abs(pt::pt_beta(astar, Model::Box, 0.85), 0.30, 1e-8));
}

TEST_CASE("uniqueness: xi - 1 changes sign exactly once along beta") {
    for (double alpha : {0.15, 0.30, 0.45}) {
        int changes = 0;
        double prev = pt::xi_bin(alpha, alpha * 1e-4) - 1.0;
        for (int i = 1; i <= 400; ++i) {
            const double beta = alpha * (1e-4 + (1.0 - 2e-4) * i / 400.0);
            const double cur = pt::xi_bin(alpha, beta) - 1.0;
            if (prev * cur < 0.0) ++changes;
            prev = cur;
        }
        CHECK(changes == 1);
    }
}

TEST_CASE("pt_curve collects points and records skipped ones") {
    const auto bin = pt::pt_curve(Model::Binary, 1.0, {0.30, 0.40, 0.45});
    REQUIRE(bin.points.size() == 3);
    CHECK(close_abs(bin.points[1].beta, 0.22933, 1e-5));
    for (const auto& p : bin.points) CHECK(std::fabs(pt::xi_bin(p.alpha, p.beta) - 1.0) <= 1e-10);

    const auto box = pt::pt_curve(Model::Box, 0.85, {0.50});
    REQUIRE(box.points.size() == 1);
    CHECK(close_abs(box.points[0].beta, 0.18469, 1e-5));

    CHECK(pt::pt_curve(Model::Binary, 1.0, {}).points.empty());

    // Below the box curve's reach in alpha every beta fails; the point is
    // skipped with a warning, not an exception.
    const auto skipped = pt::pt_curve(Model::Box, 0.85, {0.22, 0.50});
    CHECK(skipped.points.size() == 1);
    CHECK(skipped.warnings.size() == 1);
}

TEST_CASE("box curve rises with mu at fixed alpha") {
    double prev = 0.0;
    for (double mu : {0.60, 0.70, 0.85, 0.95, 0.9999}) {
        const double b = pt::pt_beta(0.50, Model::Box, mu);
        CHECK(b > prev);
        prev = b;
    }
}

TEST_CASE("expected-width gap vanishes exactly on the curve") {
    CHECK(close_abs(pt::expected_width_gap({0.40, 0.22933, 1.0, Model::Binary}), 0.0, 1e-4));
    CHECK(close_abs(pt::expected_width_gap({0.50, 0.18469, 0.85, Model::Box}), 0.0, 1e-4));
    CHECK(pt::expected_width_gap({0.60, 0.18469, 0.85, Model::Box}) < 0.0);

    for (double alpha : {0.25, 0.40, 0.49}) {
        const double beta = pt::pt_beta(alpha, Model::Binary);
        CHECK(close_abs(pt::expected_width_gap({alpha, beta, 1.0, Model::Binary}), 0.0, 1e-10));
    }
    for (double alpha : {0.40, 0.50, 0.80}) {
        const double beta = pt::pt_beta(alpha, Model::Box, 0.85);
        CHECK(close_abs(pt::expected_width_gap({alpha, beta, 0.85, Model::Box}), 0.0, 1e-10));
    }
}

TEST_CASE("gap and xi agree on the zero set") {
    for (double alpha = 0.20; alpha <= 0.48; alpha += 0.04) {
        for (double frac : {0.5, 0.9, 0.99, 1.01, 1.1}) {
            const double beta = frac * pt::pt_beta(alpha, Model::Binary);
            if (beta >= alpha) continue;
            const double gap = pt::expected_width_gap({alpha, beta, 1.0, Model::Binary});
            const double xi = pt::xi_bin(alpha, beta);
            if (std::fabs(gap) <= 1e-6) CHECK(std::fabs(xi - 1.0) <= 1e-4);
            if (std::fabs(xi - 1.0) > 1e-3) CHECK(std::fabs(gap) > 1e-6);
        }
    }
}

TEST_CASE("closed-form Gaussian expectations match quadrature") {
    // The width integrand uses E max(h -+ nu, 0)^2 in closed form; check
    // against 200-point Gauss-Hermite quadrature through the whole gap.
    // The integrand kink caps the quadrature itself near ~1e-4.
    testutil::GaussHermite gh(200);
    CHECK(std::fabs(gh.gauss_mean([](double) { return 1.0; }) - 1.0) < 1e-13);
    CHECK(std::fabs(gh.gauss_mean([](double h) { return h * h; }) - 1.0) < 1e-12);
    for (double alpha : {0.35, 0.45}) {
        const ModelParams bin{alpha, 0.6 * alpha, 1.0, Model::Binary};
        const ModelParams box{alpha + 0.2, 0.5 * alpha, 0.85, Model::Box};
        auto quad_gap = [&](const ModelParams& p) {
            auto width = [&](double nu) {
                auto term = [&](double h) {
                    const double mm = std::max(h - nu, 0.0), mp = std::max(h + nu, 0.0);
                    if (p.model == Model::Binary)
                        return (1.0 - p.beta) * mm * mm + p.beta * mp * mp;
                    return p.mu * (1.0 - p.beta) * mm * mm +
                           (1.0 - p.mu) * (1.0 - p.beta) * mp * mp +
                           p.beta * (h + nu) * (h + nu);
                };
                return std::sqrt(gh.gauss_mean(term));
            };
            const double nu = l1pt::rootfind::golden_min(width, 0.0, 12.0, 1e-12);
            return width(nu) - std::sqrt(p.alpha);
        };
        CHECK(close_abs(pt::expected_width_gap(bin), quad_gap(bin), 5e-4));
        CHECK(close_abs(pt::expected_width_gap(box), quad_gap(box), 5e-4));
    }
}
