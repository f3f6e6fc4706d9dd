#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "periodlab/gamma.hpp"
#include "periodlab/lauricella.hpp"
#include "periodlab/planar.hpp"

using namespace periodlab;
using namespace periodlab::lauricella;
using hyperlog::Configuration;
using num::integrate_plane;

namespace {
constexpr double kPi = 3.14159265358979323846;

cplx sv_beta_entry_reference(double s0, double s1) {
    // (s0 s1/(s0+s1)) beta^sv(s0,s1) = -beta(s0,s1)/beta(-s0,-s1)
    return -num::beta(s0, s1) / num::beta(-s0, -s1);
}
} // namespace

TEST_CASE("single-valued log-kernel integrals (renormalization terms)") {
    // -(1/pi) iint (1/(zbar-sigbar) - 1/zbar) |z|^{2s} dA/z = |sigma|^{2s}/s
    double s = 0.2;
    cplx sigma(1.0);
    std::vector<cplx> pts = {cplx(0.0), sigma};
    auto f1 = [&](const num::PlanarPoint& p) {
        cplx d0 = p.dist_to(pts, 0), d1 = p.dist_to(pts, 1);
        return (1.0 / std::conj(d1) - 1.0 / std::conj(d0)) *
               std::exp(s * std::log(std::norm(d0))) / d0;
    };
    cplx v1 = -integrate_plane(f1, pts, {.abs_tol = 1e-8}) / kPi;
    CHECK(std::abs(v1 - std::pow(std::abs(sigma), 2.0 * s) / s) < 1e-6);

    // -(1/pi) iint (1/(zbar-sigbar) - 1/zbar) |1-z/sigma|^{2s} dA/(z-sigma) = -1/s
    auto f2 = [&](const num::PlanarPoint& p) {
        cplx d0 = p.dist_to(pts, 0), d1 = p.dist_to(pts, 1);
        return (1.0 / std::conj(d1) - 1.0 / std::conj(d0)) *
               std::exp(s * std::log(std::norm(d1) / std::norm(sigma))) / d1;
    };
    cplx v2 = -integrate_plane(f2, pts, {.abs_tol = 1e-8}) / kPi;
    CHECK(std::abs(v2 + 1.0 / s) < 1e-6);

    // off-axis point as well
    sigma = cplx(0.7, 0.4);
    pts[1] = sigma;
    cplx v3 = -integrate_plane(f1, pts, {.abs_tol = 1e-8}) / kPi;
    CHECK(std::abs(v3 - std::pow(std::abs(sigma), 2.0 * s) / s) < 1e-6);
}

TEST_CASE("single-valued beta entry against the gamma closed form") {
    auto cfg = Configuration::real_points({1.0});
    for (auto [a, b] : {std::pair{0.2, 0.2}, {0.15, 0.1}}) {
        cplx got = sv_entry(cfg, {a, b}, 1, 1);
        cplx want = sv_beta_entry_reference(a, b);
        CHECK(std::abs(got - want) / std::abs(want) < 1e-5);
        // equivalently (s0 s1/(s0+s1)) beta^s(s0,s1)
        cplx want2 = cplx(a) * b / (a + b) * num::sv_beta(a, b);
        CHECK(std::abs(got - want2) / std::abs(want2) < 1e-5);
    }
}

TEST_CASE("sv domain violations are named") {
    auto cfg = Configuration::real_points({1.0});
    CHECK_THROWS_WITH_AS(sv_entry(cfg, {-0.1, 0.2}, 1, 1), "s_k > 0 violated", domain_violation);
    CHECK_THROWS_WITH_AS(sv_entry(cfg, {0.3, 0.3}, 1, 1), "s_0 + ... + s_n < 1/2 violated",
                         domain_violation);
}

TEST_CASE("sv Taylor expansion: zeta^sv coefficients") {
    auto cfg = Configuration::real_points({1.0});
    auto series = sv_taylor(cfg, 1, 1, 3);
    CHECK(std::abs(series.coeff({0, 0}) - 1.0) < 1e-12);
    // zeta^sv(2) = 0 kills the mixed quadratic term
    CHECK(std::abs(series.coeff({1, 1})) < 1e-5);
    // degree-3 coefficients carry zeta^sv(3) = 2 zeta(3)
    double z3sv = num::sv_zeta(3);
    CHECK(std::abs(series.coeff({1, 2}) - z3sv) < 1e-5);
    CHECK(std::abs(series.coeff({2, 1}) - z3sv) < 1e-5);
    CHECK(std::abs(series.coeff({3, 0})) < 1e-5);
}

TEST_CASE("double copy for n = 1") {
    auto cfg = Configuration::real_points({1.0});
    CHECK(double_copy_residual(cfg, {0.15, 0.2}) < 1e-5);
    CHECK(coaction_period_residual(cfg, {0.15, 0.2}) < 1e-5);
}

TEST_CASE("off-diagonal entries vanish linearly in s_j") {
    auto cfg = Configuration::real_points({1.0, 3.0});
    // the -s_j prefactor forces the i != j entries to zero as s_j -> 0
    for (double sj : {1e-3, 1e-6}) {
        cplx v = entry(cfg, {cplx(0.3), cplx(0.25), cplx(sj)}, 1, 2);
        CHECK(std::abs(v) < 10.0 * sj);
        cplx w = sv_entry(cfg, {0.1, sj, 0.12}, 2, 1);
        CHECK(std::abs(w) < 10.0 * sj);
    }
}
