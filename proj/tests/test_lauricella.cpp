#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "periodlab/gamma.hpp"
#include "periodlab/lauricella.hpp"

using namespace periodlab;
using namespace periodlab::lauricella;
using hyperlog::Configuration;

namespace {
constexpr double kPi = 3.14159265358979323846;

cplx beta_entry_reference(cplx s0, cplx s1) {
    return s0 * s1 / (s0 + s1) * num::beta(s0, s1);
}

// exp(sum_{m>=2} (-1)^{m-1} zeta(m)/m ((s0+s1)^m - s0^m - s1^m)), the known
// expansion of the regularized beta entry
CMulti beta_expansion_reference(int max_degree, bool single_valued) {
    CMulti arg(2, max_degree);
    for (int m = 2; m <= max_degree; ++m) {
        double z = single_valued ? num::sv_zeta(m) : num::zeta(m);
        double c = ((m % 2 == 0) ? -1.0 : 1.0) * z / m;
        // (s0+s1)^m - s0^m - s1^m = sum_{a=1}^{m-1} C(m,a) s0^a s1^{m-a}
        double binom = 1.0;
        for (int a = 1; a <= m - 1; ++a) {
            binom = binom * double(m - a + 1) / double(a);
            arg.add_to({a, m - a}, cplx(c * binom));
        }
    }
    return arg.exp();
}
} // namespace

TEST_CASE("parameter genericity") {
    ParameterVector ok{{cplx(0.3), cplx(0.4)}};
    CHECK(ok.is_generic());
    ParameterVector bad{{cplx(1.0), cplx(0.4)}};
    CHECK(!bad.is_generic());
    ParameterVector bad_sum{{cplx(0.3), cplx(0.7)}};
    CHECK(!bad_sum.is_generic());
}

TEST_CASE("beta identity for the 1x1 Lauricella matrix") {
    auto cfg = Configuration::real_points({1.0});
    for (auto [a, b] : {std::pair{0.5, 0.5}, {0.3, 0.4}, {0.15, 0.7}}) {
        cplx got = entry(cfg, {cplx(a), cplx(b)}, 1, 1);
        cplx want = beta_entry_reference(a, b);
        CHECK(std::abs(got - want) / std::abs(want) < 1e-10);
    }
    CHECK(std::abs(entry(cfg, {cplx(0.5), cplx(0.5)}, 1, 1) - 0.25 * kPi) < 1e-10);
}

TEST_CASE("raw and renormalized entries agree on the common domain") {
    auto cfg = Configuration::real_points({1.0, 3.0});
    std::vector<cplx> s = {cplx(0.31), cplx(0.22), cplx(0.17)};
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) {
            cplx raw = entry(cfg, s, i, j);
            cplx ren = entry_renormalized(cfg, s, i, j);
            CHECK(std::abs(raw - ren) < 1e-9 * (1.0 + std::abs(raw)));
        }
}

TEST_CASE("renormalization identity (pole subtraction)") {
    // int Omega_j = -1_{i=j} prefac / s_i + int Omega_j^{ren_i}, for omega = omega_j
    auto cfg = Configuration::real_points({1.0, 3.0});
    std::vector<cplx> s = {cplx(0.4), cplx(0.35), cplx(0.2)};
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) {
            cplx raw = omega_integral_raw(cfg, s, i, j);
            cplx ren = omega_integral_renormalized(cfg, s, i, j);
            cplx pole = (i == j) ? -endpoint_prefactor(cfg, s, i) / s[size_t(i)] : cplx(0.0);
            CHECK(std::abs(raw - (pole + ren)) / std::abs(raw) < 1e-8);
        }
}

TEST_CASE("taylor expansion of the beta entry") {
    auto cfg = Configuration::real_points({1.0});
    auto series = taylor(cfg, 1, 1, 4);
    CHECK(std::abs(series.coeff({0, 0}) - 1.0) < 1e-12); // degree-0 term
    auto expect = beta_expansion_reference(4, false);
    for (auto& [e, c] : expect.coeffs()) CHECK(std::abs(series.coeff(e) - c) < 1e-9);
    CHECK(std::abs(series.coeff({1, 1}) + num::zeta(2)) < 1e-9); // -zeta(2) s0 s1
}

TEST_CASE("taylor matches finite differences of the renormalized integral") {
    auto cfg = Configuration::real_points({1.0, 3.0});
    const double h = 0.02;
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) {
            auto series = taylor(cfg, i, j, 2);
            auto eval = [&](double a, double b, double c) {
                return entry_renormalized(cfg, {cplx(a), cplx(b), cplx(c)}, i, j);
            };
            // Richardson-extrapolated central differences, degree <= 2
            auto d1 = [&](int var) {
                auto at = [&](double t) {
                    double v[3] = {0.0, 0.0, 0.0};
                    v[var] = t;
                    return eval(v[0], v[1], v[2]);
                };
                cplx c1 = (at(h) - at(-h)) / (2.0 * h);
                cplx c2 = (at(h / 2) - at(-h / 2)) / h;
                return (4.0 * c2 - c1) / 3.0;
            };
            for (int var = 0; var < 3; ++var) {
                std::vector<int> e = {0, 0, 0};
                e[size_t(var)] = 1;
                CHECK(std::abs(series.coeff(e) - d1(var)) < 1e-6);
            }
            // one mixed second derivative as representative: s0 s1
            auto mixed = [&](double step) {
                return (eval(step, step, 0) - eval(step, -step, 0) - eval(-step, step, 0) +
                        eval(-step, -step, 0)) /
                       (4.0 * step * step);
            };
            cplx m1 = mixed(h), m2 = mixed(h / 2);
            cplx d01 = (4.0 * m2 - m1) / 3.0;
            CHECK(std::abs(series.coeff({1, 1, 0}) - d01) < 1e-6);
        }
}

TEST_CASE("FL matrix from associators equals the Taylor series") {
    // n = 1 through degree 4
    {
        auto cfg = Configuration::real_points({1.0});
        auto fl = fl_matrix_numeric(cfg, 4);
        auto ts = taylor(cfg, 1, 1, 4);
        for (auto& [e, c] : fl.at(1, 1).coeffs()) CHECK(std::abs(ts.coeff(e) - c) < 1e-8);
        for (auto& [e, c] : ts.coeffs()) CHECK(std::abs(fl.at(1, 1).coeff(e) - c) < 1e-8);
    }
    // n = 2 (one detour path) through degree 3
    {
        auto cfg = Configuration::real_points({1.0, 3.0});
        auto fl = fl_matrix_numeric(cfg, 3);
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j) {
                auto ts = taylor(cfg, i, j, 3);
                // degree-0 part is the identity matrix
                CHECK(std::abs(fl.at(i, j).coeff({0, 0, 0}) - (i == j ? 1.0 : 0.0)) < 1e-12);
                for (auto& [e, c] : ts.coeffs()) CHECK(std::abs(fl.at(i, j).coeff(e) - c) < 1e-6);
                for (auto& [e, c] : fl.at(i, j).coeffs()) CHECK(std::abs(ts.coeff(e) - c) < 1e-6);
            }
    }
}

TEST_CASE("complex configuration with straight admissible paths") {
    // no point sits near the segments, so automatic straight paths apply;
    // the FL/Taylor agreement exercises the complex-branch bookkeeping
    hyperlog::Configuration cfg;
    cfg.points = {cplx(0.0), cplx(1.0), cplx(2.0, 0.8)};
    cfg.log_branches = {0, 0};
    cfg.validate();
    for (int i : {1, 2}) CHECK(ncalg::is_group_like(hyperlog::associator(cfg, i, 3), 1e-9));
    auto fl = fl_matrix_numeric(cfg, 2);
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) {
            auto ts = taylor(cfg, i, j, 2);
            for (auto& [e, c] : ts.coeffs()) CHECK(std::abs(fl.at(i, j).coeff(e) - c) < 1e-8);
        }
}

TEST_CASE("entry preconditions produce structured errors") {
    auto cfg = Configuration::real_points({1.0});
    CHECK_THROWS_WITH_AS(entry(cfg, {cplx(-1.2), cplx(0.5)}, 1, 1), "Re s0 > -1 violated",
                         domain_violation);
    CHECK_THROWS_AS(entry(cfg, {cplx(0.5), cplx(-0.1)}, 1, 1), domain_violation);
    CHECK_THROWS_AS(entry(cfg, {cplx(0.5)}, 1, 1), std::invalid_argument);
}

TEST_CASE("matrix inversion") {
    SquareMatrix<cplx> m(2, cplx(0.0));
    m.at(1, 1) = cplx(2.0);
    m.at(1, 2) = cplx(1.0, 1.0);
    m.at(2, 1) = cplx(0.0, -1.0);
    m.at(2, 2) = cplx(3.0);
    auto inv = invert(m);
    // m * inv = 1
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) {
            cplx acc(0.0);
            for (int k = 1; k <= 2; ++k) acc += m.at(i, k) * inv.at(k, j);
            CHECK(std::abs(acc - (i == j ? cplx(1.0) : cplx(0.0))) < 1e-14);
        }
}
