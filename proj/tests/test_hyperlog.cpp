#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "periodlab/gamma.hpp"
#include "periodlab/hyperlog.hpp"

using namespace periodlab;
using namespace periodlab::hyperlog;
using ncalg::Word;

namespace {
constexpr double kPi = 3.14159265358979323846;

// independent MZV oracles (partial sums with Euler-Maclaurin tails)
double zeta31_oracle() {
    // sum_{m>n>=1} 1/(m^3 n), outer tail via integral of (log x + g)/x^3
    const int N = 4000;
    double h = 0.0, s = 0.0;
    for (int m = 2; m <= N; ++m) {
        h += 1.0 / double(m - 1);
        s += h / (double(m) * m * m);
    }
    const double gamma_e = 0.57721566490153286;
    auto f = [&](double x) { return (std::log(x) + gamma_e) / (x * x * x); };
    // H_{m-1} ~ log m + gamma - 1/(2m); the 1/(2m) part sums against 1/m^3
    double tail = 0.0;
    {
        double X = N + 0.5; // midpoint rule on the integral, error O(X^-5)
        // int_X^inf (log x + g)/x^3 = (log X + g)/(2X^2) + 1/(4X^2)
        tail += (std::log(X) + gamma_e) / (2.0 * X * X) + 1.0 / (4.0 * X * X);
        (void)f;
        // minus sum_{m>N} 1/(2 m^4) ~ integral
        tail -= 1.0 / (6.0 * X * X * X);
    }
    return s + tail;
}
} // namespace

TEST_CASE("length-one coefficients: closed forms with path branches") {
    auto cfg = Configuration::real_points({1.0, 3.0});

    // path to sigma_1 = 1: straight, no detour
    auto z1 = associator(cfg, 1, 1);
    CHECK(std::abs(z1.coeff(Word{0}) - std::log(1.0)) < 1e-12);       // log sigma_1
    CHECK(std::abs(z1.coeff(Word{1})) < 1e-12);                       // admissibility
    CHECK(std::abs(z1.coeff(Word{2}) - std::log(1.0 - 1.0 / 3.0)) < 1e-12);

    // path to sigma_2 = 3 detours above sigma_1 = 1: log(1 - 3/1) = log 2 - i pi
    auto z2 = associator(cfg, 2, 1);
    CHECK(std::abs(z2.coeff(Word{0}) - std::log(3.0)) < 1e-12);
    CHECK(std::abs(z2.coeff(Word{1}) - cplx(std::log(2.0), -kPi)) < 1e-12);
    CHECK(std::abs(z2.coeff(Word{2})) < 1e-12);

    // conjugated configuration detours below: +i pi branch
    auto z2c = associator(cfg.conjugated(), 2, 1);
    CHECK(std::abs(z2c.coeff(Word{1}) - cplx(std::log(2.0), kPi)) < 1e-12);
}

TEST_CASE("Drinfeld associator coefficients are multiple zeta values") {
    auto cfg = Configuration::real_points({1.0});
    auto z = associator(cfg, 1, 4);

    double z2 = num::zeta(2), z3 = num::zeta(3), z4 = num::zeta(4);

    CHECK(std::abs(z.coeff(Word{}) - 1.0) < 1e-14);
    CHECK(std::abs(z.coeff(Word{0, 1}) - z2) < 1e-11);
    CHECK(std::abs(z.coeff(Word{1, 0}) + z2) < 1e-11);

    // full shuffle-regularized weight-3 table
    CHECK(std::abs(z.coeff(Word{1, 0, 0}) + z3) < 1e-11);
    CHECK(std::abs(z.coeff(Word{1, 1, 0}) - z3) < 1e-11);
    CHECK(std::abs(z.coeff(Word{0, 1, 0}) - 2.0 * z3) < 1e-11);
    CHECK(std::abs(z.coeff(Word{0, 0, 1}) + z3) < 1e-11);
    CHECK(std::abs(z.coeff(Word{1, 0, 1}) + 2.0 * z3) < 1e-11);
    CHECK(std::abs(z.coeff(Word{0, 1, 1}) - z3) < 1e-11);

    // weight 4: convergent words against independent oracles
    CHECK(std::abs(z.coeff(Word{1, 0, 0, 0}) + z4) < 1e-11);
    CHECK(std::abs(z.coeff(Word{1, 1, 0, 0}) - zeta31_oracle()) < 1e-9); // zeta(3,1)
    // zeta(2,2) via symmetrization: 2 zeta(2,2) = zeta(2)^2 - zeta(4)
    CHECK(std::abs(z.coeff(Word{1, 0, 1, 0}) - 0.5 * (z2 * z2 - z4)) < 1e-11);
    // transport independently confirms the classical zeta(2,1,1) = zeta(4)
    CHECK(std::abs(z.coeff(Word{1, 1, 1, 0}) + z4) < 1e-11);

    CHECK(ncalg::is_group_like(z, 1e-9));
}

TEST_CASE("abelianisation closed form") {
    auto cfg = Configuration::real_points({1.0, 3.0});
    for (int i : {1, 2}) {
        auto z = associator(cfg, i, 3);
        auto ab = ncalg::abelianize(z);
        // equals exp(s_0 log sigma_i + sum_k s_k log(1 - sigma_i/sigma_k)) termwise
        ncalg::MultiSeries<cplx> lin(3, 3);
        for (int k = 0; k < 3; ++k) {
            ncalg::MultiSeries<cplx>::Expo e(3, 0);
            e[size_t(k)] = 1;
            lin.add_to(e, z.coeff(Word{k}));
        }
        auto expect = lin.exp();
        for (auto& [e, c] : expect.coeffs()) CHECK(std::abs(ab.coeff(e) - c) < 1e-10);
        for (auto& [e, c] : ab.coeffs()) CHECK(std::abs(expect.coeff(e) - c) < 1e-10);
    }
}

TEST_CASE("shuffle regularization defect") {
    auto cfg01 = Configuration::real_points({1.0});
    CHECK(shuffle_regularization_check(cfg01, 1, 4) < 1e-9);
    CHECK(shuffle_regularization_check(cfg01, 1, 1) < 1e-14);

    auto cfg013 = Configuration::real_points({1.0, 3.0});
    CHECK(shuffle_regularization_check(cfg013, 1, 3) < 1e-8);
    CHECK(shuffle_regularization_check(cfg013, 2, 3) < 1e-8);
}

TEST_CASE("path deformation invariance") {
    auto cfg = Configuration::real_points({1.0, 3.0});
    auto big = cfg;
    big.path.detour_radius = 0.45;
    auto a = associator(cfg, 2, 3);
    auto b = associator(big, 2, 3);
    for (auto& [w, c] : a.coeffs()) CHECK(std::abs(b.coeff(w) - c) < 2e-11);

    // an explicit homotopic polyline through the upper half-plane
    auto expl = cfg;
    expl.explicit_paths[2] = {cplx(0.5, 0.0), cplx(0.7, 0.6), cplx(1.5, 0.5), cplx(2.2, 0.0)};
    auto c3 = associator(expl, 2, 3);
    for (auto& [w, c] : a.coeffs()) CHECK(std::abs(c3.coeff(w) - c) < 2e-11);
}

TEST_CASE("trailing-letter integrals vanish (tangential regularization)") {
    // int log^m(1 - x/sigma_i) dx/(x - sigma_i) = m! * Z(e_i^{m+1}) = 0
    auto cfg = Configuration::real_points({1.0, 3.0});
    auto path = admissible_path(cfg, 2);
    for (int m = 0; m <= 3; ++m) {
        std::vector<ncalg::Letter> ls(size_t(m) + 1, ncalg::Letter(2));
        CHECK(std::abs(reg_iterated_integral(cfg, path, Word(ls))) < 1e-10);
    }
}

TEST_CASE("configuration validation and path construction") {
    CHECK_THROWS_AS(Configuration::real_points({1.0, 1.0}), domain_violation);
    auto cfg = Configuration::real_points({1.0, 3.0});
    auto p1 = admissible_path(cfg, 1);
    CHECK(p1.waypoints.size() == 2); // straight
    auto p2 = admissible_path(cfg, 2);
    CHECK(p2.waypoints.size() == 5); // one detour
    CHECK(p2.waypoints[2].imag() > 0.0);
    auto pc = admissible_path(cfg.conjugated(), 2);
    CHECK(pc.waypoints[2].imag() < 0.0);

    Configuration bad;
    bad.points = {cplx(0.0), cplx(1.0)};
    bad.log_branches = {1};
    CHECK_THROWS_AS(bad.validate(), domain_violation);
}

TEST_CASE("config file parsing") {
    std::string text = R"(# sample
[points]
sigma1 = 1.0 0.0
sigma2 = 3.0
[branches]
log1 = 0
log2 = 0
[quadrature]
detour_radius = 0.25
half_plane = upper
tol = 1e-10
)";
    auto cfg = parse_config(text);
    CHECK(cfg.n() == 2);
    CHECK(cfg.points[2] == cplx(3.0));
    CHECK(cfg.path.detour_radius == 0.25);
    CHECK(cfg.tolerance == 1e-10);
}
