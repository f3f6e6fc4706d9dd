#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "periodlab/gamma.hpp"
#include "periodlab/hyp2f1.hpp"

using namespace periodlab;
using namespace periodlab::hyp2f1;

namespace {
constexpr double kPi = 3.14159265358979323846;
const HypParams kRef{cplx(0.21), cplx(0.37), cplx(0.84), cplx(0.35)};
const HypParams kSv{cplx(0.3), cplx(0.2), cplx(0.4), cplx(0.3)};
} // namespace

TEST_CASE("series basics") {
    HypParams p0(cplx(0.3), cplx(0.2), cplx(0.4), cplx(1e-300));
    CHECK(std::abs(f21_series(p0) - 1.0) < 1e-12); // y = 0 fast path

    // F(1,1,2;y) = -log(1-y)/y
    HypParams p(cplx(1.0), cplx(1.0), cplx(2.0), cplx(0.3));
    cplx want = -std::log(1.0 - 0.3) / 0.3;
    CHECK(std::abs(f21_series(p) - want) < 1e-12);
    CHECK(std::abs(f21_series(p) - 1.18891647061085) < 1e-8);

    HypParams big(cplx(0.3), cplx(0.2), cplx(0.4), cplx(1.5, 0.2));
    CHECK_THROWS_AS(f21_series(big), domain_violation);
    CHECK_THROWS_AS(HypParams(cplx(0.1), cplx(0.1), cplx(0.3), cplx(2.0)), domain_violation);
}

TEST_CASE("genericity") {
    CHECK(kRef.is_generic());
    HypParams bad(cplx(0.2), cplx(0.3), cplx(1.0), cplx(0.3));
    CHECK(!bad.is_generic());
    CHECK_THROWS_WITH_AS(bad.require_generic(), "c in Z violates genericity", domain_violation);
}

TEST_CASE("calF: series, integral and contiguity agree") {
    HypParams p(cplx(0.3), cplx(0.2), cplx(0.4), cplx(0.25));
    cplx via_series = num::beta(p.b, p.c - p.b) * f21_series(p);
    cplx via_integral = calF_integral(p);
    CHECK(std::abs(via_series - via_integral) / std::abs(via_series) < 1e-11);

    // both contiguity relations at the same point
    auto at = [&](cplx a, cplx b, cplx c) {
        HypParams q(a, b, c, p.y);
        return calF(q);
    };
    cplx lhs = at(p.a, p.b, p.c);
    cplx r1 = p.c / p.b * at(p.a, p.b + 1.0, p.c + 1.0) -
              p.a / p.b * p.y * at(p.a + 1.0, p.b + 1.0, p.c + 2.0);
    cplx r2 = p.c / (p.c - p.b) * at(p.a, p.b, p.c + 1.0) +
              p.a / (p.c - p.b) * p.y * at(p.a + 1.0, p.b + 1.0, p.c + 2.0);
    CHECK(std::abs(lhs - r1) / std::abs(lhs) < 1e-10);
    CHECK(std::abs(lhs - r2) / std::abs(lhs) < 1e-10);

    // contiguity-based continuation out of the strip matches the series
    HypParams neg(cplx(0.21), cplx(-0.37), cplx(-0.84), cplx(0.35));
    cplx direct = num::beta(neg.b, neg.c - neg.b) * f21_series(neg);
    CHECK(std::abs(calF(neg) - direct) / std::abs(direct) < 1e-9);

    // calF(a,b,c;0) -> beta(b, c-b)
    HypParams tiny(cplx(0.3), cplx(0.2), cplx(0.4), cplx(1e-13));
    CHECK(std::abs(calF(tiny) - num::beta(0.2, 0.2)) < 1e-10);
}

TEST_CASE("calG: integral route vs calF identity route") {
    HypParams p(cplx(0.3), cplx(0.2), cplx(0.4), cplx(0.25));
    cplx via_identity = calG(p);
    cplx via_integral = calG_integral(p);
    CHECK(std::abs(via_identity - via_integral) / std::abs(via_identity) < 1e-8);

    HypParams out(cplx(1.4), cplx(0.2), cplx(0.4), cplx(0.25));
    CHECK_THROWS_AS(calG_integral(out), domain_violation);
}

TEST_CASE("period matrix determinant") {
    auto m = period_matrix(kRef);
    cplx det = m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1);
    cplx want = period_matrix_det_reference(kRef);
    CHECK(std::abs(det - want) / std::abs(want) < 1e-9);
    CHECK(std::isfinite(period_matrix_condition(kRef)));
    // top-left at y -> 0 approaches beta(b, c-b)
    HypParams tiny(kRef.a, kRef.b, kRef.c, cplx(1e-12));
    CHECK(std::abs(period_matrix(tiny).at(1, 1) - num::beta(kRef.b, kRef.c - kRef.b)) < 1e-9);
}

TEST_CASE("intersection matrices") {
    auto idr = intersection_dr(kRef);
    auto ib = intersection_betti(kRef);
    CHECK(idr.at(1, 2) == cplx(0.0));
    CHECK(idr.at(2, 1) == cplx(0.0));
    CHECK(ib.at(1, 2) == cplx(0.0));
    CHECK(ib.at(2, 1) == cplx(0.0));
    // direct formula transcription
    CHECK(std::abs(idr.at(1, 1) - (-0.84 / (0.37 * 0.47))) < 1e-12);
    CHECK(std::abs(ib.at(1, 1) -
                   cplx(0.0, 2.0) * std::sin(kPi * 0.37) * std::sin(kPi * 0.47) / std::sin(kPi * 0.84)) <
          1e-12);
    // I^dR_{-a,-b,-c}(y) = - transpose(I^dR_{a,b,c}(y)) for the diagonal form
    HypParams neg(-kRef.a, -kRef.b, -kRef.c, kRef.y);
    auto idrn = intersection_dr(neg);
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            CHECK(std::abs(idrn.at(i, j) + idr.at(j, i)) < 1e-12);
}

TEST_CASE("twisted period relations and the Gauss relation") {
    CHECK(twisted_relation_residual(kRef) < 1e-9);
    CHECK(gauss_relation_residual(kRef) < 1e-10);

    // invariance under conjugation of the inputs (real-analytic in y)
    HypParams conj_p = kRef.conjugated();
    CHECK(std::abs(twisted_relation_residual(conj_p) - twisted_relation_residual(kRef)) < 1e-9);
}

TEST_CASE("prefactor identity for the beta function") {
    // beta(1+a-c, 1-a) = (1-c)^{-1} beta(a, c-a)^{-1} pi sin(pi c)/(sin(pi a) sin(pi(c-a)))
    for (auto& p : {kRef, kSv}) {
        cplx lhs = num::beta(1.0 + p.a - p.c, 1.0 - p.a);
        cplx rhs = 1.0 / (1.0 - p.c) / num::beta(p.a, p.c - p.a) * kPi * std::sin(kPi * p.c) /
                   (std::sin(kPi * p.a) * std::sin(kPi * (p.c - p.a)));
        CHECK(std::abs(lhs - rhs) / std::abs(rhs) < 1e-10);
    }
}

TEST_CASE("single-valued F: double copy vs 2D integral") {
    cplx via_dc = sv_calF(kSv);
    cplx via_2d = sv_calF_integral(kSv);
    CHECK(std::abs(via_dc - via_2d) / std::abs(via_dc) < 1e-4);

    // sv beta factor identity: beta^s(b,c-b) = sin(pi b) sin(pi(c-b))/(pi sin(pi c)) beta^2
    cplx bs = num::sv_beta(kSv.b, kSv.c - kSv.b);
    cplx rhs = std::sin(kPi * kSv.b) * std::sin(kPi * (kSv.c - kSv.b)) / (kPi * std::sin(kPi * kSv.c)) *
               num::beta(kSv.b, kSv.c - kSv.b) * num::beta(kSv.b, kSv.c - kSv.b);
    CHECK(std::abs(bs - rhs) / std::abs(bs) < 1e-12);

    // F^s = calF^s / beta^s and reality for real parameters
    cplx fs = sv_F(kSv);
    CHECK(std::abs(fs - via_dc / bs) / std::abs(fs) < 1e-10);
    CHECK(std::abs(fs.imag()) < 1e-10);
    CHECK(std::abs(sv_G(kSv).imag()) < 1e-10);
}

TEST_CASE("sv_F satisfies the holomorphic-part ODE") {
    CHECK(sv_F_ode_residual(kSv) < 1e-4);
}

TEST_CASE("Laurent expansion of calF") {
    HypParams p = kSv;
    auto series = laurent_calF(p, 2);
    // 1/b pole coefficient is exactly 1
    CHECK(std::abs(series.coeff({-1, 0, 0}) - 1.0) < 1e-14);
    // 1/(c-b) pole carries (1-y)^{-a}: s2-expansion of exp(s2 log(1-y))
    CHECK(std::abs(series.coeff({0, -1, 0}) - 1.0) < 1e-14);
    CHECK(std::abs(series.coeff({0, -1, 1}) - std::log(1.0 - 0.3)) < 1e-14);

    // degree <= 2 coefficients against a finite-difference oracle: the
    // analytic function h(s) = s0 s1 calF sampled on roots-of-unity grids
    // (the N-point central-difference scheme on circles of radius r)
    auto eval = [&](cplx s0, cplx s1, cplx s2) {
        // (a, b, c) = (-s2, s0, s0+s1)
        HypParams q(-s2, s0, s0 + s1, p.y);
        return s0 * s1 * calF(q);
    };
    const int N = 8;
    const double r = 0.12;
    std::vector<cplx> om(N);
    for (int k = 0; k < N; ++k) om[size_t(k)] = std::polar(1.0, 2.0 * kPi * k / N);
    // cache the full sample grid
    std::vector<cplx> grid(size_t(N * N * N));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            for (int k = 0; k < N; ++k)
                grid[size_t((i * N + j) * N + k)] =
                    eval(r * om[size_t(i)], r * om[size_t(j)], r * om[size_t(k)]);
    auto fd_coeff = [&](int m0, int m1, int m2) {
        cplx acc(0.0);
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j)
                for (int k = 0; k < N; ++k) {
                    cplx phase = std::polar(1.0, -2.0 * kPi * (i * m0 + j * m1 + k * m2) / N);
                    acc += grid[size_t((i * N + j) * N + k)] * phase;
                }
        return acc / (double(N) * N * N * std::pow(r, m0 + m1 + m2));
    };
    // coefficient of s0^{m0} s1^{m1} s2^{m2} in s0 s1 calF is the calF
    // Laurent coefficient at (m0-1, m1-1, m2); degree <= 2 means |m| <= 4
    for (int m0 = 0; m0 <= 4; ++m0)
        for (int m1 = 0; m1 + m0 <= 4; ++m1)
            for (int m2 = 0; m2 + m0 + m1 <= 4; ++m2) {
                cplx want = series.coeff({m0 - 1, m1 - 1, m2});
                CHECK(std::abs(fd_coeff(m0, m1, m2) - want) < 1e-6);
            }
}

TEST_CASE("Laurent expansion matches the Lauricella FL combination") {
    CHECK(laurent_fl_agreement_residual(kSv, 3) < 1e-6);
}

TEST_CASE("local coaction of the hypergeometric series (exact)") {
    auto check = local_coaction_check(3);
    CHECK(check.verdict);
    CHECK(check.cleared_degree == 4);
}
