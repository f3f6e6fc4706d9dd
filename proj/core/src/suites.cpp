#include "periodlab/suites.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "periodlab/coaction.hpp"
#include "periodlab/gamma.hpp"
#include "periodlab/hyp2f1.hpp"
#include "periodlab/hyperlog.hpp"
#include "periodlab/lauricella.hpp"
#include "periodlab/periods.hpp"

namespace periodlab::suites {

using hyperlog::Configuration;
using hyperlog::cplx;
using lauricella::CMulti;

namespace {

double wall_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Check {
    double metric = 0.0;
    void worst(double m) { metric = std::max(metric, m); }
};

cplx beta_entry_reference(double s0, double s1) {
    return cplx(s0) * s1 / (s0 + s1) * num::beta(s0, s1);
}

CMulti beta_expansion_reference(int max_degree, bool single_valued) {
    CMulti arg(2, max_degree);
    for (int m = 2; m <= max_degree; ++m) {
        double z = single_valued ? num::sv_zeta(m) : num::zeta(m);
        double c = ((m % 2 == 0) ? -1.0 : 1.0) * z / m;
        double binom = 1.0;
        for (int a = 1; a <= m - 1; ++a) {
            binom = binom * double(m - a + 1) / double(a);
            arg.add_to({a, m - a}, cplx(c * binom));
        }
    }
    return arg.exp();
}

CriterionResult c1_beta_identity() {
    auto t0 = std::chrono::steady_clock::now();
    auto cfg = Configuration::real_points({1.0});
    Check chk;
    double worst_single = 0.0;
    for (auto [a, b] : {std::pair{0.3, 0.4}, {0.5, 0.5}, {0.15, 0.7}}) {
        auto tp = std::chrono::steady_clock::now();
        cplx got = lauricella::entry(cfg, {cplx(a), cplx(b)}, 1, 1);
        worst_single = std::max(worst_single, wall_since(tp));
        cplx want = beta_entry_reference(a, b);
        chk.worst(std::abs(got - want) / std::abs(want));
    }
    bool pass = chk.metric <= 1e-9 && worst_single < 1.0;
    return {"C1", "beta identity: entry equals (s0 s1/(s0+s1)) beta(s0,s1)", pass, chk.metric, 1e-9,
            wall_since(t0), 1.0};
}

CriterionResult c2_expansion_identity() {
    auto t0 = std::chrono::steady_clock::now();
    auto cfg = Configuration::real_points({1.0});
    Check coeff_chk;
    auto series = lauricella::taylor(cfg, 1, 1, 6);
    auto expect = beta_expansion_reference(6, false);
    for (auto& [e, c] : expect.coeffs()) coeff_chk.worst(std::abs(series.coeff(e) - c));
    for (auto& [e, c] : series.coeffs()) coeff_chk.worst(std::abs(expect.coeff(e) - c));

    // finite differences of the renormalized integral, degree <= 2
    Check fd_chk;
    const double h = 0.02;
    auto eval = [&](double a, double b) {
        return lauricella::entry_renormalized(cfg, {cplx(a), cplx(b)}, 1, 1);
    };
    auto d1 = [&](int var) {
        auto at = [&](double t) { return var == 0 ? eval(t, 0.0) : eval(0.0, t); };
        cplx c1 = (at(h) - at(-h)) / (2.0 * h);
        cplx c2 = (at(h / 2) - at(-h / 2)) / h;
        return (4.0 * c2 - c1) / 3.0;
    };
    fd_chk.worst(std::abs(series.coeff({1, 0}) - d1(0)));
    fd_chk.worst(std::abs(series.coeff({0, 1}) - d1(1)));
    auto mixed = [&](double step) {
        return (eval(step, step) - eval(step, -step) - eval(-step, step) + eval(-step, -step)) /
               (4.0 * step * step);
    };
    fd_chk.worst(std::abs(series.coeff({1, 1}) - (4.0 * mixed(h / 2) - mixed(h)) / 3.0));

    double sec = wall_since(t0);
    bool pass = coeff_chk.metric <= 1e-8 && fd_chk.metric <= 1e-6 && sec < 30.0;
    return {"C2", "expansion identity: Taylor vs exp/zeta formula (1e-8) and finite differences (1e-6)",
            pass, std::max(coeff_chk.metric, fd_chk.metric), 1e-6, sec, 30.0};
}

CriterionResult c3_fl_equals_taylor() {
    auto t0 = std::chrono::steady_clock::now();
    Check chk;
    for (auto sigma2 : {3.0, 1.0 / 0.35}) {
        auto cfg = Configuration::real_points({1.0, sigma2});
        auto fl = lauricella::fl_matrix_numeric(cfg, 3);
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j) {
                auto ts = lauricella::taylor(cfg, i, j, 3);
                for (auto& [e, c] : ts.coeffs()) chk.worst(std::abs(fl.at(i, j).coeff(e) - c));
                for (auto& [e, c] : fl.at(i, j).coeffs()) chk.worst(std::abs(ts.coeff(e) - c));
            }
    }
    double sec = wall_since(t0);
    return {"C3", "FL matrix (beta quotients of associators) = Taylor of renormalized integrals",
            chk.metric <= 1e-6 && sec < 300.0, chk.metric, 1e-6, sec, 300.0};
}

CriterionResult c4_sv_beta() {
    auto t0 = std::chrono::steady_clock::now();
    auto cfg = Configuration::real_points({1.0});
    Check chk;
    for (auto [a, b] : {std::pair{0.2, 0.2}, {0.15, 0.1}}) {
        cplx got = lauricella::sv_entry(cfg, {a, b}, 1, 1);
        cplx want = -num::beta(a, b) / num::beta(-a, -b);
        chk.worst(std::abs(got - want) / std::abs(want));
    }
    auto series = lauricella::sv_taylor(cfg, 1, 1, 2);
    chk.worst(std::abs(series.coeff({1, 1}))); // zeta^sv(2) = 0
    double sec = wall_since(t0);
    return {"C4", "single-valued beta: 2D integral vs Gamma closed form; sv s0*s1 coefficient vanishes",
            chk.metric <= 1e-5 && sec < 120.0, chk.metric, 1e-5, sec, 120.0};
}

CriterionResult c5_double_copy_lauricella() {
    auto t0 = std::chrono::steady_clock::now();
    Check chk;
    {
        auto cfg = Configuration::real_points({1.0});
        chk.worst(lauricella::double_copy_residual(cfg, {0.15, 0.2}));
    }
    {
        auto cfg = Configuration::real_points({1.0, 3.0});
        chk.worst(lauricella::double_copy_residual(cfg, {0.1, 0.15, 0.12}));
    }
    double sec = wall_since(t0);
    return {"C5", "double copy: L^s = L_conj(-s)^{-1} L(s) for n in {1,2}",
            chk.metric <= 1e-4 && sec < 300.0, chk.metric, 1e-4, sec, 300.0};
}

CriterionResult c6_twisted_relations() {
    auto t0 = std::chrono::steady_clock::now();
    Check twisted;
    hyp2f1::HypParams ref{cplx(0.21), cplx(0.37), cplx(0.84), cplx(0.35)};
    twisted.worst(hyp2f1::twisted_relation_residual(ref));
    const double sweep[5][3] = {{0.21, 0.37, 0.84},
                                {0.11, 0.23, 0.58},
                                {0.31, 0.13, 0.67},
                                {-0.17, 0.29, 0.44},
                                {0.42, -0.21, 0.76}};
    for (auto& abc : sweep)
        for (double y : {0.2, 0.35, 0.5}) {
            hyp2f1::HypParams p{cplx(abc[0]), cplx(abc[1]), cplx(abc[2]), cplx(y)};
            twisted.worst(hyp2f1::twisted_relation_residual(p));
        }
    double gauss = hyp2f1::gauss_relation_residual(ref);
    double sec = wall_since(t0);
    bool pass = twisted.metric <= 1e-9 && gauss <= 1e-10 && sec < 10.0;
    return {"C6", "twisted period relations (1e-9 over sweep) and the Gauss quadratic relation (1e-10)",
            pass, std::max(twisted.metric, gauss), 1e-9, sec, 10.0};
}

CriterionResult c7_double_copy_2f1() {
    auto t0 = std::chrono::steady_clock::now();
    hyp2f1::HypParams p{cplx(0.3), cplx(0.2), cplx(0.4), cplx(0.3)};
    cplx dc = hyp2f1::sv_calF(p);
    cplx direct = hyp2f1::sv_calF_integral(p);
    double agree = std::abs(dc - direct) / std::abs(dc);
    double imag = std::abs(hyp2f1::sv_F(p).imag());
    double ode = hyp2f1::sv_F_ode_residual(p);
    double sec = wall_since(t0);
    bool pass = agree <= 1e-4 && imag <= 1e-10 && ode <= 1e-4 && sec < 120.0;
    return {"C7",
            "2F1 double copy: sv_F vs direct 2D integral (1e-4), reality (1e-10), ODE residual (1e-4)",
            pass, std::max({agree, imag, ode}), 1e-4, sec, 120.0};
}

CriterionResult c8_symbolic_coaction(int n_override = 0, int degree_override = 0) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string extra;
    if (n_override > 0) {
        int deg = degree_override > 0 ? degree_override : (n_override == 1 ? 4 : 3);
        auto r = coaction::coact_fl(n_override, deg);
        ok = r.verdict;
        extra = " [n=" + std::to_string(n_override) + ", degree " + std::to_string(deg) + "]";
        if (!ok) extra += " [counterexample at " + r.first_mismatch + "]";
        double sec0 = wall_since(t0);
        return {"C8", "symbolic coaction: FL verdict" + extra, ok, ok ? 0.0 : 1.0, 0.0, sec0, 60.0};
    } else {
        auto r1 = coaction::coact_fl(1, 4);
        auto r2 = coaction::coact_fl(2, 3);
        ok = r1.verdict && r2.verdict;
        ok = ok && coaction::weight_homogeneity_violations(r1) == 0;
        ok = ok && coaction::weight_homogeneity_violations(r2) == 0;
        // coefficient of -e1e0e0 reduces to the zeta(3) coaction
        auto dz = coaction::coact_associator_drinfeld(3);
        ok = ok && (-dz.coeff(ncalg::Word{1, 0, 0}) == periods::coact_zeta(3));
    }
    double sec = wall_since(t0);
    return {"C8",
            "symbolic coaction: FL verdicts (n=1 deg 4, n=2 deg 3) and Delta zeta^m(3), exact" + extra,
            ok && sec < 60.0, ok ? 0.0 : 1.0, 0.0, sec, 60.0};
}

CriterionResult c9_property_suite() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    using RSeries = ncalg::NCSeries<Rational>;
    using RMulti = ncalg::MultiSeries<Rational>;

    // shuffle relations: commutativity + binomial totals to combined length 6
    auto words = ncalg::words_up_to(2, 3);
    for (auto& u : words)
        for (auto& v : words) {
            if (u.size() + v.size() > 6) continue;
            auto suv = ncalg::shuffle(u, v);
            auto svu = ncalg::shuffle(v, u);
            ok = ok && (suv == svu);
            long total = 0;
            for (auto& [w, m] : suv) total += m;
            long binom = 1;
            for (int i = 1; i <= u.size(); ++i)
                binom = binom * (u.size() + v.size() - u.size() + i) / i;
            ok = ok && (total == binom);
        }

    // group-likeness of exponentials of small Lie elements, exact
    RSeries e0 = RSeries::letter(2, 4, 0), e1 = RSeries::letter(2, 4, 1);
    RSeries bracket = ncalg::concat_mul(e0, e1) - ncalg::concat_mul(e1, e0);
    RSeries lie = e0.scaled(Rational(2, 3)) + e1.scaled(Rational(-1, 2)) + bracket.scaled(Rational(3, 5));
    RSeries g = ncalg::nc_exp(lie);
    ok = ok && ncalg::is_group_like(g, 0.0);
    RSeries bad = RSeries::unit(2, 4);
    bad.set(ncalg::Word{0, 1}, Rational(1));
    ok = ok && !ncalg::is_group_like(bad, 0.0);

    // beta-quotient product and inversion rules, exact through degree 3
    RSeries lie2 = e1.scaled(Rational(1, 4)) + ncalg::concat_mul(bracket, e0).scaled(Rational(2)) -
                   ncalg::concat_mul(e1, bracket).scaled(Rational(1, 3));
    RSeries h = ncalg::nc_exp(lie2 - lie);
    auto truncate = [](const RMulti& m, int deg) {
        RMulti out(m.num_vars(), m.max_degree());
        for (auto& [e, c] : m.coeffs())
            if (RMulti::total_degree(e) <= deg) out.set(e, c);
        return out;
    };
    for (int j = 0; j < 2; ++j) {
        RMulti lhs = ncalg::beta_quotient(ncalg::concat_mul(g, h), j);
        RMulti rhs = ncalg::abelianize(g) * ncalg::beta_quotient(h, j) +
                     ncalg::beta_quotient(g, j).scaled(h.constant_term());
        ok = ok && (truncate(lhs, 3) == truncate(rhs, 3));
        RMulti inv_lhs = ncalg::beta_quotient(ncalg::nc_inverse(g), j) * ncalg::abelianize(g);
        RMulti inv_rhs = ncalg::beta_quotient(g, j).scaled(Rational(-1));
        ok = ok && (truncate(inv_lhs, 3) == truncate(inv_rhs, 3));
    }

    // counit axiom on the symbolic coaction, weight 4
    {
        auto zm = periods::symbolic_associator(periods::Realization::motivic, 2, 1, 4);
        std::vector<periods::MotivicSeries> zdr = {
            periods::symbolic_associator(periods::Realization::de_rham, 2, 1, 4)};
        auto dz = coaction::coact_associator(zm, zdr, 1);
        ok = ok && coaction::counit_axiom_holds(dz, zm);
    }

    double sec = wall_since(t0);
    return {"C9", "property suite: shuffle, group-likeness, beta-quotient rules, counit (exact, weight 4)",
            ok, ok ? 0.0 : 1.0, 0.0, sec, 0.0};
}

} // namespace

std::string CriterionResult::line() const {
    char buf[256];
    if (tolerance > 0.0)
        std::snprintf(buf, sizeof(buf), "[%s] %s: %s (metric %.3g, tol %.0e, %.2fs)",
                      pass ? "PASS" : "FAIL", id.c_str(), description.c_str(), metric, tolerance,
                      seconds);
    else
        std::snprintf(buf, sizeof(buf), "[%s] %s: %s (exact, %.2fs)", pass ? "PASS" : "FAIL",
                      id.c_str(), description.c_str(), seconds);
    return buf;
}

CriterionResult run_criterion(int k) {
    switch (k) {
        case 1: return c1_beta_identity();
        case 2: return c2_expansion_identity();
        case 3: return c3_fl_equals_taylor();
        case 4: return c4_sv_beta();
        case 5: return c5_double_copy_lauricella();
        case 6: return c6_twisted_relations();
        case 7: return c7_double_copy_2f1();
        case 8: return c8_symbolic_coaction();
        case 9: return c9_property_suite();
        default: throw std::invalid_argument("run_criterion: criteria are numbered 1..9");
    }
}

std::vector<std::string> suite_names() {
    return {"beta", "double-copy", "twisted", "coaction", "fl-agreement", "hyp2f1"};
}

std::vector<CriterionResult> run_suite(const std::string& name, int n_override, int degree_override) {
    std::vector<CriterionResult> out;
    if (name == "beta") {
        out.push_back(c1_beta_identity());
        out.push_back(c2_expansion_identity());
        out.push_back(c4_sv_beta());
    } else if (name == "double-copy") {
        out.push_back(c5_double_copy_lauricella());
        out.push_back(c7_double_copy_2f1());
    } else if (name == "twisted") {
        out.push_back(c6_twisted_relations());
    } else if (name == "coaction") {
        out.push_back(c8_symbolic_coaction(n_override, degree_override));
        {
            auto t0 = std::chrono::steady_clock::now();
            auto cfg = Configuration::real_points({1.0});
            double r = coaction::coaction_period_consistency(cfg, {0.15, 0.2});
            out.push_back({"C-num", "numeric coaction-period consistency, n=1", r <= 1e-5, r, 1e-5,
                           wall_since(t0), 0.0});
        }
    } else if (name == "fl-agreement") {
        out.push_back(c3_fl_equals_taylor());
    } else if (name == "hyp2f1") {
        out.push_back(c6_twisted_relations());
        out.push_back(c7_double_copy_2f1());
        {
            auto t0 = std::chrono::steady_clock::now();
            hyp2f1::HypParams p{cplx(0.3), cplx(0.2), cplx(0.4), cplx(0.35)};
            double r = hyp2f1::laurent_fl_agreement_residual(p, 3);
            out.push_back({"H1", "Laurent expansion matches the Lauricella FL combination", r <= 1e-6,
                           r, 1e-6, wall_since(t0), 0.0});
        }
        {
            auto t0 = std::chrono::steady_clock::now();
            auto chk = hyp2f1::local_coaction_check(4);
            out.push_back({"H2", "local 2F1 coaction through the FL coaction and beta_loc (exact)",
                           chk.verdict, chk.verdict ? 0.0 : 1.0, 0.0, wall_since(t0), 0.0});
        }
    } else {
        throw std::invalid_argument("unknown suite '" + name + "'");
    }
    return out;
}

} // namespace periodlab::suites
