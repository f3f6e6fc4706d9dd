// periodlab: Lauricella / hypergeometric period computations and the
// verification suites, with JSON reports.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "periodlab/coaction.hpp"
#include "periodlab/gamma.hpp"
#include "periodlab/hyp2f1.hpp"
#include "periodlab/lauricella.hpp"
#include "periodlab/report.hpp"
#include "periodlab/suites.hpp"

using namespace periodlab;
using hyperlog::Configuration;
using hyperlog::cplx;

namespace {

void emit(const std::string& json, const std::string& out_file) {
    if (out_file.empty()) {
        std::cout << json << "\n";
    } else {
        std::ofstream out(out_file);
        out << json;
    }
}

double wall_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

void apply_env_tolerance(Configuration& cfg) {
    if (const char* tol = std::getenv("PERIODLAB_TOL")) cfg.tolerance = std::atof(tol);
}

int cmd_lauricella(const std::string& config_file, std::vector<double> s, int taylor_degree, bool sv,
                   const std::string& json_out) {
    auto t0 = std::chrono::steady_clock::now();
    Configuration cfg = hyperlog::load_config_file(config_file);
    apply_env_tolerance(cfg);
    const int n = cfg.n();

    if (taylor_degree > 0) {
        std::vector<lauricella::CMulti> entries;
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                entries.push_back(sv ? lauricella::sv_taylor(cfg, i, j, taylor_degree)
                                     : lauricella::taylor(cfg, i, j, taylor_degree));
        emit(report::series_matrix_json("lauricella", cfg, entries, n, taylor_degree,
                                        sv ? lauricella::Realization::single_valued
                                           : lauricella::Realization::ordinary),
             json_out);
    } else {
        if (int(s.size()) != n + 1)
            throw std::invalid_argument("--s needs n+1 values s0..sn for this configuration");
        std::vector<cplx> sc(s.begin(), s.end());
        if (sv) {
            auto m = lauricella::sv_matrix(cfg, s);
            emit(report::matrix_json("lauricella", cfg, sc, m,
                                     lauricella::Realization::single_valued),
                 json_out);
        } else {
            auto m = lauricella::matrix(cfg, sc);
            emit(report::matrix_json("lauricella", cfg, sc, m, lauricella::Realization::ordinary),
                 json_out);
        }
    }
    std::fprintf(stderr, "wall time: %.1f ms\n", wall_ms(t0));
    return 0;
}

int cmd_verify(const std::string& suite, int n, int degree, const std::string& json_out) {
    auto t0 = std::chrono::steady_clock::now();
    auto results = suites::run_suite(suite, n, degree);
    bool all = true;
    for (auto& r : results) {
        all = all && r.pass;
        std::cout << r.line() << "\n";
    }
    if (!json_out.empty()) emit(report::verify_json(suite, results), json_out);
    std::fprintf(stderr, "wall time: %.1f ms\n", wall_ms(t0));
    return all ? 0 : 1;
}

int cmd_hyp2f1(double a, double b, double c, double y, bool sv, bool matrix, int laurent_degree,
               const std::string& json_out) {
    auto t0 = std::chrono::steady_clock::now();
    if (y == 0.0) { // F(a,b,c;0) = 1, nothing else is defined at this point
        std::printf("F     = +1 +0i\n");
        std::fprintf(stderr, "wall time: %.1f ms\n", wall_ms(t0));
        return 0;
    }
    hyp2f1::HypParams p{cplx(a), cplx(b), cplx(c), cplx(y)};
    p.require_generic();

    std::vector<std::pair<std::string, cplx>> values;
    std::vector<std::pair<std::string, double>> residuals;

    values.push_back({"F", hyp2f1::F_function(p)});
    values.push_back({"G", hyp2f1::G_function(p)});
    values.push_back({"calF", hyp2f1::calF(p)});
    values.push_back({"calG", hyp2f1::calG(p)});

    if (matrix) {
        auto m = hyp2f1::period_matrix(p);
        values.push_back({"P11", m.at(1, 1)});
        values.push_back({"P12", m.at(1, 2)});
        values.push_back({"P21", m.at(2, 1)});
        values.push_back({"P22", m.at(2, 2)});
        cplx det = m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1);
        cplx ref = hyp2f1::period_matrix_det_reference(p);
        residuals.push_back({"det", std::abs(det - ref) / std::abs(ref)});
        residuals.push_back({"condition", hyp2f1::period_matrix_condition(p)});
        residuals.push_back({"twisted", hyp2f1::twisted_relation_residual(p)});
    }
    if (sv) {
        values.push_back({"sv_F", hyp2f1::sv_F(p)});
        values.push_back({"sv_G", hyp2f1::sv_G(p)});
    }

    for (auto& [k, v] : values)
        std::printf("%-5s = %+.15g %+.15gi\n", k.c_str(), v.real(), v.imag());
    for (auto& [k, v] : residuals) std::printf("%-10s residual = %.3g\n", k.c_str(), v);

    if (laurent_degree > 0) {
        auto series = hyp2f1::laurent_calF(p, laurent_degree);
        emit(report::series_json("hyp2f1", series, {"b", "c-b", "-a"}), json_out);
    } else if (!json_out.empty()) {
        emit(report::hyp2f1_json("hyp2f1", p, values, residuals), json_out);
    }
    std::fprintf(stderr, "wall time: %.1f ms\n", wall_ms(t0));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lauricella and Gauss hypergeometric period computations"};
    app.require_subcommand(1);

    std::string config_file, json_out, suite;
    std::vector<double> svec;
    int taylor_degree = 0, laurent_degree = 0, n_override = 0, degree_override = 0;
    bool sv = false, matrix = false;
    double a = 0, b = 0, c = 0, y = 0;

    auto* lau = app.add_subcommand("lauricella", "Lauricella period matrix and expansions");
    lau->add_option("config", config_file, "configuration file")->required();
    lau->add_option("--s", svec, "parameters s0..sn")->delimiter(',');
    lau->add_option("--taylor", taylor_degree, "emit Taylor series to this total degree");
    lau->add_flag("--sv", sv, "single-valued realization");
    lau->add_option("--json", json_out, "write the JSON report to this file");

    auto* ver = app.add_subcommand("verify", "run a verification suite");
    ver->add_option("suite", suite, "beta | double-copy | twisted | coaction | fl-agreement | hyp2f1")
        ->required();
    ver->add_option("--n", n_override, "override n for the coaction suite");
    ver->add_option("--degree", degree_override, "override degree for the coaction suite");
    ver->add_option("--json", json_out, "write the JSON report to this file");

    auto* hyp = app.add_subcommand("hyp2f1", "Gauss hypergeometric computations");
    hyp->add_option("--a", a)->required();
    hyp->add_option("--b", b)->required();
    hyp->add_option("--c", c)->required();
    hyp->add_option("--y", y)->required();
    hyp->add_flag("--sv", sv, "single-valued values via the double copy");
    hyp->add_flag("--matrix", matrix, "period matrix, determinant and twisted-relation residuals");
    hyp->add_option("--laurent", laurent_degree, "Laurent series of calF to this total degree");
    hyp->add_option("--json", json_out, "write the JSON report to this file");

    CLI11_PARSE(app, argc, argv);

    std::string command = app.get_subcommands().front()->get_name();
    try {
        if (lau->parsed()) return cmd_lauricella(config_file, svec, taylor_degree, sv, json_out);
        if (ver->parsed()) return cmd_verify(suite, n_override, degree_override, json_out);
        if (hyp->parsed()) return cmd_hyp2f1(a, b, c, y, sv, matrix, laurent_degree, json_out);
    } catch (const domain_violation& e) {
        std::cout << report::error_json(command, e.what()) << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cout << report::error_json(command, e.what()) << "\n";
        return 3;
    }
    return 0;
}
