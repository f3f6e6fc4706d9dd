#include "periodlab/lauricella.hpp"

#include <cmath>

#include "periodlab/planar.hpp"
#include "periodlab/quadrature.hpp"

namespace periodlab::lauricella {

using hyperlog::admissible_path;
using num::integrate_plane;
using num::integrate_segment;

namespace {

bool near_integer(cplx v, double tol) {
    return std::abs(v.imag()) < tol && std::abs(v.real() - std::round(v.real())) < tol;
}

/// The admissible path with continuous determinations of log(x) and
/// log(1 - x/sigma_k) anchored at the tangential basepoint conventions:
/// log(x) real near 0+ (unit tangent), log(1 - x/sigma_k) -> 0 at x = 0.
struct BranchedPath {
    const Configuration* cfg = nullptr;
    int target = 0;
    std::vector<cplx> pts;
    std::vector<cplx> logx_start;              // per segment start (segment 0: unused)
    std::vector<std::vector<cplx>> logk_start; // [segment][k], k = 1..n
    std::vector<cplx> endpoint_logs;           // lambda_0 = log sigma_i, lambda_k, lambda_i = 0

    BranchedPath(const Configuration& c, int i) : cfg(&c), target(i) {
        pts = admissible_path(c, i).waypoints;
        const int n = c.n();
        const size_t nseg = pts.size() - 1;
        logx_start.assign(nseg, cplx(0.0));
        logk_start.assign(nseg, std::vector<cplx>(size_t(n) + 1, cplx(0.0)));
        for (size_t m = 1; m < nseg; ++m) {
            logx_start[m] = (m == 1) ? std::log(pts[1])
                                     : logx_start[m - 1] + std::log(pts[m] / pts[m - 1]);
            for (int k = 1; k <= n; ++k) {
                cplx sk = c.points[size_t(k)];
                logk_start[m][size_t(k)] =
                    logk_start[m - 1][size_t(k)] + std::log((sk - pts[m]) / (sk - pts[m - 1]));
            }
        }
        // endpoint values at x = sigma_i
        endpoint_logs.assign(size_t(n) + 1, cplx(0.0));
        size_t last = nseg - 1;
        cplx a = pts[last];
        cplx si = c.points[size_t(target)];
        endpoint_logs[0] = (last == 0 ? std::log(si) : logx_start[last] + std::log(si / a));
        for (int k = 1; k <= n; ++k) {
            if (k == target) continue;
            cplx sk = c.points[size_t(k)];
            endpoint_logs[size_t(k)] = logk_start[last][size_t(k)] + std::log((sk - si) / (sk - a));
        }
    }

    int segments() const { return int(pts.size()) - 1; }

    // branch-resolved logs at z on segment m; za = z - start, bz = end - z
    // (exact near the endpoints, as handed out by the quadrature)
    void logs(size_t m, cplx z, cplx za, cplx bz, cplx& logx, std::vector<cplx>& logk) const {
        const int n = cfg->n();
        logx = (m == 0) ? std::log(za) : logx_start[m] + std::log(z / pts[m]);
        bool lastseg = (m + 1 == pts.size() - 1);
        for (int k = 1; k <= n; ++k) {
            cplx sk = cfg->points[size_t(k)];
            cplx num = (lastseg && k == target) ? bz : (sk - z);
            logk[size_t(k)] = logk_start[m][size_t(k)] + std::log(num / (sk - pts[m]));
        }
    }
};

using Integrand = std::function<cplx(const BranchedPath&, size_t seg, cplx z, cplx za, cplx bz)>;

cplx integrate_path(const BranchedPath& path, const Integrand& f, double tol) {
    cplx total(0.0);
    const int nseg = path.segments();
    for (size_t m = 0; m + 1 < path.pts.size(); ++m) {
        auto q = integrate_segment(
            [&](cplx z, cplx za, cplx bz) { return f(path, m, z, za, bz); }, path.pts[m],
            path.pts[m + 1], tol / double(nseg));
        total += q.value;
    }
    return total;
}

void check_entry_domain(const std::vector<cplx>& s, int i, int j) {
    if (!(s[0].real() > -1.0)) throw domain_violation("Re s0 > -1 violated");
    double need = (i == j) ? 0.0 : -1.0;
    if (!(s[size_t(i)].real() > need))
        throw domain_violation(i == j ? "Re s_i > 0 (i = j) violated" : "Re s_i > -1 violated");
}

std::vector<cplx> check_arity(const Configuration& cfg, const std::vector<cplx>& s) {
    if (int(s.size()) != cfg.n() + 1)
        throw std::invalid_argument("parameter vector must have n+1 entries s0..sn");
    return s;
}

// inverse of (z - sigma_j), cancellation-free at the path endpoint
cplx pole_factor(const BranchedPath& path, size_t m, cplx z, cplx bz, int j) {
    bool lastseg = (m + 1 == path.pts.size() - 1);
    if (lastseg && j == path.target) return -1.0 / bz;
    return 1.0 / (z - path.cfg->points[size_t(j)]);
}

std::vector<int> unit_expo(int vars, int j) {
    std::vector<int> e(size_t(vars), 0);
    e[size_t(j)] = 1;
    return e;
}

// all multi-indices over `vars` variables with total degree <= deg
std::vector<std::vector<int>> multi_indices(int vars, int deg) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(size_t(vars), 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == vars) {
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[size_t(pos)] = v;
            rec(pos + 1, left - v);
        }
        cur[size_t(pos)] = 0;
    };
    rec(0, deg);
    return out;
}

double factorial(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

cplx ipow(cplx b, int e) {
    cplx r(1.0);
    for (int t = 0; t < e; ++t) r *= b;
    return r;
}

} // namespace

bool ParameterVector::is_generic(double tol) const {
    cplx sum(0.0);
    for (auto& v : s) {
        if (near_integer(v, tol)) return false;
        sum += v;
    }
    return !near_integer(sum, tol);
}

cplx entry(const Configuration& cfg, const std::vector<cplx>& s0, int i, int j) {
    auto s = check_arity(cfg, s0);
    check_entry_domain(s, i, j);
    BranchedPath path(cfg, i);
    const int n = cfg.n();
    auto f = [&](const BranchedPath& p, size_t m, cplx z, cplx za, cplx bz) -> cplx {
        cplx logx;
        std::vector<cplx> logk(size_t(n) + 1);
        p.logs(m, z, za, bz, logx, logk);
        cplx ex = s[0] * logx;
        for (int k = 1; k <= n; ++k) ex += s[size_t(k)] * logk[size_t(k)];
        return std::exp(ex) * pole_factor(p, m, z, bz, j);
    };
    return -s[size_t(j)] * integrate_path(path, f, cfg.tolerance);
}

cplx omega_integral_raw(const Configuration& cfg, const std::vector<cplx>& s0, int i, int j) {
    auto s = check_arity(cfg, s0);
    return entry(cfg, s, i, j) / (-s[size_t(j)]);
}

cplx endpoint_prefactor(const Configuration& cfg, const std::vector<cplx>& s0, int i) {
    auto s = check_arity(cfg, s0);
    BranchedPath path(cfg, i);
    cplx ex(0.0);
    for (int k = 0; k <= cfg.n(); ++k) ex += s[size_t(k)] * path.endpoint_logs[size_t(k)];
    return std::exp(ex);
}

cplx omega_integral_renormalized(const Configuration& cfg, const std::vector<cplx>& s0, int i, int j) {
    auto s = check_arity(cfg, s0);
    BranchedPath path(cfg, i);
    const int n = cfg.n();
    cplx sub(0.0);
    if (i == j) {
        cplx ex(0.0);
        for (int k = 0; k <= n; ++k)
            if (k != i) ex += s[size_t(k)] * path.endpoint_logs[size_t(k)];
        sub = std::exp(ex);
    }
    auto f = [&](const BranchedPath& p, size_t m, cplx z, cplx za, cplx bz) -> cplx {
        cplx logx;
        std::vector<cplx> logk(size_t(n) + 1);
        p.logs(m, z, za, bz, logx, logk);
        cplx ex = s[0] * logx;
        for (int k = 1; k <= n; ++k)
            if (k != i) ex += s[size_t(k)] * logk[size_t(k)];
        cplx bracket = std::exp(ex) - sub;
        return bracket * std::exp(s[size_t(i)] * logk[size_t(i)]) * pole_factor(p, m, z, bz, j);
    };
    return integrate_path(path, f, cfg.tolerance);
}

cplx entry_renormalized(const Configuration& cfg, const std::vector<cplx>& s0, int i, int j) {
    auto s = check_arity(cfg, s0);
    if (!(s[0].real() > -1.0)) throw domain_violation("Re s0 > -1 violated");
    if (!(s[size_t(i)].real() > -1.0)) throw domain_violation("Re s_i > -1 violated");
    cplx diag = (i == j) ? endpoint_prefactor(cfg, s, i) : cplx(0.0);
    return diag - s[size_t(j)] * omega_integral_renormalized(cfg, s, i, j);
}

SquareMatrix<cplx> matrix(const Configuration& cfg, const std::vector<cplx>& s) {
    SquareMatrix<cplx> m(cfg.n(), cplx(0.0));
    for (int i = 1; i <= cfg.n(); ++i)
        for (int j = 1; j <= cfg.n(); ++j) m.at(i, j) = entry_renormalized(cfg, s, i, j);
    return m;
}

CMulti taylor(const Configuration& cfg, int i, int j, int max_degree) {
    const int n = cfg.n();
    const int vars = n + 1;
    BranchedPath path(cfg, i);
    CMulti out(vars, max_degree);
    if (i == j) {
        CMulti lin(vars, max_degree);
        for (int k = 0; k <= n; ++k)
            lin.add_to(unit_expo(vars, k), path.endpoint_logs[size_t(k)]);
        out += lin.exp();
    }
    for (auto& m : multi_indices(vars, max_degree - 1)) {
        auto f = [&](const BranchedPath& p, size_t seg, cplx z, cplx za, cplx bz) -> cplx {
            cplx logx;
            std::vector<cplx> logk(size_t(n) + 1);
            p.logs(seg, z, za, bz, logx, logk);
            cplx prod = ipow(logx, m[0]);
            for (int k = 1; k <= n; ++k)
                if (k != i) prod *= ipow(logk[size_t(k)], m[size_t(k)]);
            if (i == j) {
                cplx ref = ipow(p.endpoint_logs[0], m[0]);
                for (int k = 1; k <= n; ++k)
                    if (k != i) ref *= ipow(p.endpoint_logs[size_t(k)], m[size_t(k)]);
                prod -= ref;
            }
            prod *= ipow(logk[size_t(i)], m[size_t(i)]);
            return prod * pole_factor(p, seg, z, bz, j);
        };
        cplx integral = integrate_path(path, f, cfg.tolerance);
        double fact = 1.0;
        for (int k = 0; k < vars; ++k) fact *= factorial(m[size_t(k)]);
        auto e = m;
        e[size_t(j)] += 1;
        out.add_to(e, -integral / fact);
    }
    return out;
}

namespace {

void check_sv_domain(const Configuration& cfg, const std::vector<double>& s) {
    if (int(s.size()) != cfg.n() + 1)
        throw std::invalid_argument("parameter vector must have n+1 entries s0..sn");
    double sum = 0.0;
    for (double v : s) {
        if (!(v > 0.0)) throw domain_violation("s_k > 0 violated");
        sum += v;
    }
    if (!(sum < 0.5)) throw domain_violation("s_0 + ... + s_n < 1/2 violated");
}

using num::PlanarPoint;

cplx sv_weight(const Configuration& cfg, const std::vector<double>& s, const PlanarPoint& p) {
    double ex = s[0] * std::log(std::norm(p.dist_to(cfg.points, 0)));
    for (int k = 1; k <= cfg.n(); ++k)
        ex += s[size_t(k)] *
              std::log(std::norm(p.dist_to(cfg.points, k) / (-cfg.points[size_t(k)])));
    return std::exp(ex);
}

cplx sv_kernel(const Configuration& cfg, int i, int j, const PlanarPoint& p) {
    cplx zi = std::conj(p.dist_to(cfg.points, i));
    cplx z0 = std::conj(p.dist_to(cfg.points, 0));
    return (1.0 / zi - 1.0 / z0) / p.dist_to(cfg.points, j);
}

} // namespace

cplx sv_entry(const Configuration& cfg, const std::vector<double>& s, int i, int j) {
    check_sv_domain(cfg, s);
    auto f = [&](const PlanarPoint& p) { return sv_weight(cfg, s, p) * sv_kernel(cfg, i, j, p); };
    num::PlanarOptions opt;
    opt.abs_tol = std::max(cfg.tolerance, 1e-9);
    cplx integral = integrate_plane(f, cfg.points, opt);
    constexpr double kPi = 3.14159265358979323846;
    return s[size_t(j)] / kPi * integral;
}

SquareMatrix<cplx> sv_matrix(const Configuration& cfg, const std::vector<double>& s) {
    SquareMatrix<cplx> m(cfg.n(), cplx(0.0));
    for (int i = 1; i <= cfg.n(); ++i)
        for (int j = 1; j <= cfg.n(); ++j) m.at(i, j) = sv_entry(cfg, s, i, j);
    return m;
}

CMulti sv_taylor(const Configuration& cfg, int i, int j, int max_degree) {
    const int n = cfg.n();
    const int vars = n + 1;
    constexpr double kPi = 3.14159265358979323846;
    const cplx si = cfg.points[size_t(i)];

    std::vector<double> lam(size_t(vars), 0.0); // log|sigma_i|^2, log|1-sigma_i/sigma_k|^2
    lam[0] = std::log(std::norm(si));
    for (int k = 1; k <= n; ++k)
        if (k != i) lam[size_t(k)] = std::log(std::norm(1.0 - si / cfg.points[size_t(k)]));

    CMulti out(vars, max_degree);
    if (i == j) {
        CMulti lin(vars, max_degree);
        for (int k = 0; k < vars; ++k) lin.add_to(unit_expo(vars, k), cplx(lam[size_t(k)]));
        out += lin.exp();
    }
    num::PlanarOptions opt;
    opt.abs_tol = std::max(cfg.tolerance, 1e-8);
    for (auto& m : multi_indices(vars, max_degree - 1)) {
        auto f = [&](const num::PlanarPoint& p) -> cplx {
            cplx prod = ipow(cplx(std::log(std::norm(p.dist_to(cfg.points, 0)))), m[0]);
            for (int k = 1; k <= n; ++k)
                if (k != i)
                    prod *= ipow(cplx(std::log(std::norm(p.dist_to(cfg.points, k) /
                                                         (-cfg.points[size_t(k)])))),
                                 m[size_t(k)]);
            if (i == j) {
                cplx ref = ipow(cplx(lam[0]), m[0]);
                for (int k = 1; k <= n; ++k)
                    if (k != i) ref *= ipow(cplx(lam[size_t(k)]), m[size_t(k)]);
                prod -= ref;
            }
            prod *= ipow(cplx(std::log(std::norm(p.dist_to(cfg.points, i) / (-si)))), m[size_t(i)]);
            return prod * sv_kernel(cfg, i, j, p);
        };
        cplx integral = integrate_plane(f, cfg.points, opt) / kPi;
        double fact = 1.0;
        for (int k = 0; k < vars; ++k) fact *= factorial(m[size_t(k)]);
        auto e = m;
        e[size_t(j)] += 1;
        out.add_to(e, integral / fact);
    }
    return out;
}

FlMatrix<cplx> fl_matrix_numeric(const Configuration& cfg, int max_degree) {
    std::vector<hyperlog::CSeries> assoc;
    for (int i = 1; i <= cfg.n(); ++i) assoc.push_back(hyperlog::associator(cfg, i, max_degree));
    return fl_matrix(assoc, max_degree);
}

SquareMatrix<cplx> invert(const SquareMatrix<cplx>& m) {
    const int n = m.n;
    SquareMatrix<cplx> a = m;
    SquareMatrix<cplx> inv(n, cplx(0.0));
    for (int i = 1; i <= n; ++i) inv.at(i, i) = 1.0;
    for (int col = 1; col <= n; ++col) {
        int piv = col;
        for (int r = col; r <= n; ++r)
            if (std::abs(a.at(r, col)) > std::abs(a.at(piv, col))) piv = r;
        if (std::abs(a.at(piv, col)) < 1e-300) throw domain_violation("matrix inversion: singular matrix");
        if (piv != col)
            for (int c = 1; c <= n; ++c) {
                std::swap(a.at(piv, c), a.at(col, c));
                std::swap(inv.at(piv, c), inv.at(col, c));
            }
        cplx d = a.at(col, col);
        for (int c = 1; c <= n; ++c) {
            a.at(col, c) /= d;
            inv.at(col, c) /= d;
        }
        for (int r = 1; r <= n; ++r) {
            if (r == col) continue;
            cplx f = a.at(r, col);
            if (f == cplx(0.0)) continue;
            for (int c = 1; c <= n; ++c) {
                a.at(r, c) -= f * a.at(col, c);
                inv.at(r, c) -= f * inv.at(col, c);
            }
        }
    }
    return inv;
}

namespace {
SquareMatrix<cplx> mul(const SquareMatrix<cplx>& a, const SquareMatrix<cplx>& b) {
    SquareMatrix<cplx> c(a.n, cplx(0.0));
    for (int i = 1; i <= a.n; ++i)
        for (int j = 1; j <= a.n; ++j) {
            cplx acc(0.0);
            for (int k = 1; k <= a.n; ++k) acc += a.at(i, k) * b.at(k, j);
            c.at(i, j) = acc;
        }
    return c;
}

double max_norm_diff(const SquareMatrix<cplx>& a, const SquareMatrix<cplx>& b) {
    double worst = 0.0;
    for (int i = 1; i <= a.n; ++i)
        for (int j = 1; j <= a.n; ++j) worst = std::max(worst, std::abs(a.at(i, j) - b.at(i, j)));
    return worst;
}

struct DoubleCopyData {
    SquareMatrix<cplx> ls, lm, lc; // L^s(s), L(s), L_conj(-s)
};

DoubleCopyData double_copy_data(const Configuration& cfg, const std::vector<double>& s) {
    check_sv_domain(cfg, s);
    std::vector<cplx> sc, msc;
    for (double v : s) {
        sc.push_back(cplx(v));
        msc.push_back(cplx(-v));
    }
    DoubleCopyData d;
    d.ls = sv_matrix(cfg, s);
    d.lm = matrix(cfg, sc);
    d.lc = matrix(cfg.conjugated(), msc);
    return d;
}
} // namespace

double double_copy_residual(const Configuration& cfg, const std::vector<double>& s) {
    auto d = double_copy_data(cfg, s);
    return max_norm_diff(d.ls, mul(invert(d.lc), d.lm));
}

double coaction_period_residual(const Configuration& cfg, const std::vector<double>& s) {
    auto d = double_copy_data(cfg, s);
    return max_norm_diff(d.lm, mul(d.lc, d.ls));
}

} // namespace periodlab::lauricella
