#include "periodlab/hyperlog.hpp"

#include <cmath>

namespace periodlab::hyperlog {

using ncalg::Letter;
using ncalg::Word;
using ncalg::words_of_length;

namespace {

constexpr int kSeriesOrder = 40;  // power-series order at singular endpoints
constexpr int kTaylorOrder = 40;  // Taylor order per interior transport step
constexpr double kStepFactor = 0.45;
constexpr double kMatchFactor = 0.25;

using Poly = std::vector<cplx>; // coefficient by power

// sum_j poly_j(u) log(u)^j
struct LogPoly {
    std::vector<Poly> by_log;
};

// += c * int u^p log(u)^j du, p >= 0
void add_int_pow_log(LogPoly& out, cplx c, int p, int j, int order) {
    if (p + 1 > order) return;
    if (int(out.by_log.size()) <= j) out.by_log.resize(size_t(j) + 1);
    double falling = 1.0, sign = 1.0;
    double q = double(p + 1);
    double qpow = q;
    for (int t = 0; t <= j; ++t) {
        Poly& dst = out.by_log[size_t(j - t)];
        if (int(dst.size()) <= p + 1) dst.resize(size_t(p + 2), cplx(0.0));
        dst[size_t(p + 1)] += c * (sign * falling / qpow);
        falling *= double(j - t);
        qpow *= q;
        sign = -sign;
    }
}

/// Canonical regularized solution of dT = T * sum_k e_k du/(u - tau_k) at the
/// origin of the local coordinate, tau[sing] = 0. Primitives carry no constant
/// term, which is the "set log(eps) = 0" prescription at the tangential
/// basepoint with unit tangent vector.
std::map<Word, LogPoly> local_solution(const std::vector<cplx>& tau, int sing, int max_weight,
                                       int order) {
    const int A = int(tau.size());
    std::map<Word, LogPoly> sol;
    {
        LogPoly one;
        one.by_log.resize(1);
        one.by_log[0] = Poly{cplx(1.0)};
        sol.emplace(Word{}, std::move(one));
    }
    // geometric expansions of 1/(u - tau_k), k != sing
    std::vector<Poly> geo{size_t(A), Poly{}};
    for (int k = 0; k < A; ++k) {
        if (k == sing) continue;
        Poly g(size_t(order) + 1);
        cplx inv = 1.0 / tau[size_t(k)];
        cplx cur = -inv;
        for (int r = 0; r <= order; ++r) {
            g[size_t(r)] = cur;
            cur *= inv;
        }
        geo[size_t(k)] = std::move(g);
    }

    for (int len = 1; len <= max_weight; ++len) {
        for (auto& w : words_of_length(A, len)) {
            const LogPoly& parent = sol.at(w.dropped_last());
            int k = int(w.back());
            LogPoly out;
            if (k == sing) {
                // parent / u, then integrate
                for (int j = 0; j < int(parent.by_log.size()); ++j) {
                    const Poly& pj = parent.by_log[size_t(j)];
                    for (int m = 0; m < int(pj.size()); ++m) {
                        cplx c = pj[size_t(m)];
                        if (c == cplx(0.0)) continue;
                        if (m == 0) {
                            if (int(out.by_log.size()) <= j + 1) out.by_log.resize(size_t(j) + 2);
                            Poly& dst = out.by_log[size_t(j + 1)];
                            if (dst.empty()) dst.resize(1, cplx(0.0));
                            dst[0] += c / double(j + 1);
                        } else {
                            add_int_pow_log(out, c, m - 1, j, order);
                        }
                    }
                }
            } else {
                const Poly& g = geo[size_t(k)];
                for (int j = 0; j < int(parent.by_log.size()); ++j) {
                    const Poly& pj = parent.by_log[size_t(j)];
                    // q-th coefficient of pj * g, integrate x^q log^j
                    int qmax = std::min(order - 1, int(pj.size()) + order);
                    for (int q = 0; q <= qmax; ++q) {
                        cplx acc(0.0);
                        int mlo = std::max(0, q - order);
                        int mhi = std::min<int>(q, int(pj.size()) - 1);
                        for (int m = mlo; m <= mhi; ++m) acc += pj[size_t(m)] * g[size_t(q - m)];
                        if (acc != cplx(0.0)) add_int_pow_log(out, acc, q, j, order);
                    }
                }
            }
            sol.emplace(w, std::move(out));
        }
    }
    return sol;
}

CSeries eval_local(const std::map<Word, LogPoly>& sol, cplx u, cplx logu, int A, int max_weight) {
    CSeries out(A, max_weight);
    for (auto& [w, lp] : sol) {
        cplx val(0.0);
        cplx lpow(1.0);
        for (int j = 0; j < int(lp.by_log.size()); ++j) {
            const Poly& pj = lp.by_log[size_t(j)];
            cplx horner(0.0);
            for (int m = int(pj.size()) - 1; m >= 0; --m) horner = horner * u + pj[size_t(m)];
            val += horner * lpow;
            lpow *= logu;
        }
        out.set(w, val);
    }
    return out;
}

/// Transport matrix from p to q (within the disk of analyticity around p):
/// the solution of dS = S A with S(p) = 1, evaluated at q.
CSeries taylor_step(const std::vector<cplx>& sigma, cplx p, cplx q, int A, int max_weight) {
    const int order = kTaylorOrder;
    std::vector<Poly> geo{size_t(A), Poly{}};
    for (int k = 0; k < A; ++k) {
        Poly g(size_t(order) + 1);
        cplx inv = 1.0 / (sigma[size_t(k)] - p);
        cplx cur = -inv;
        for (int r = 0; r <= order; ++r) {
            g[size_t(r)] = cur;
            cur *= inv;
        }
        geo[size_t(k)] = std::move(g);
    }
    std::map<Word, Poly> taylor;
    taylor.emplace(Word{}, Poly{cplx(1.0)});
    cplx h = q - p;
    CSeries out(A, max_weight);
    out.set(Word{}, cplx(1.0));
    for (int len = 1; len <= max_weight; ++len) {
        for (auto& w : words_of_length(A, len)) {
            const Poly& par = taylor.at(w.dropped_last());
            const Poly& g = geo[size_t(w.back())];
            Poly cur(size_t(order) + 1, cplx(0.0));
            for (int m = 1; m <= order; ++m) {
                cplx acc(0.0);
                int rmax = std::min(m - 1, int(par.size()) - 1);
                for (int r = 0; r <= rmax; ++r) {
                    int gi = m - 1 - r;
                    if (gi <= order) acc += par[size_t(r)] * g[size_t(gi)];
                }
                cur[size_t(m)] = acc / double(m);
            }
            cplx horner(0.0);
            for (int m = order; m >= 0; --m) horner = horner * h + cur[size_t(m)];
            out.set(w, horner);
            taylor.emplace(w, std::move(cur));
        }
    }
    return out;
}

CSeries transport_polyline(const std::vector<cplx>& sigma, const std::vector<cplx>& pts, int A,
                           int max_weight) {
    CSeries total = CSeries::unit(A, max_weight);
    for (size_t s = 0; s + 1 < pts.size(); ++s) {
        cplx cur = pts[s];
        const cplx goal = pts[s + 1];
        while (cur != goal) {
            double remaining = std::abs(goal - cur);
            double rho = std::numeric_limits<double>::infinity();
            for (auto& sg : sigma) rho = std::min(rho, std::abs(cur - sg));
            double step = kStepFactor * rho;
            cplx next = (remaining <= step) ? goal : cur + (goal - cur) / remaining * step;
            total = concat_mul(total, taylor_step(sigma, cur, next, A, max_weight));
            cur = next;
        }
    }
    return total;
}

} // namespace

CSeries associator(const Configuration& cfg, const AdmissiblePath& path, int max_weight) {
    cfg.validate();
    const int A = cfg.n() + 1;
    const int i = path.target;
    const auto& wp = path.waypoints;
    if (wp.size() < 2) throw std::invalid_argument("associator: degenerate path");
    const cplx target = cfg.points[size_t(i)];
    if (max_weight == 0) return CSeries::unit(A, 0);

    // matching points on the first and last segments
    double rho0 = std::numeric_limits<double>::infinity();
    double rhoi = std::numeric_limits<double>::infinity();
    for (int k = 0; k <= cfg.n(); ++k) {
        if (k != 0) rho0 = std::min(rho0, std::abs(cfg.points[size_t(k)]));
        if (k != i) rhoi = std::min(rhoi, std::abs(cfg.points[size_t(k)] - target));
    }
    cplx dir0 = (wp[1] - wp[0]) / std::abs(wp[1] - wp[0]);
    double d0 = std::min(kMatchFactor * rho0, 0.45 * std::abs(wp[1] - wp[0]));
    cplx xa = d0 * dir0;
    cplx dirL = (wp[wp.size() - 2] - target) / std::abs(wp[wp.size() - 2] - target);
    double dL = std::min(kMatchFactor * rhoi, 0.45 * std::abs(wp[wp.size() - 2] - target));
    cplx xb = target + dL * dirL;

    // canonical solution at 0 in the x coordinate
    auto sol0 = local_solution(cfg.points, 0, max_weight, kSeriesOrder);
    CSeries t0 = eval_local(sol0, xa, std::log(xa), A, max_weight);

    // canonical solution at sigma_i in u = 1 - x/sigma_i; dx/(x-sigma_k) = du/(u-tau_k),
    // and -t_i becomes the unit tangent vector at u = 0
    std::vector<cplx> tau(size_t(A), cplx(0.0));
    for (int k = 0; k < A; ++k) tau[size_t(k)] = (target - cfg.points[size_t(k)]) / target;
    auto soli = local_solution(tau, i, max_weight, kSeriesOrder);
    cplx ub = (target - xb) / target;
    CSeries ti = eval_local(soli, ub, std::log(ub), A, max_weight);

    std::vector<cplx> pts;
    pts.push_back(xa);
    for (size_t m = 1; m + 1 < wp.size(); ++m) pts.push_back(wp[m]);
    pts.push_back(xb);
    CSeries mid = transport_polyline(cfg.points, pts, A, max_weight);

    return concat_mul(concat_mul(t0, mid), ncalg::nc_inverse(ti));
}

CSeries associator(const Configuration& cfg, int i, int max_weight) {
    return associator(cfg, admissible_path(cfg, i), max_weight);
}

cplx reg_iterated_integral(const Configuration& cfg, const AdmissiblePath& path, const ncalg::Word& w) {
    if (w.max_letter() >= cfg.n() + 1)
        throw std::invalid_argument("reg_iterated_integral: letter out of range");
    return associator(cfg, path, w.size()).coeff(w);
}

double shuffle_regularization_check(const Configuration& cfg, int i, int max_weight) {
    CSeries z = associator(cfg, i, max_weight);
    return ncalg::shuffle_defect<cplx>(z, [](const cplx& c) { return std::abs(c); });
}

} // namespace periodlab::hyperlog
