#include "periodlab/planar.hpp"

#include <algorithm>
#include <cmath>

#include "periodlab/quadrature.hpp"

namespace periodlab::num {

namespace {
constexpr double kTwoPi = 6.28318530717958647692;

// periodic trapezoid with doubling; integrand analytic in theta
cplx theta_integral(const std::function<cplx(double)>& f, double tol, int max_n) {
    int n = 32;
    auto eval = [&](int m) {
        cplx s(0.0);
        for (int k = 0; k < m; ++k) s += f(kTwoPi * (k + 0.5) / m);
        return s * (kTwoPi / m);
    };
    cplx prev = eval(n);
    while (n < max_n) {
        n *= 2;
        cplx cur = eval(n);
        if (std::abs(cur - prev) < tol) return cur;
        prev = cur;
    }
    return prev;
}

// integral over a polar disk around points[center] (center = -1: no disk
// bookkeeping, used by the outer chart whose point is synthesized upstream).
// Radii below r*1e-50 are dropped; the truncated mass of an integrable
// rho^(a-1) singularity is O(1e-50a).
cplx disk_integral(const PlanarIntegrand& f, int center, cplx c, double r, double tol, int max_theta) {
    const double floor_rho = r * 1e-50;
    auto radial = [&](cplx, cplx za, cplx) -> cplx {
        double rr = za.real(); // exact distance from the singular endpoint
        if (rr < floor_rho) return cplx(0.0);
        cplx ring = theta_integral(
            [&](double th) {
                cplx delta = rr * cplx(std::cos(th), std::sin(th));
                return f(PlanarPoint{c + delta, center, delta});
            },
            tol / (r * 8.0), max_theta);
        return rr * ring;
    };
    return integrate_segment(radial, cplx(0.0), cplx(r), tol, 8).value;
}

struct Hole {
    double d;   // |center| relative to origin
    double phi; // arg center
    double r;
};

// allowed theta sub-intervals of the circle of radius rho around 0
std::vector<std::pair<double, double>> allowed_arcs(double rho, const std::vector<Hole>& holes) {
    std::vector<std::pair<double, double>> blocked;
    for (auto& h : holes) {
        if (rho <= h.d - h.r || rho >= h.d + h.r) continue;
        double ca = (rho * rho + h.d * h.d - h.r * h.r) / (2.0 * rho * h.d);
        ca = std::clamp(ca, -1.0, 1.0);
        double alpha = std::acos(ca);
        blocked.push_back({h.phi - alpha, h.phi + alpha});
    }
    if (blocked.empty()) return {{0.0, kTwoPi}};
    std::vector<std::pair<double, double>> segs;
    for (auto [a, b] : blocked) {
        double lo = std::fmod(a, kTwoPi);
        if (lo < 0) lo += kTwoPi;
        double hi = lo + (b - a);
        if (hi <= kTwoPi)
            segs.push_back({lo, hi});
        else {
            segs.push_back({lo, kTwoPi});
            segs.push_back({0.0, hi - kTwoPi});
        }
    }
    std::sort(segs.begin(), segs.end());
    std::vector<std::pair<double, double>> merged;
    for (auto& s : segs) {
        if (!merged.empty() && s.first <= merged.back().second)
            merged.back().second = std::max(merged.back().second, s.second);
        else
            merged.push_back(s);
    }
    std::vector<std::pair<double, double>> allowed;
    double cursor = 0.0;
    for (auto& m : merged) {
        if (m.first > cursor) allowed.push_back({cursor, m.first});
        cursor = std::max(cursor, m.second);
    }
    if (cursor < kTwoPi) allowed.push_back({cursor, kTwoPi});
    return allowed;
}
} // namespace

cplx integrate_plane(const PlanarIntegrand& f, const std::vector<cplx>& points,
                     const PlanarOptions& opt) {
    const int P = int(points.size());
    std::vector<double> radii(size_t(P), 0.0);
    double maxabs = 0.0;
    for (int a = 0; a < P; ++a) {
        double d = std::numeric_limits<double>::infinity();
        for (int b = 0; b < P; ++b)
            if (b != a) d = std::min(d, std::abs(points[size_t(a)] - points[size_t(b)]));
        radii[size_t(a)] = opt.disk_factor * d;
        maxabs = std::max(maxabs, std::abs(points[size_t(a)]));
    }
    const double R = opt.outer_factor * maxabs + 1.0;
    const double tol = opt.abs_tol / double(P + 2);

    cplx total(0.0);

    for (int a = 0; a < P; ++a)
        total += disk_integral(f, a, points[size_t(a)], radii[size_t(a)], tol, opt.max_theta);

    // outer chart w = 1/z; |z| > R is far from every singular point
    {
        auto g = [&](const PlanarPoint& wp) -> cplx {
            double aw = std::abs(wp.delta);
            cplx z = 1.0 / wp.delta;
            return f(PlanarPoint{z, -1, cplx(0.0)}) / (aw * aw * aw * aw);
        };
        total += disk_integral(g, -1, cplx(0.0), 1.0 / R, tol, opt.max_theta);
    }

    // annulus with holes, polar around the origin
    std::vector<Hole> holes;
    double rho_lo = 0.0;
    std::vector<double> crit;
    for (int a = 0; a < P; ++a) {
        double d = std::abs(points[size_t(a)]);
        if (d == 0.0) {
            rho_lo = radii[size_t(a)];
        } else {
            holes.push_back({d, std::arg(points[size_t(a)]), radii[size_t(a)]});
            crit.push_back(d - radii[size_t(a)]);
            crit.push_back(d + radii[size_t(a)]);
        }
    }
    crit.push_back(rho_lo);
    crit.push_back(R);
    std::sort(crit.begin(), crit.end());
    crit.erase(std::unique(crit.begin(), crit.end()), crit.end());

    auto ring = [&](double rho) -> cplx {
        cplx acc(0.0);
        for (auto [a, b] : allowed_arcs(rho, holes)) {
            if (b - a < 1e-14) continue;
            acc += integrate_smooth(
                       [&](double th) {
                           return f(PlanarPoint{rho * cplx(std::cos(th), std::sin(th)), -1, cplx(0.0)});
                       },
                       a, b, tol / (8.0 * R), 12)
                       .value;
        }
        return rho * acc;
    };
    for (size_t s = 0; s + 1 < crit.size(); ++s) {
        double a = crit[s], b = crit[s + 1];
        if (a < rho_lo - 1e-15 || b > R + 1e-15 || b - a < 1e-14) continue;
        total += integrate_segment([&](cplx rho, cplx, cplx) { return ring(rho.real()); }, cplx(a),
                                   cplx(b), tol, 7)
                     .value;
    }
    return total;
}

} // namespace periodlab::num
