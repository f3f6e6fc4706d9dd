#include "periodlab/quadrature.hpp"

#include <cmath>

namespace periodlab::num {

namespace {
constexpr double kPiHalf = 1.57079632679489661923;

struct TSNode {
    double t;   // abscissa in (-1,1)
    double omt; // 1 - t, cancellation-free
    double opt; // 1 + t
    double w;
};

// nodes for one side (k >= 1) at step h: k = multiplier of h
TSNode ts_node(double kh) {
    double sh = std::sinh(kh);
    double u = kPiHalf * sh;
    double t = std::tanh(u);
    // 1 -+ tanh(u) = 2 e^{-+2u} / (1 + e^{-+2u})
    double em = std::exp(-2.0 * u);
    double omt = 2.0 * em / (1.0 + em);
    double ep = std::exp(2.0 * u); // for t negative use symmetry instead
    (void)ep;
    double ch = std::cosh(u);
    double w = kPiHalf * std::cosh(kh) / (ch * ch);
    return {t, omt, 2.0 - omt, w};
}
} // namespace

QuadResult tanh_sinh(const std::function<cplx(double, double, double)>& f, double target_abs_tol,
                     int max_level) {
    // level 0: h = 1
    double h = 1.0;
    cplx sum = f(0.0, 1.0, 1.0) * kPiHalf; // k = 0 node, weight pi/2 * 1
    long evals = 1;
    auto add_level_nodes = [&](double step, bool odd_only) {
        // add nodes k*step, k >= 1 (k odd if odd_only), both signs
        cplx acc(0.0, 0.0);
        for (int k = odd_only ? 1 : 1; ; k += odd_only ? 2 : 1) {
            TSNode nd = ts_node(double(k) * step);
            if (nd.w < 1e-300 || nd.omt < 1e-300) break;
            cplx fp = f(nd.t, nd.omt, nd.opt);
            cplx fm = f(-nd.t, nd.opt, nd.omt);
            acc += nd.w * (fp + fm);
            evals += 2;
            if (double(k) * step > 7.0) break; // sinh saturates double range
        }
        return acc;
    };

    sum += add_level_nodes(h, false);
    cplx prev = sum * h;
    QuadResult res;
    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        sum += add_level_nodes(h, true);
        cplx cur = sum * h;
        double diff = std::abs(cur - prev);
        res.value = cur;
        res.error_estimate = diff;
        res.evaluations = evals;
        if (level >= 3 && diff <= target_abs_tol) return res;
        prev = cur;
    }
    return res;
}

QuadResult integrate_segment(const std::function<cplx(cplx, cplx, cplx)>& f, cplx a, cplx b,
                             double target_abs_tol, int max_level) {
    cplx mid = 0.5 * (a + b);
    cplx half = 0.5 * (b - a);
    double scale = std::abs(half);
    if (scale == 0.0) return {};
    auto g = [&](double t, double omt, double opt) -> cplx {
        cplx z = mid + half * t;
        cplx za = half * opt; // z - a
        cplx bz = half * omt; // b - z
        return f(z, za, bz);
    };
    QuadResult r = tanh_sinh(g, target_abs_tol / scale, max_level);
    r.value *= half;
    r.error_estimate *= scale;
    return r;
}

namespace {
// 15-point Gauss-Legendre
constexpr double kGLx[8] = {0.0,
                            0.2011940939974345,
                            0.3941513470775634,
                            0.5709721726085388,
                            0.7244177313601701,
                            0.8482065834104272,
                            0.9372733924007060,
                            0.9879925180204854};
constexpr double kGLw[8] = {0.2025782419255613,
                            0.1984314853271116,
                            0.1861610000155622,
                            0.1662692058169939,
                            0.1395706779261543,
                            0.1071592204671719,
                            0.0703660474881081,
                            0.0307532419961173};

cplx gl15(const std::function<cplx(double)>& f, double a, double b, long& evals) {
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    cplx s = kGLw[0] * f(mid);
    ++evals;
    for (int i = 1; i < 8; ++i) {
        s += kGLw[i] * (f(mid + half * kGLx[i]) + f(mid - half * kGLx[i]));
        evals += 2;
    }
    return s * half;
}

void adapt(const std::function<cplx(double)>& f, double a, double b, double tol, int depth,
           int max_depth, cplx whole, QuadResult& out) {
    double m = 0.5 * (a + b);
    cplx left = gl15(f, a, m, out.evaluations);
    cplx right = gl15(f, m, b, out.evaluations);
    double diff = std::abs(left + right - whole);
    if (diff <= tol || depth >= max_depth) {
        out.value += left + right;
        out.error_estimate += diff;
        return;
    }
    adapt(f, a, m, 0.5 * tol, depth + 1, max_depth, left, out);
    adapt(f, m, b, 0.5 * tol, depth + 1, max_depth, right, out);
}
} // namespace

QuadResult integrate_smooth(const std::function<cplx(double)>& f, double a, double b,
                            double target_abs_tol, int max_depth) {
    QuadResult out;
    cplx whole = gl15(f, a, b, out.evaluations);
    adapt(f, a, b, target_abs_tol, 0, max_depth, whole, out);
    return out;
}

} // namespace periodlab::num
