#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace periodlab::num {

using cplx = std::complex<double>;

/// Evaluation point for planar integrands. Inside the polar disk around
/// points[center], delta = z - points[center] is exact; integrands must use
/// it for singular factors to avoid endpoint cancellation.
struct PlanarPoint {
    cplx z;
    int center = -1;
    cplx delta{0.0, 0.0};

    /// z - p computed without cancellation when p is the active disk center.
    cplx dist_to(const std::vector<cplx>& points, int k) const {
        if (center == k) return delta;
        return z - points[size_t(k)];
    }
};

using PlanarIntegrand = std::function<cplx(const PlanarPoint&)>;

struct PlanarOptions {
    double abs_tol = 1e-8;
    double disk_factor = 0.35;   // disk radius as fraction of min distance to other points
    double outer_factor = 2.0;   // outer radius = outer_factor * max|p| + 1
    int max_theta = 4096;
};

/// Integral over the whole plane (Lebesgue measure dx dy) of an integrand
/// with integrable algebraic/log singularities at the given points and
/// enough decay at infinity. Decomposition: polar disks at each point,
/// an annulus with circular holes, and an inverted outer chart.
cplx integrate_plane(const PlanarIntegrand& f, const std::vector<cplx>& points,
                     const PlanarOptions& opt = {});

} // namespace periodlab::num
