#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace periodlab::num {

using cplx = std::complex<double>;

struct QuadResult {
    cplx value{0.0, 0.0};
    double error_estimate = 0.0;
    long evaluations = 0;
};

/// tanh-sinh quadrature on (-1,1). Handles integrable endpoint singularities
/// (algebraic x^a with a > -1, log powers). f receives t in (-1,1) together
/// with the distances 1-t and 1+t computed without cancellation.
QuadResult tanh_sinh(const std::function<cplx(double t, double one_minus_t, double one_plus_t)>& f,
                     double target_abs_tol, int max_level = 12);

/// Integral of f along the straight segment [a, b] in the complex plane.
/// f(z, za, bz) with za = z-a and bz = b-z exact near the endpoints.
QuadResult integrate_segment(const std::function<cplx(cplx z, cplx za, cplx bz)>& f, cplx a, cplx b,
                             double target_abs_tol, int max_level = 12);

/// Adaptive Gauss-Legendre on [a,b] (real), for smooth integrands.
QuadResult integrate_smooth(const std::function<cplx(double)>& f, double a, double b,
                            double target_abs_tol, int max_depth = 24);

} // namespace periodlab::num
