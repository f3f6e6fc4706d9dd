#pragma once

#include <complex>

namespace periodlab::num {

using cplx = std::complex<double>;

/// Lanczos (g = 7, 9 terms) with reflection for Re z < 0.5.
cplx gamma(cplx z);
cplx log_gamma(cplx z);

/// Euler beta via gamma.
cplx beta(cplx a, cplx b);

/// Single-valued beta, Gamma(a)Gamma(b)Gamma(1-a-b) / (Gamma(a+b)Gamma(1-a)Gamma(1-b)).
cplx sv_beta(cplx a, cplx b);

/// zeta(n) for integer n >= 2, Euler-Maclaurin tail. Accuracy ~1e-14.
double zeta(int n);

/// Single-valued zeta: 2*zeta(n) for odd n >= 3, zero for even n.
double sv_zeta(int n);

} // namespace periodlab::num
