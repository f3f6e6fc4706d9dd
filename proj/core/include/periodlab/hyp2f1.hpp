#pragma once

#include <complex>

#include "periodlab/lauricella.hpp"
#include "periodlab/ncalg.hpp"

namespace periodlab::hyp2f1 {

using cplx = std::complex<double>;
using lauricella::SquareMatrix;
using CMulti = ncalg::MultiSeries<cplx>;

/// Gauss parameters with explicit branch data. Defaults: principal log y,
/// log(-1) = +i pi, suited to y in (0,1).
struct HypParams {
    cplx a, b, c, y;
    cplx log_y;
    cplx log_minus_one{0.0, 3.14159265358979323846};

    HypParams(cplx a_, cplx b_, cplx c_, cplx y_);

    bool is_generic(double tol = 1e-9) const; // a, b, c, c-a, c-b not integers
    void require_generic() const;
    /// same parameters at conj(y) with conjugated branch choices (the
    /// "complex conjugate path" convention of the double copies)
    HypParams conjugated() const;
};

/// Power series at |y| < 1 with geometric tail bound.
cplx f21_series(const HypParams& p, double tol = 1e-14);

/// calF = beta(b, c-b) F(a,b,c;y), analytically continued from the
/// convergent strip Re c > Re b > 0 through the two contiguity relations.
cplx calF(const HypParams& p);
cplx calF_integral(const HypParams& p); // convergent strip only

/// calG via the identity (-1)^{c-a-b} y^{1-c} calF(1+b-c, 1+a-c, 2-c; y).
cplx calG(const HypParams& p);
/// Direct integral over (infinity, 1/y]; requires Re c < Re a + 1 < 2.
cplx calG_integral(const HypParams& p);

/// G = sin(pi a) sin(pi(c-a)) / (pi sin(pi c)) * calG / beta(b, c-b).
cplx G_function(const HypParams& p);
cplx F_function(const HypParams& p); // calF / beta(b, c-b)

/// rows (calF, calF(+1,+1,+2)), (calG, calG(+1,+1,+2))
SquareMatrix<cplx> period_matrix(const HypParams& p);
cplx period_matrix_det_reference(const HypParams& p);
double period_matrix_condition(const HypParams& p);

SquareMatrix<cplx> intersection_dr(const HypParams& p);
SquareMatrix<cplx> intersection_betti(const HypParams& p);

/// || tP_{-a,-b,-c}(y) I^B_{a,b,c}(y) P_{a,b,c}(y) - 2 pi i I^dR || / ||rhs||
double twisted_relation_residual(const HypParams& p);
/// |F F(1-..) - F(c-..) F(1+..-c)| / scale at |y| < 1 (series route)
double gauss_relation_residual(const HypParams& p);

/// w_{s,t} = pi sin(pi(s+t)) / (sin(pi s) sin(pi t))
cplx double_copy_weight(cplx s, cplx t);

/// Single-valued versions via the double copy from y and conj(y).
cplx sv_calF(const HypParams& p);
cplx sv_F(const HypParams& p);
cplx sv_G(const HypParams& p);

/// Direct 2D integral for calF^s; convergence needs
/// 0 < Re b < Re c < Re a + 1 < 2.
cplx sv_calF_integral(const HypParams& p);

/// Residual of the holomorphic-part hypergeometric ODE for sv_F, via
/// Richardson-extrapolated central differences in y.
double sv_F_ode_residual(const HypParams& p, double h = 1e-2);

/// Laurent series of calF in (s0, s1, s2) = (b, c-b, -a) to total degree
/// max_degree: pole monomials 1/s0 and s2^k/s1 plus convergent log-power
/// integrals.
CMulti laurent_calF(const HypParams& p, int max_degree);

/// max |laurent_calF - [(s0+s1)/(s0 s1) FL_11 + (1/s0) FL_12]| over stored
/// coefficients, FL computed from transported associators on {0, 1, 1/y}.
double laurent_fl_agreement_residual(const HypParams& p, int max_degree);

struct LocalCoactionCheck {
    bool verdict = false;
    int cleared_degree = 0;
    std::string mismatch;
};

/// Local motivic coaction of the hypergeometric series, reduced through the
/// n = 2 FL coaction and the beta_loc factor; both sides of the pole-cleared
/// identity are built independently and compared exactly.
LocalCoactionCheck local_coaction_check(int assoc_weight = 4);

} // namespace periodlab::hyp2f1
