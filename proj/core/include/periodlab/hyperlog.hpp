#pragma once

#include "periodlab/config.hpp"
#include "periodlab/ncalg.hpp"

namespace periodlab::hyperlog {

using CSeries = ncalg::NCSeries<cplx>;

/// Generating series of regularized iterated integrals of dx/(x-sigma_k)
/// along the admissible path from t_0 to -t_i; group-like to quadrature
/// accuracy. Coefficients follow the left-to-right convention: the first
/// letter of a word is integrated nearest the basepoint at 0.
CSeries associator(const Configuration& cfg, int i, int max_weight);
CSeries associator(const Configuration& cfg, const AdmissiblePath& path, int max_weight);

/// Single regularized iterated integral (coefficient of w in the associator).
cplx reg_iterated_integral(const Configuration& cfg, const AdmissiblePath& path, const ncalg::Word& w);

/// Max shuffle-relation defect of the numeric associator.
double shuffle_regularization_check(const Configuration& cfg, int i, int max_weight);

} // namespace periodlab::hyperlog
