#pragma once

#include "periodlab/lauricella.hpp"
#include "periodlab/periods.hpp"

namespace periodlab::coaction {

using periods::MotivicSeries;
using periods::PeriodExpr;
using periods::Realization;
using periods::TensorExpr;
using periods::TensorSeries;
using TensorMulti = ncalg::MultiSeries<TensorExpr>;

/// Delta Z^{i,m} = Z^{i,m}(lef e_0, lef e'_1, ..., lef e'_n) Z^{i,dr} with
/// e'_k = Z^{k,dr} e_k Z^{k,dr,-1}, computed modulo lef = 1 with the powers
/// restored by weight homogeneity. The motivic/de Rham sources must share
/// alphabet and weight cutoff.
TensorSeries coact_associator(const MotivicSeries& zm, const std::vector<MotivicSeries>& zdr_all,
                              int i);

/// Free-symbol version for a configuration label with n finite points.
TensorSeries coact_associator_free(int n, int i, int max_weight);

/// Sigma = {0,1} version with zeta-symbol Drinfeld coefficients.
TensorSeries coact_associator_drinfeld(int max_weight);

/// Counit axiom (id (x) eps) Delta Z = Z, checked degreewise; eps sends
/// lef to 1 and de Rham symbols to 0.
bool counit_axiom_holds(const TensorSeries& dz, const MotivicSeries& zm);

struct CoactFlResult {
    bool verdict = false;
    int n = 0;
    int max_degree = 0;
    std::vector<TensorMulti> lhs; // Delta_nor FL^m, beta-quotient route
    std::vector<TensorMulti> rhs; // FL^m (x) FL^dr(lef^{-1} s), matrix product route
    std::string first_mismatch;

    const TensorMulti& lhs_at(int i, int j) const {
        return lhs[size_t(i - 1) * size_t(n) + size_t(j - 1)];
    }
    const TensorMulti& rhs_at(int i, int j) const {
        return rhs[size_t(i - 1) * size_t(n) + size_t(j - 1)];
    }
};

/// Normalised coaction on the FL matrix, both sides computed independently:
/// LHS via beta quotients of coact_associator plus the Delta_nor(s_k) twist,
/// RHS as FL^m(s) (x) FL^dr(s lef^{-1}). Exact symbol equality per degree.
CoactFlResult coact_fl(int n, int max_degree);

/// Weight bookkeeping of the normalised coaction output: every tensor term
/// of every coefficient has right factor of total weight 0 and left factor
/// weight matching the s-degree. Returns the number of violations.
int weight_homogeneity_violations(const CoactFlResult& r);

/// Numeric shadow of per = (per F_inf (x) sv) Delta: max-norm residual of
/// L(s) = L_conj(-s) L^s(s).
double coaction_period_consistency(const hyperlog::Configuration& cfg, const std::vector<double>& s);

} // namespace periodlab::coaction
