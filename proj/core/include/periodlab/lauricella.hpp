#pragma once

#include <vector>

#include "periodlab/config.hpp"
#include "periodlab/hyperlog.hpp"
#include "periodlab/ncalg.hpp"

namespace periodlab::lauricella {

using hyperlog::Configuration;
using hyperlog::cplx;
using CMulti = ncalg::MultiSeries<cplx>;

enum class Realization { ordinary, single_valued, formal_motivic, formal_de_rham };

template <class T>
struct SquareMatrix {
    int n = 0;
    std::vector<T> entries;
    SquareMatrix() = default;
    SquareMatrix(int dim, const T& init) : n(dim), entries(size_t(dim) * size_t(dim), init) {}
    T& at(int i, int j) { return entries[size_t(i - 1) * size_t(n) + size_t(j - 1)]; }
    const T& at(int i, int j) const { return entries[size_t(i - 1) * size_t(n) + size_t(j - 1)]; }
};

struct ParameterVector {
    std::vector<cplx> s; // s_0..s_n
    bool is_generic(double tol = 1e-9) const;
};

/// (L_Sigma)_{ij} = -s_j int_{delta_i} x^{s0} prod (1-x/sigma_k)^{s_k} dx/(x-sigma_j),
/// along the branch-fixed admissible path. Requires Re s0 > -1 and
/// Re s_i > 0 (i = j) / > -1 (i != j).
cplx entry(const Configuration& cfg, const std::vector<cplx>& s, int i, int j);

/// Same value through the renormalized representation, holomorphic on
/// Re s0 > -1, Re s_i > -1 (the analytic continuation used near s = 0).
cplx entry_renormalized(const Configuration& cfg, const std::vector<cplx>& s, int i, int j);

SquareMatrix<cplx> matrix(const Configuration& cfg, const std::vector<cplx>& s);

/// Taylor series at s = 0 via convergent log-power integrals of the
/// renormalized kernel.
CMulti taylor(const Configuration& cfg, int i, int j, int max_degree);

/// Single-valued entry by direct 2D integration; s real with s_k > 0 and
/// sum s_k < 1/2.
cplx sv_entry(const Configuration& cfg, const std::vector<double>& s, int i, int j);

SquareMatrix<cplx> sv_matrix(const Configuration& cfg, const std::vector<double>& s);

/// Taylor series of the single-valued entry (2D log-power integrals).
CMulti sv_taylor(const Configuration& cfg, int i, int j, int max_degree);

/// Ingredients of the renormalization identity, exposed for cross-checks:
/// raw integral of Omega_j along delta_i, its renormalized version, and the
/// abelianisation prefactor sigma_i^{s0} prod_{k != i} (1-sigma_i/sigma_k)^{s_k}.
cplx omega_integral_raw(const Configuration& cfg, const std::vector<cplx>& s, int i, int j);
cplx omega_integral_renormalized(const Configuration& cfg, const std::vector<cplx>& s, int i, int j);
cplx endpoint_prefactor(const Configuration& cfg, const std::vector<cplx>& s, int i);

/// (FL)_{ij} = 1_{i=j} ab(Z^i) - s_j * beta_quotient(Z^i, j), from the
/// supplied associators Z^1..Z^n (any coefficient ring).
template <class R>
struct FlMatrix {
    int n = 0;
    int max_degree = 0;
    std::vector<ncalg::MultiSeries<R>> entries;
    ncalg::MultiSeries<R>& at(int i, int j) { return entries[size_t(i - 1) * size_t(n) + size_t(j - 1)]; }
    const ncalg::MultiSeries<R>& at(int i, int j) const {
        return entries[size_t(i - 1) * size_t(n) + size_t(j - 1)];
    }
};

template <class R>
ncalg::MultiSeries<R> retruncated(const ncalg::MultiSeries<R>& m, int max_degree) {
    ncalg::MultiSeries<R> out(m.num_vars(), max_degree);
    for (auto& [e, c] : m.coeffs()) out.set(e, c);
    return out;
}

template <class R>
FlMatrix<R> fl_matrix(const std::vector<ncalg::NCSeries<R>>& assoc, int max_degree) {
    if (assoc.empty()) throw std::invalid_argument("fl_matrix: no associators");
    const int n = int(assoc.size());
    const int vars = assoc[0].alphabet_size();
    if (vars != n + 1) throw std::invalid_argument("fl_matrix: need n associators over e_0..e_n");
    for (auto& z : assoc)
        if (z.max_weight() < max_degree)
            throw std::invalid_argument("fl_matrix: insufficient associator weight");
    FlMatrix<R> fl;
    fl.n = n;
    fl.max_degree = max_degree;
    fl.entries.assign(size_t(n) * size_t(n), ncalg::MultiSeries<R>(vars, max_degree));
    for (int i = 1; i <= n; ++i) {
        auto ab = retruncated(ncalg::abelianize(assoc[size_t(i - 1)]), max_degree);
        for (int j = 1; j <= n; ++j) {
            auto bq = retruncated(ncalg::beta_quotient(assoc[size_t(i - 1)], j), max_degree);
            typename ncalg::MultiSeries<R>::Expo ej(size_t(vars), 0);
            ej[size_t(j)] = 1;
            auto entry = bq.shifted(ej).scaled(ncalg::ring_traits<R>::from_rational(periodlab::Rational(-1)));
            if (i == j) entry += ab;
            fl.at(i, j) = entry;
        }
    }
    return fl;
}

/// Numeric FL matrix from transported associators at weight = max_degree.
FlMatrix<cplx> fl_matrix_numeric(const Configuration& cfg, int max_degree);

/// max-norm of L^s(s) - L_{conj Sigma}(-s)^{-1} L_Sigma(s).
double double_copy_residual(const Configuration& cfg, const std::vector<double>& s);

/// max-norm of L_Sigma(s) - L_{conj Sigma}(-s) L^s(s) (the rearranged form).
double coaction_period_residual(const Configuration& cfg, const std::vector<double>& s);

SquareMatrix<cplx> invert(const SquareMatrix<cplx>& m);

} // namespace periodlab::lauricella
