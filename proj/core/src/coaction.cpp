#include "periodlab/coaction.hpp"

#include <sstream>

namespace periodlab::coaction {

using ncalg::Word;
using periods::Monomial;
using periods::symbolic_associator;

namespace {

TensorSeries lift_left(const MotivicSeries& z) {
    TensorSeries out(z.alphabet_size(), z.max_weight());
    for (auto& [w, c] : z.coeffs())
        out.set(w, TensorExpr::tensor(c, PeriodExpr::one(Realization::de_rham)));
    return out;
}

TensorSeries lift_right(const MotivicSeries& z) {
    TensorSeries out(z.alphabet_size(), z.max_weight());
    for (auto& [w, c] : z.coeffs())
        out.set(w, TensorExpr::tensor(PeriodExpr::one(Realization::motivic), c));
    return out;
}

/// restore lef^(weight(left)/2) on the right factor; the mod-lef computation
/// keeps tensor terms weight-homogeneous, which pins the powers
TensorSeries restore_lef(const TensorSeries& dz) {
    TensorSeries out(dz.alphabet_size(), dz.max_weight());
    for (auto& [w, c] : dz.coeffs()) {
        TensorExpr fixed;
        for (auto& [pair, q] : c.terms()) {
            int wl = pair.first.weight();
            int wr = pair.second.weight();
            if (wl + wr != 2 * w.size() || wl % 2 != 0)
                throw std::logic_error("coact_associator: weight bookkeeping violated");
            Monomial r = pair.second;
            r.lef_power += wl / 2;
            fixed.add_term(pair.first, r, q);
        }
        out.set(w, fixed);
    }
    return out;
}

} // namespace

TensorSeries coact_associator(const MotivicSeries& zm, const std::vector<MotivicSeries>& zdr_all,
                              int i) {
    const int n = zm.alphabet_size() - 1;
    if (int(zdr_all.size()) != n)
        throw std::invalid_argument("coact_associator: need de Rham associators for letters 1..n");
    TensorSeries f = lift_left(zm);
    std::vector<TensorSeries> g;
    for (auto& z : zdr_all) g.push_back(lift_right(z));
    // lambda = 1: computed modulo lef, restored afterwards by homogeneity
    TensorSeries dz = ncalg::ihara_substitute(f, ncalg::ring_traits<TensorExpr>::one(), g, i);
    return restore_lef(dz);
}

TensorSeries coact_associator_free(int n, int i, int max_weight) {
    MotivicSeries zm = symbolic_associator(Realization::motivic, n + 1, i, max_weight);
    std::vector<MotivicSeries> zdr;
    for (int k = 1; k <= n; ++k)
        zdr.push_back(symbolic_associator(Realization::de_rham, n + 1, k, max_weight));
    return coact_associator(zm, zdr, i);
}

TensorSeries coact_associator_drinfeld(int max_weight) {
    MotivicSeries zm = periods::drinfeld_symbolic(Realization::motivic, max_weight);
    std::vector<MotivicSeries> zdr = {periods::drinfeld_symbolic(Realization::de_rham, max_weight)};
    return coact_associator(zm, zdr, 1);
}

bool counit_axiom_holds(const TensorSeries& dz, const MotivicSeries& zm) {
    for (auto& w : ncalg::words_up_to(zm.alphabet_size(), zm.max_weight())) {
        PeriodExpr contracted = dz.coeff(w).counit_right();
        if (!(contracted == zm.coeff(w))) return false;
    }
    return true;
}

namespace {

using lauricella::FlMatrix;

TensorMulti lift_left(const ncalg::MultiSeries<PeriodExpr>& m) {
    TensorMulti out(m.num_vars(), m.max_degree());
    for (auto& [e, c] : m.coeffs())
        out.set(e, TensorExpr::tensor(c, PeriodExpr::one(Realization::de_rham)));
    return out;
}

/// FL^dr with s -> s lef^{-1}: the degree-d coefficient picks lef^{-d}.
TensorMulti lift_right_rescaled(const ncalg::MultiSeries<PeriodExpr>& m) {
    TensorMulti out(m.num_vars(), m.max_degree());
    for (auto& [e, c] : m.coeffs()) {
        int d = TensorMulti::total_degree(e);
        out.set(e, TensorExpr::tensor(PeriodExpr::one(Realization::motivic), c).lef_shifted_right(-d));
    }
    return out;
}

/// Delta_nor(s_k) = s_k (1 (x) lef^{-1}) applied to an already-coacted
/// multiseries: degree-d coefficients pick (1 (x) lef^{-d}).
TensorMulti apply_s_twist(const TensorMulti& m) {
    TensorMulti out(m.num_vars(), m.max_degree());
    for (auto& [e, c] : m.coeffs()) out.set(e, c.lef_shifted_right(-TensorMulti::total_degree(e)));
    return out;
}

} // namespace

CoactFlResult coact_fl(int n, int max_degree) {
    CoactFlResult res;
    res.n = n;
    res.max_degree = max_degree;
    const int vars = n + 1;

    // symbolic sources
    std::vector<MotivicSeries> zm, zdr;
    for (int k = 1; k <= n; ++k) {
        zm.push_back(symbolic_associator(Realization::motivic, vars, k, max_degree));
        zdr.push_back(symbolic_associator(Realization::de_rham, vars, k, max_degree));
    }

    // LHS: beta quotients of the coacted associators, then the s_k twist
    std::vector<TensorSeries> dz;
    for (int k = 1; k <= n; ++k) dz.push_back(coact_associator(zm[size_t(k - 1)], zdr, k));
    FlMatrix<TensorExpr> lhs_fl = lauricella::fl_matrix(dz, max_degree);

    // RHS: FL^m (x) FL^dr(lef^{-1} s), matrix product over the tensor ring
    FlMatrix<PeriodExpr> flm = lauricella::fl_matrix(zm, max_degree);
    FlMatrix<PeriodExpr> fldr = lauricella::fl_matrix(zdr, max_degree);

    res.verdict = true;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            TensorMulti lhs = apply_s_twist(lhs_fl.at(i, j));
            TensorMulti rhs(vars, max_degree);
            for (int l = 1; l <= n; ++l)
                rhs += lift_left(flm.at(i, l)) * lift_right_rescaled(fldr.at(l, j));
            res.lhs.push_back(lhs);
            res.rhs.push_back(rhs);
            if (!(lhs == rhs) && res.verdict) {
                res.verdict = false;
                // report the first mismatching coefficient for diagnostics
                for (auto& [e, c] : lhs.coeffs()) {
                    if (!(rhs.coeff(e) == c)) {
                        std::ostringstream os;
                        os << "entry (" << i << "," << j << ") at exponent [";
                        for (size_t t = 0; t < e.size(); ++t) os << (t ? "," : "") << e[t];
                        os << "]";
                        res.first_mismatch = os.str();
                        break;
                    }
                }
                if (res.first_mismatch.empty()) res.first_mismatch = "extra terms on the rhs";
            }
        }
    return res;
}

int weight_homogeneity_violations(const CoactFlResult& r) {
    int bad = 0;
    for (auto& entry : r.lhs)
        for (auto& [e, c] : entry.coeffs()) {
            int d = TensorMulti::total_degree(e);
            for (auto& [pair, q] : c.terms()) {
                (void)q;
                // right factor weight 0 after the lef rescaling of s; left
                // factor weight accounts for the rest of the s-degree
                int wr = pair.second.weight();
                int wl = pair.first.weight();
                if (wr != 0 || wl % 2 != 0 || wl / 2 + (-pair.second.lef_power) != d) ++bad;
            }
        }
    return bad;
}

double coaction_period_consistency(const hyperlog::Configuration& cfg, const std::vector<double>& s) {
    return lauricella::coaction_period_residual(cfg, s);
}

} // namespace periodlab::coaction
