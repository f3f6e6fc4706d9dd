#pragma once

#include <cmath>
#include <functional>

#include "periodlab/ncseries.hpp"

namespace periodlab::ncalg {

/// exp with respect to concatenation; input must have zero constant term.
template <class R>
NCSeries<R> nc_exp(const NCSeries<R>& l) {
    if (!ring_traits<R>::is_zero(l.constant_term()))
        throw std::domain_error("nc_exp: nonzero constant term");
    NCSeries<R> out = NCSeries<R>::unit(l.alphabet_size(), l.max_weight());
    NCSeries<R> pow = out;
    for (int k = 1; k <= l.max_weight(); ++k) {
        pow = concat_mul(pow, l);
        if (pow.coeffs().empty()) break;
        out += pow.scaled(ring_traits<R>::from_rational(Rational::factorial_inv(k)));
    }
    return out;
}

/// log with respect to concatenation; input must have constant term 1.
template <class R>
NCSeries<R> nc_log(const NCSeries<R>& a) {
    R one = ring_traits<R>::one();
    if (!ring_traits<R>::is_zero(a.constant_term() - one))
        throw std::domain_error("nc_log: constant term is not 1");
    NCSeries<R> x = a;
    x.add_to(Word{}, ring_traits<R>::zero() - one); // x = a - 1
    NCSeries<R> out(a.alphabet_size(), a.max_weight());
    NCSeries<R> pow = NCSeries<R>::unit(a.alphabet_size(), a.max_weight());
    Rational sign(1);
    for (int k = 1; k <= a.max_weight(); ++k) {
        pow = concat_mul(pow, x);
        if (pow.coeffs().empty()) break;
        out += pow.scaled(ring_traits<R>::from_rational(sign * Rational(1, k)));
        sign = -sign;
    }
    return out;
}

/// Concatenation inverse; the constant term must be invertible.
template <class R>
NCSeries<R> nc_inverse(const NCSeries<R>& a) {
    R c0 = a.constant_term();
    if (ring_traits<R>::is_zero(c0)) throw std::domain_error("nc_inverse: zero constant term");
    R inv0 = ring_div(ring_traits<R>::one(), c0);
    NCSeries<R> rest = a;
    rest.add_to(Word{}, ring_traits<R>::zero() - c0);
    rest = rest.scaled(ring_traits<R>::zero() - inv0); // -(a - c0)/c0
    NCSeries<R> out = NCSeries<R>::unit(a.alphabet_size(), a.max_weight());
    NCSeries<R> pow = out;
    for (int k = 1; k <= a.max_weight(); ++k) {
        pow = concat_mul(pow, rest);
        if (pow.coeffs().empty()) break;
        out += pow;
    }
    return out.scaled(inv0);
}

/// Largest shuffle defect |A(u)A(v) - sum_{w in u sh v} A(w)| over stored
/// pairs with |u|+|v| <= max_weight. For exact rings a nonzero defect is
/// reported as 1.0.
template <class R>
double shuffle_defect(const NCSeries<R>& a, const std::function<double(const R&)>& absval) {
    double worst = 0.0;
    auto words = words_up_to(a.alphabet_size(), a.max_weight());
    for (auto& u : words) {
        if (u.empty()) continue;
        for (auto& v : words) {
            if (v.empty() || u.size() + v.size() > a.max_weight()) continue;
            R rhs = ring_traits<R>::zero();
            for (auto& [w, mult] : shuffle(u, v)) rhs = rhs + a.coeff(w) * ring_traits<R>::from_rational(Rational(mult));
            R defect = a.coeff(u) * a.coeff(v) - rhs;
            worst = std::max(worst, absval(defect));
        }
    }
    return worst;
}

inline double abs_of(const std::complex<double>& z) { return std::abs(z); }
// exact rings: any nonzero defect counts as 1
template <class R>
double abs_of(const R& r) {
    return ring_traits<R>::is_zero(r) ? 0.0 : 1.0;
}

/// Group-likeness: constant term 1 and all shuffle relations hold. Exact
/// rings demand equality (pass tolerance 0).
template <class R>
bool is_group_like(const NCSeries<R>& a, double tolerance = 1e-9) {
    if (!ring_traits<R>::is_zero(a.constant_term() - ring_traits<R>::one())) return false;
    double d = shuffle_defect<R>(a, [](const R& r) { return abs_of(r); });
    return d <= tolerance;
}

/// e_k -> s_k.
template <class R>
MultiSeries<R> abelianize(const NCSeries<R>& a) {
    MultiSeries<R> out(a.alphabet_size(), a.max_weight());
    for (auto& [w, c] : a.coeffs()) {
        typename MultiSeries<R>::Expo e(size_t(a.alphabet_size()), 0);
        for (int i = 0; i < w.size(); ++i) ++e[size_t(w[i])];
        out.add_to(e, c);
    }
    return out;
}

/// Abelianization of A_j, where A_j collects the words of A ending in e_j
/// with that last letter dropped.
template <class R>
MultiSeries<R> beta_quotient(const NCSeries<R>& a, int j) {
    if (j < 0 || j >= a.alphabet_size()) throw std::invalid_argument("beta_quotient: letter out of range");
    MultiSeries<R> out(a.alphabet_size(), a.max_weight());
    for (auto& [w, c] : a.coeffs()) {
        if (w.empty() || int(w.back()) != j) continue;
        typename MultiSeries<R>::Expo e(size_t(a.alphabet_size()), 0);
        for (int i = 0; i + 1 < w.size(); ++i) ++e[size_t(w[i])];
        out.add_to(e, c);
    }
    return out;
}

/// F(lambda e_0, lambda G_1 e_1 G_1^{-1}, ..., lambda G_n e_n G_n^{-1}) G_i.
/// G holds the series for letters 1..n and every G_k must have constant
/// term 1 so the substituted letters keep zero constant term.
template <class R>
NCSeries<R> ihara_substitute(const NCSeries<R>& f, const R& lambda,
                             const std::vector<NCSeries<R>>& g, int i) {
    const int n = f.alphabet_size() - 1;
    if (int(g.size()) != n) throw std::invalid_argument("ihara_substitute: need one G per letter 1..n");
    if (i < 1 || i > n) throw std::invalid_argument("ihara_substitute: index out of range");
    const int W = f.max_weight();
    const int A = f.alphabet_size();

    std::vector<NCSeries<R>> arg;
    arg.reserve(size_t(A));
    arg.push_back(NCSeries<R>::letter(A, W, 0).scaled(lambda));
    for (int k = 1; k <= n; ++k) {
        const NCSeries<R>& gk = g[size_t(k - 1)];
        f.check_shape(gk);
        if (!ring_traits<R>::is_zero(gk.constant_term() - ring_traits<R>::one()))
            throw std::domain_error("ihara_substitute: G_k constant term is not 1");
        NCSeries<R> conj = concat_mul(concat_mul(gk, NCSeries<R>::letter(A, W, k)), nc_inverse(gk));
        arg.push_back(conj.scaled(lambda));
    }

    // prefix products shared across words via DFS over the word tree
    NCSeries<R> acc(A, W);
    std::function<void(const Word&, const NCSeries<R>&)> dfs = [&](const Word& w, const NCSeries<R>& prod) {
        R c = f.coeff(w);
        if (!ring_traits<R>::is_zero(c)) acc += prod.scaled(c);
        if (w.size() >= W) return;
        for (int l = 0; l < A; ++l) {
            Word wl = w.appended(Letter(l));
            // every substituted letter has minimal weight 1, so depth bounds weight
            dfs(wl, concat_mul(prod, arg[size_t(l)]));
        }
    };
    dfs(Word{}, NCSeries<R>::unit(A, W));
    return concat_mul(acc, g[size_t(i - 1)]);
}

} // namespace periodlab::ncalg
