#pragma once

#include <complex>
#include <map>
#include <stdexcept>
#include <vector>

#include "periodlab/rational.hpp"
#include "periodlab/word.hpp"

namespace periodlab::ncalg {

/// Coefficient-ring hooks. Specialize for rings that are not covered by the
/// generic member-function fallback (complex<double> below).
template <class R>
struct ring_traits {
    static R zero() { return R::zero(); }
    static R one() { return R::one(); }
    static bool is_zero(const R& r) { return r.is_zero(); }
    static R from_rational(const Rational& q) { return R::from_rational(q); }
};

template <>
struct ring_traits<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static bool is_zero(const Rational& r) { return r.is_zero(); }
    static Rational from_rational(const Rational& q) { return q; }
};

template <>
struct ring_traits<std::complex<double>> {
    static std::complex<double> zero() { return {0.0, 0.0}; }
    static std::complex<double> one() { return {1.0, 0.0}; }
    static bool is_zero(const std::complex<double>& z) { return z == std::complex<double>(0.0, 0.0); }
    static std::complex<double> from_rational(const Rational& q) { return {q.to_double(), 0.0}; }
};

/// Truncated noncommutative power series in e_0..e_{n}. Absent word = zero
/// coefficient; no stored word is longer than max_weight.
template <class R>
class NCSeries {
public:
    NCSeries(int alphabet_size, int max_weight)
        : alphabet_(alphabet_size), max_weight_(max_weight) {
        if (alphabet_size < 1 || max_weight < 0) throw std::invalid_argument("NCSeries: bad shape");
    }

    static NCSeries unit(int alphabet_size, int max_weight) {
        NCSeries s(alphabet_size, max_weight);
        s.set(Word{}, ring_traits<R>::one());
        return s;
    }
    static NCSeries letter(int alphabet_size, int max_weight, int k) {
        NCSeries s(alphabet_size, max_weight);
        s.set(Word{k}, ring_traits<R>::one());
        return s;
    }

    int alphabet_size() const { return alphabet_; }
    int max_weight() const { return max_weight_; }
    const std::map<Word, R>& coeffs() const { return coeffs_; }

    R coeff(const Word& w) const {
        auto it = coeffs_.find(w);
        return it == coeffs_.end() ? ring_traits<R>::zero() : it->second;
    }
    R constant_term() const { return coeff(Word{}); }

    void set(const Word& w, const R& c) {
        if (w.size() > max_weight_) return;
        if (w.max_letter() >= alphabet_) throw std::invalid_argument("NCSeries: letter out of range");
        if (ring_traits<R>::is_zero(c))
            coeffs_.erase(w);
        else
            coeffs_[w] = c;
    }
    void add_to(const Word& w, const R& c) {
        if (w.size() > max_weight_) return;
        auto it = coeffs_.find(w);
        if (it == coeffs_.end()) {
            if (!ring_traits<R>::is_zero(c)) coeffs_.emplace(w, c);
        } else {
            it->second = it->second + c;
            if (ring_traits<R>::is_zero(it->second)) coeffs_.erase(it);
        }
    }

    NCSeries& operator+=(const NCSeries& o) {
        check_shape(o);
        for (auto& [w, c] : o.coeffs_) add_to(w, c);
        return *this;
    }
    NCSeries& operator-=(const NCSeries& o) {
        check_shape(o);
        for (auto& [w, c] : o.coeffs_) add_to(w, ring_traits<R>::zero() - c);
        return *this;
    }
    friend NCSeries operator+(NCSeries a, const NCSeries& b) { return a += b; }
    friend NCSeries operator-(NCSeries a, const NCSeries& b) { return a -= b; }

    NCSeries scaled(const R& c) const {
        NCSeries out(alphabet_, max_weight_);
        for (auto& [w, v] : coeffs_) out.set(w, v * c);
        return out;
    }

    friend bool operator==(const NCSeries& a, const NCSeries& b) {
        return a.alphabet_ == b.alphabet_ && a.max_weight_ == b.max_weight_ && a.coeffs_ == b.coeffs_;
    }

    void check_shape(const NCSeries& o) const {
        if (o.alphabet_ != alphabet_ || o.max_weight_ != max_weight_)
            throw std::invalid_argument("NCSeries: alphabet/weight mismatch");
    }

private:
    int alphabet_;
    int max_weight_;
    std::map<Word, R> coeffs_;
};

/// (AB)(w) = sum over splittings w = uv of A(u)B(v), truncated at max_weight.
template <class R>
NCSeries<R> concat_mul(const NCSeries<R>& a, const NCSeries<R>& b) {
    a.check_shape(b);
    NCSeries<R> out(a.alphabet_size(), a.max_weight());
    for (auto& [u, cu] : a.coeffs()) {
        for (auto& [v, cv] : b.coeffs()) {
            if (u.size() + v.size() > a.max_weight()) continue;
            out.add_to(u.concat(v), cu * cv);
        }
    }
    return out;
}

/// Truncated commutative power series in num_vars variables. Exponents are
/// signed so Laurent monomials (finitely many poles) share the container;
/// the stored total degree never exceeds max_degree.
template <class R>
class MultiSeries {
public:
    using Expo = std::vector<int>;

    MultiSeries(int num_vars, int max_degree) : vars_(num_vars), max_degree_(max_degree) {}

    static MultiSeries unit(int num_vars, int max_degree) {
        MultiSeries s(num_vars, max_degree);
        s.set(Expo(size_t(num_vars), 0), ring_traits<R>::one());
        return s;
    }
    static MultiSeries monomial(int num_vars, int max_degree, const Expo& e, const R& c) {
        MultiSeries s(num_vars, max_degree);
        s.set(e, c);
        return s;
    }

    int num_vars() const { return vars_; }
    int max_degree() const { return max_degree_; }
    const std::map<Expo, R>& coeffs() const { return coeffs_; }

    static int total_degree(const Expo& e) {
        int d = 0;
        for (int x : e) d += x;
        return d;
    }

    R coeff(const Expo& e) const {
        auto it = coeffs_.find(e);
        return it == coeffs_.end() ? ring_traits<R>::zero() : it->second;
    }

    void set(const Expo& e, const R& c) {
        if (int(e.size()) != vars_) throw std::invalid_argument("MultiSeries: arity mismatch");
        if (total_degree(e) > max_degree_) return;
        if (ring_traits<R>::is_zero(c))
            coeffs_.erase(e);
        else
            coeffs_[e] = c;
    }
    void add_to(const Expo& e, const R& c) {
        if (total_degree(e) > max_degree_) return;
        auto it = coeffs_.find(e);
        if (it == coeffs_.end()) {
            if (!ring_traits<R>::is_zero(c)) coeffs_.emplace(e, c);
        } else {
            it->second = it->second + c;
            if (ring_traits<R>::is_zero(it->second)) coeffs_.erase(it);
        }
    }

    MultiSeries& operator+=(const MultiSeries& o) {
        check_shape(o);
        for (auto& [e, c] : o.coeffs_) add_to(e, c);
        return *this;
    }
    MultiSeries& operator-=(const MultiSeries& o) {
        check_shape(o);
        for (auto& [e, c] : o.coeffs_) add_to(e, ring_traits<R>::zero() - c);
        return *this;
    }
    friend MultiSeries operator+(MultiSeries a, const MultiSeries& b) { return a += b; }
    friend MultiSeries operator-(MultiSeries a, const MultiSeries& b) { return a -= b; }

    friend MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) {
        a.check_shape(b);
        MultiSeries out(a.vars_, a.max_degree_);
        for (auto& [ea, ca] : a.coeffs_)
            for (auto& [eb, cb] : b.coeffs_) {
                Expo e = Expo(size_t(a.vars_), 0);
                for (int i = 0; i < a.vars_; ++i) e[size_t(i)] = ea[size_t(i)] + eb[size_t(i)];
                out.add_to(e, ca * cb);
            }
        return out;
    }

    MultiSeries scaled(const R& c) const {
        MultiSeries out(vars_, max_degree_);
        for (auto& [e, v] : coeffs_) out.set(e, v * c);
        return out;
    }

    /// Multiply by the monomial prod x_i^{shift_i}.
    MultiSeries shifted(const Expo& shift) const {
        MultiSeries out(vars_, max_degree_);
        for (auto& [e, v] : coeffs_) {
            Expo f = Expo(size_t(vars_), 0);
            for (int i = 0; i < vars_; ++i) f[size_t(i)] = e[size_t(i)] + shift[size_t(i)];
            out.add_to(f, v);
        }
        return out;
    }

    /// Truncated exp; input must have only terms of total degree >= 1.
    MultiSeries exp() const {
        for (auto& [e, c] : coeffs_) {
            (void)c;
            if (total_degree(e) < 1) throw std::domain_error("MultiSeries::exp: nonzero constant term");
        }
        MultiSeries out = unit(vars_, max_degree_);
        MultiSeries pow = unit(vars_, max_degree_);
        for (int k = 1; k <= max_degree_; ++k) {
            pow = pow * (*this);
            if (pow.coeffs_.empty()) break;
            out += pow.scaled(ring_traits<R>::from_rational(Rational::factorial_inv(k)));
        }
        return out;
    }

    /// Truncated inverse; requires a unit at exponent 0 for exact rings.
    MultiSeries inverse() const {
        Expo z(size_t(vars_), 0);
        R c0 = coeff(z);
        if (ring_traits<R>::is_zero(c0)) throw std::domain_error("MultiSeries::inverse: zero constant term");
        // geometric series in (1 - A/c0); requires plain power-series input
        for (auto& [e, c] : coeffs_) {
            (void)c;
            for (int x : e)
                if (x < 0) throw std::domain_error("MultiSeries::inverse: Laurent input");
        }
        R inv0 = ring_traits<R>::one() / c0;
        MultiSeries rest = *this;
        rest.add_to(z, ring_traits<R>::zero() - c0);
        rest = rest.scaled(ring_traits<R>::zero() - inv0); // -(A - c0)/c0
        MultiSeries out = unit(vars_, max_degree_);
        MultiSeries pow = unit(vars_, max_degree_);
        for (int k = 1; k <= max_degree_; ++k) {
            pow = pow * rest;
            if (pow.coeffs_.empty()) break;
            out += pow;
        }
        return out.scaled(inv0);
    }

    friend bool operator==(const MultiSeries& a, const MultiSeries& b) {
        return a.vars_ == b.vars_ && a.max_degree_ == b.max_degree_ && a.coeffs_ == b.coeffs_;
    }

    void check_shape(const MultiSeries& o) const {
        if (o.vars_ != vars_ || o.max_degree_ != max_degree_)
            throw std::invalid_argument("MultiSeries: shape mismatch");
    }

private:
    int vars_;
    int max_degree_;
    std::map<Expo, R> coeffs_;
};

} // namespace periodlab::ncalg

namespace periodlab::ncalg {

/// R needs operator/ for this; complex and Rational both qualify.
template <class R>
R ring_div(const R& a, const R& b) {
    return a / b;
}

} // namespace periodlab::ncalg
