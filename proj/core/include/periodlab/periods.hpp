#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "periodlab/config.hpp"
#include "periodlab/ncalg.hpp"
#include "periodlab/rational.hpp"

namespace periodlab::periods {

using ncalg::Word;

enum class Realization { motivic, de_rham };

/// One generator occurrence: an associator-coefficient symbol Z[i; w] or a
/// zeta symbol zeta(n1, n2, ...). The Lefschetz generator is tracked
/// separately as a power on the monomial.
struct Symbol {
    enum class Kind { assoc, zeta } kind = Kind::assoc;
    int index = 0;         // path index i (assoc)
    Word word;             // assoc word
    std::vector<int> args; // zeta arguments

    int weight() const; // 2|w| for assoc, 2(n1+...+nr) for zeta
    friend bool operator<(const Symbol& a, const Symbol& b);
    friend bool operator==(const Symbol& a, const Symbol& b);
    std::string str(Realization r) const;
};

Symbol assoc_symbol(int i, const Word& w);
Symbol zeta_symbol(int n);
Symbol zeta_symbol(std::vector<int> args);

/// lef^p * product of symbols, factors sorted.
struct Monomial {
    int lef_power = 0;
    std::vector<Symbol> factors;

    int weight() const;
    friend bool operator<(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b);
    Monomial operator*(const Monomial& o) const;
    std::string str(Realization r) const;
};

/// Rational-linear combination of monomials in one realization. Reductions:
/// assoc symbols with empty word collapse to 1, de Rham zeta(2n) = 0,
/// lef powers add (lef is invertible).
class PeriodExpr {
public:
    PeriodExpr() : tag_(Realization::motivic) {}
    explicit PeriodExpr(Realization tag) : tag_(tag) {}
    PeriodExpr(Realization tag, const Rational& c) : tag_(tag) {
        if (!c.is_zero()) terms_[Monomial{}] = c;
    }

    static PeriodExpr one(Realization tag) { return PeriodExpr(tag, Rational(1)); }
    static PeriodExpr lef(Realization tag, int power = 1);
    static PeriodExpr generator(Realization tag, const Symbol& s, const Rational& c = Rational(1));

    Realization tag() const { return tag_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// homogeneous weight, or nullopt for 0 / inhomogeneous input
    std::optional<int> weight() const;

    PeriodExpr operator+(const PeriodExpr& o) const;
    PeriodExpr operator-(const PeriodExpr& o) const;
    PeriodExpr operator*(const PeriodExpr& o) const;
    PeriodExpr operator-() const;
    PeriodExpr scaled(const Rational& c) const;
    PeriodExpr lef_shifted(int dp) const; // multiply by lef^dp

    friend bool operator==(const PeriodExpr& a, const PeriodExpr& b) {
        return a.tag_ == b.tag_ && a.terms_ == b.terms_;
    }

    void add_term(const Monomial& m, const Rational& c);
    std::string str() const;

private:
    Realization tag_;
    std::map<Monomial, Rational> terms_;
};

/// Division by rational multiples of 1 (series units); anything else throws.
PeriodExpr operator/(const PeriodExpr& a, const PeriodExpr& b);

/// pi^{m,+}: lef -> 0, motivic symbols -> de Rham symbols. Rejects negative
/// lef powers (non-effective input).
PeriodExpr de_rham_projection(const PeriodExpr& motivic);

/// Rational-linear combination of (motivic x de Rham) monomial pairs.
class TensorExpr {
public:
    TensorExpr() = default;
    static TensorExpr one() { return tensor(PeriodExpr::one(Realization::motivic), PeriodExpr::one(Realization::de_rham)); }
    static TensorExpr tensor(const PeriodExpr& left, const PeriodExpr& right);

    const std::map<std::pair<Monomial, Monomial>, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    TensorExpr operator+(const TensorExpr& o) const;
    TensorExpr operator-(const TensorExpr& o) const;
    TensorExpr operator*(const TensorExpr& o) const;
    TensorExpr operator-() const;
    TensorExpr scaled(const Rational& c) const;
    TensorExpr lef_shifted_right(int dp) const; // multiply right factor by lef^dp

    friend bool operator==(const TensorExpr& a, const TensorExpr& b) { return a.terms_ == b.terms_; }

    void add_term(const Monomial& l, const Monomial& r, const Rational& c);
    std::string str() const;

    /// counit on the right factor: lef -> 1, symbols -> 0; returns the
    /// contracted motivic expression.
    PeriodExpr counit_right() const;

private:
    std::map<std::pair<Monomial, Monomial>, Rational> terms_;
};

TensorExpr operator/(const TensorExpr& a, const TensorExpr& b);

/// Delta zeta^m(n) = zeta^m(n) (x) lef^n + 1 (x) zeta^dr(n); the de Rham
/// zeta vanishes for even n.
TensorExpr coact_zeta(int n);

/// Symbolic generalised associators: Z^{i,*} = sum_w [Z-symbol(i,w)] w with
/// free coefficients.
ncalg::NCSeries<PeriodExpr> symbolic_associator(Realization tag, int alphabet_size, int i,
                                                int max_weight);

/// Drinfeld associator for Sigma = {0,1} with zeta-symbol coefficients,
/// obtained from the convergent-word table by solving the shuffle relations
/// (weight <= 4).
ncalg::NCSeries<PeriodExpr> drinfeld_symbolic(Realization tag, int max_weight);

/// Numeric backends for evaluation.
struct EvalBackend {
    const hyperlog::Configuration* cfg = nullptr; // for assoc symbols
    int assoc_weight = 0;                         // cache depth
};

/// per: lef -> 2 pi i, assoc symbols -> transported associator coefficients,
/// zeta symbols -> numeric MZVs.
hyperlog::cplx per_eval(const PeriodExpr& expr, const EvalBackend& backend);

/// single-valued period of de Rham symbols: lef -> -1, zeta^dr(n) -> zeta^sv(n),
/// length-one assoc symbols -> log|...|^2; other assoc symbols have no
/// numeric backend and throw.
hyperlog::cplx sv_eval(const PeriodExpr& expr, const EvalBackend& backend);

/// ring_traits instances so NCSeries/MultiSeries run over these rings
using MotivicSeries = ncalg::NCSeries<PeriodExpr>;
using TensorSeries = ncalg::NCSeries<TensorExpr>;

} // namespace periodlab::periods

namespace periodlab::ncalg {

template <>
struct ring_traits<periods::PeriodExpr> {
    // realization-tag note: sums of differently tagged exprs throw; the
    // zero/one here default to motivic and coerce on first addition
    static periods::PeriodExpr zero() { return periods::PeriodExpr(); }
    static periods::PeriodExpr one() {
        return periods::PeriodExpr::one(periods::Realization::motivic);
    }
    static bool is_zero(const periods::PeriodExpr& e) { return e.is_zero(); }
    static periods::PeriodExpr from_rational(const Rational& q) {
        return periods::PeriodExpr(periods::Realization::motivic, q);
    }
};

template <>
struct ring_traits<periods::TensorExpr> {
    static periods::TensorExpr zero() { return periods::TensorExpr(); }
    static periods::TensorExpr one() { return periods::TensorExpr::one(); }
    static bool is_zero(const periods::TensorExpr& e) { return e.is_zero(); }
    static periods::TensorExpr from_rational(const Rational& q) {
        return periods::TensorExpr::one().scaled(q);
    }
};

} // namespace periodlab::ncalg
