#include "periodlab/periods.hpp"

#include <algorithm>
#include <sstream>

#include "periodlab/gamma.hpp"
#include "periodlab/hyperlog.hpp"

namespace periodlab::periods {

using hyperlog::cplx;

int Symbol::weight() const {
    if (kind == Kind::assoc) return 2 * word.size();
    int s = 0;
    for (int a : args) s += a;
    return 2 * s;
}

bool operator<(const Symbol& a, const Symbol& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.kind == Symbol::Kind::assoc) {
        if (a.index != b.index) return a.index < b.index;
        return a.word < b.word;
    }
    return a.args < b.args;
}
bool operator==(const Symbol& a, const Symbol& b) {
    return a.kind == b.kind && a.index == b.index && a.word == b.word && a.args == b.args;
}

std::string Symbol::str(Realization r) const {
    std::string tag = (r == Realization::motivic) ? "m" : "dr";
    if (kind == Kind::assoc) {
        std::string w;
        for (int i = 0; i < word.size(); ++i) w += std::to_string(int(word[i]));
        return "Z" + tag + "[" + std::to_string(index) + ";" + w + "]";
    }
    std::string a;
    for (size_t i = 0; i < args.size(); ++i) {
        if (i) a += ",";
        a += std::to_string(args[i]);
    }
    return "zeta_" + tag + "(" + a + ")";
}

Symbol assoc_symbol(int i, const Word& w) {
    Symbol s;
    s.kind = Symbol::Kind::assoc;
    s.index = i;
    s.word = w;
    return s;
}
Symbol zeta_symbol(int n) { return zeta_symbol(std::vector<int>{n}); }
Symbol zeta_symbol(std::vector<int> args) {
    Symbol s;
    s.kind = Symbol::Kind::zeta;
    s.args = std::move(args);
    return s;
}

int Monomial::weight() const {
    int w = 2 * lef_power;
    for (auto& f : factors) w += f.weight();
    return w;
}
bool operator<(const Monomial& a, const Monomial& b) {
    if (a.lef_power != b.lef_power) return a.lef_power < b.lef_power;
    return a.factors < b.factors;
}
bool operator==(const Monomial& a, const Monomial& b) {
    return a.lef_power == b.lef_power && a.factors == b.factors;
}
Monomial Monomial::operator*(const Monomial& o) const {
    Monomial m;
    m.lef_power = lef_power + o.lef_power;
    m.factors = factors;
    m.factors.insert(m.factors.end(), o.factors.begin(), o.factors.end());
    std::sort(m.factors.begin(), m.factors.end());
    return m;
}
std::string Monomial::str(Realization r) const {
    std::string s;
    if (lef_power != 0) {
        s = "lef";
        if (lef_power != 1) s += "^" + std::to_string(lef_power);
    }
    for (auto& f : factors) {
        if (!s.empty()) s += "*";
        s += f.str(r);
    }
    return s.empty() ? "1" : s;
}

namespace {
// de Rham single even zetas vanish; empty assoc words are 1; pairs of
// zeta(2) factors rewrite to (5/2) zeta(4) (the unique relation forced by
// the shuffle algebra at weight 4). Returns the rational multiplier, zero
// when the monomial dies.
Rational normalize_monomial(Monomial& m, Realization tag) {
    Rational mult(1);
    std::vector<Symbol> keep;
    int zeta2_count = 0;
    for (auto& f : m.factors) {
        if (f.kind == Symbol::Kind::assoc && f.word.empty()) continue;
        if (tag == Realization::de_rham && f.kind == Symbol::Kind::zeta && f.args.size() == 1 &&
            f.args[0] % 2 == 0)
            return Rational(0); // zeta^dr(even) = 0
        if (f.kind == Symbol::Kind::zeta && f.args.size() == 1 && f.args[0] == 2) {
            ++zeta2_count;
            continue;
        }
        keep.push_back(f);
    }
    while (zeta2_count >= 2) {
        zeta2_count -= 2;
        keep.push_back(zeta_symbol(4));
        mult *= Rational(5, 2);
    }
    if (zeta2_count == 1) keep.push_back(zeta_symbol(2));
    std::sort(keep.begin(), keep.end());
    m.factors = std::move(keep);
    return mult;
}
} // namespace

PeriodExpr PeriodExpr::lef(Realization tag, int power) {
    PeriodExpr e(tag);
    Monomial m;
    m.lef_power = power;
    e.terms_[m] = Rational(1);
    return e;
}

PeriodExpr PeriodExpr::generator(Realization tag, const Symbol& s, const Rational& c) {
    PeriodExpr e(tag);
    Monomial m;
    m.factors.push_back(s);
    Rational mult = normalize_monomial(m, tag);
    if (!mult.is_zero() && !c.is_zero()) e.terms_[m] = c * mult;
    return e;
}

void PeriodExpr::add_term(const Monomial& m0, const Rational& c) {
    if (c.is_zero()) return;
    Monomial m = m0;
    Rational mult = normalize_monomial(m, tag_);
    if (mult.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c * mult);
    } else {
        it->second += c * mult;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::optional<int> PeriodExpr::weight() const {
    std::optional<int> w;
    for (auto& [m, c] : terms_) {
        (void)c;
        int mw = m.weight();
        if (!w)
            w = mw;
        else if (*w != mw)
            return std::nullopt;
    }
    return w;
}

// pure rational multiples of 1 are realization-neutral
static bool rational_like(const PeriodExpr& e) {
    for (auto& [m, c] : e.terms()) {
        (void)c;
        if (!(m == Monomial{})) return false;
    }
    return true;
}
namespace {
Realization join_tags(const PeriodExpr& a, const PeriodExpr& b) {
    if (rational_like(a)) return b.tag();
    if (rational_like(b)) return a.tag();
    if (a.tag() != b.tag()) throw std::invalid_argument("PeriodExpr: mixed realizations");
    return a.tag();
}
} // namespace

PeriodExpr PeriodExpr::operator+(const PeriodExpr& o) const {
    PeriodExpr out(join_tags(*this, o));
    for (auto& [m, c] : terms_) out.add_term(m, c);
    for (auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}
PeriodExpr PeriodExpr::operator-(const PeriodExpr& o) const { return *this + (-o); }
PeriodExpr PeriodExpr::operator-() const {
    PeriodExpr out(tag_);
    for (auto& [m, c] : terms_) out.terms_[m] = -c;
    return out;
}
PeriodExpr PeriodExpr::operator*(const PeriodExpr& o) const {
    PeriodExpr out(join_tags(*this, o));
    for (auto& [ma, ca] : terms_)
        for (auto& [mb, cb] : o.terms_) out.add_term(ma * mb, ca * cb);
    return out;
}
PeriodExpr PeriodExpr::scaled(const Rational& c) const {
    PeriodExpr out(tag_);
    if (c.is_zero()) return out;
    for (auto& [m, v] : terms_) out.terms_[m] = v * c;
    return out;
}
PeriodExpr PeriodExpr::lef_shifted(int dp) const {
    PeriodExpr out(tag_);
    for (auto& [m, v] : terms_) {
        Monomial s = m;
        s.lef_power += dp;
        out.terms_[s] = v;
    }
    return out;
}

std::string PeriodExpr::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (c.is_one())
            os << m.str(tag_);
        else
            os << c.str() << "*" << m.str(tag_);
    }
    return os.str();
}

// division only by rational multiples of 1 (enough for series units)
PeriodExpr operator/(const PeriodExpr& a, const PeriodExpr& b) {
    if (b.terms().size() != 1 || !(b.terms().begin()->first == Monomial{}))
        throw std::domain_error("PeriodExpr: division only by rational units");
    Rational c = b.terms().begin()->second;
    return a.scaled(Rational(1) / c);
}

PeriodExpr de_rham_projection(const PeriodExpr& motivic) {
    if (motivic.tag() != Realization::motivic)
        throw std::invalid_argument("de_rham_projection: motivic input required");
    PeriodExpr out(Realization::de_rham);
    for (auto& [m, c] : motivic.terms()) {
        if (m.lef_power < 0) throw std::domain_error("de_rham_projection: non-effective input");
        if (m.lef_power > 0) continue; // lef -> 0
        out.add_term(m, c);
    }
    return out;
}

TensorExpr TensorExpr::tensor(const PeriodExpr& left, const PeriodExpr& right) {
    if (!rational_like(left) && left.tag() != Realization::motivic)
        throw std::invalid_argument("TensorExpr: left factor must be motivic");
    if (!rational_like(right) && right.tag() != Realization::de_rham)
        throw std::invalid_argument("TensorExpr: right factor must be de Rham");
    TensorExpr out;
    for (auto& [ml, cl] : left.terms())
        for (auto& [mr, cr] : right.terms()) out.add_term(ml, mr, cl * cr);
    return out;
}

void TensorExpr::add_term(const Monomial& l, const Monomial& r, const Rational& c) {
    if (c.is_zero()) return;
    Monomial ml = l, mr = r;
    Rational mult = normalize_monomial(ml, Realization::motivic);
    if (mult.is_zero()) return;
    mult *= normalize_monomial(mr, Realization::de_rham);
    if (mult.is_zero()) return;
    auto key = std::make_pair(ml, mr);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c * mult);
    } else {
        it->second += c * mult;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TensorExpr TensorExpr::operator+(const TensorExpr& o) const {
    TensorExpr out = *this;
    for (auto& [k, c] : o.terms_) out.add_term(k.first, k.second, c);
    return out;
}
TensorExpr TensorExpr::operator-(const TensorExpr& o) const { return *this + (-o); }
TensorExpr TensorExpr::operator-() const {
    TensorExpr out;
    for (auto& [k, c] : terms_) out.terms_[k] = -c;
    return out;
}
TensorExpr TensorExpr::operator*(const TensorExpr& o) const {
    TensorExpr out;
    for (auto& [ka, ca] : terms_)
        for (auto& [kb, cb] : o.terms_)
            out.add_term(ka.first * kb.first, ka.second * kb.second, ca * cb);
    return out;
}
TensorExpr TensorExpr::scaled(const Rational& c) const {
    TensorExpr out;
    if (c.is_zero()) return out;
    for (auto& [k, v] : terms_) out.terms_[k] = v * c;
    return out;
}
TensorExpr TensorExpr::lef_shifted_right(int dp) const {
    TensorExpr out;
    for (auto& [k, v] : terms_) {
        Monomial r = k.second;
        r.lef_power += dp;
        out.terms_[{k.first, r}] = v;
    }
    return out;
}

std::string TensorExpr::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (!c.is_one()) os << c.str() << "*";
        os << "(" << k.first.str(Realization::motivic) << " (x) " << k.second.str(Realization::de_rham)
           << ")";
    }
    return os.str();
}

PeriodExpr TensorExpr::counit_right() const {
    PeriodExpr out(Realization::motivic);
    for (auto& [k, c] : terms_) {
        if (!k.second.factors.empty()) continue; // symbols -> 0
        out.add_term(k.first, c);                // lef^p -> 1
    }
    return out;
}

TensorExpr operator/(const TensorExpr& a, const TensorExpr& b) {
    if (b.terms().size() != 1) throw std::domain_error("TensorExpr: division only by rational units");
    auto& [k, c] = *b.terms().begin();
    if (!(k.first == Monomial{}) || !(k.second == Monomial{}))
        throw std::domain_error("TensorExpr: division only by rational units");
    return a.scaled(Rational(1) / c);
}

TensorExpr coact_zeta(int n) {
    if (n < 2) throw std::invalid_argument("coact_zeta: need n >= 2");
    PeriodExpr zm = PeriodExpr::generator(Realization::motivic, zeta_symbol(n));
    PeriodExpr zdr = PeriodExpr::generator(Realization::de_rham, zeta_symbol(n));
    TensorExpr out = TensorExpr::tensor(zm, PeriodExpr::lef(Realization::de_rham, n));
    out = out + TensorExpr::tensor(PeriodExpr::one(Realization::motivic), zdr); // zero if n even
    return out;
}

ncalg::NCSeries<PeriodExpr> symbolic_associator(Realization tag, int alphabet_size, int i,
                                                int max_weight) {
    ncalg::NCSeries<PeriodExpr> z(alphabet_size, max_weight);
    z.set(Word{}, PeriodExpr::one(tag));
    for (int len = 1; len <= max_weight; ++len)
        for (auto& w : ncalg::words_of_length(alphabet_size, len))
            z.set(w, PeriodExpr::generator(tag, assoc_symbol(i, w)));
    return z;
}

ncalg::NCSeries<PeriodExpr> drinfeld_symbolic(Realization tag, int max_weight) {
    if (max_weight > 4) throw std::invalid_argument("drinfeld_symbolic: weight <= 4 table");
    auto zeta = [&](int n, const Rational& c) {
        return PeriodExpr::generator(tag, zeta_symbol(n), c);
    };
    std::map<Word, PeriodExpr> val;
    val[Word{}] = PeriodExpr::one(tag);
    val[Word{0}] = PeriodExpr(tag);
    val[Word{1}] = PeriodExpr(tag);
    // convergent words (first letter e1, last letter e0); classical values in
    // the single-zeta basis, confirmed numerically by the transport tests
    val[Word{1, 0}] = zeta(2, Rational(-1));
    val[Word{1, 0, 0}] = zeta(3, Rational(-1));
    val[Word{1, 1, 0}] = zeta(3, Rational(1));
    val[Word{1, 0, 0, 0}] = zeta(4, Rational(-1));
    val[Word{1, 1, 0, 0}] = zeta(4, Rational(1, 4));
    val[Word{1, 0, 1, 0}] = zeta(4, Rational(3, 4));
    val[Word{1, 1, 1, 0}] = zeta(4, Rational(-1));

    // remaining words from the shuffle relations Z(u)Z(v) = sum_{w in u sh v} Z(w)
    for (int wgt = 2; wgt <= max_weight; ++wgt) {
        auto words = ncalg::words_of_length(2, wgt);
        std::vector<Word> unknown;
        for (auto& w : words)
            if (!val.count(w)) unknown.push_back(w);
        if (unknown.empty()) continue;
        std::map<Word, int> col;
        for (size_t c = 0; c < unknown.size(); ++c) col[unknown[c]] = int(c);

        std::vector<std::vector<Rational>> rows;
        std::vector<PeriodExpr> rhs;
        for (int lu = 1; lu < wgt; ++lu) {
            for (auto& u : ncalg::words_of_length(2, lu))
                for (auto& v : ncalg::words_of_length(2, wgt - lu)) {
                    std::vector<Rational> row(unknown.size(), Rational(0));
                    PeriodExpr r = val.at(u) * val.at(v);
                    bool has_unknown = false;
                    for (auto& [w, mult] : ncalg::shuffle(u, v)) {
                        if (auto it = col.find(w); it != col.end()) {
                            row[size_t(it->second)] += Rational(mult);
                            has_unknown = true;
                        } else {
                            r = r - val.at(w).scaled(Rational(mult));
                        }
                    }
                    if (has_unknown) {
                        rows.push_back(std::move(row));
                        rhs.push_back(std::move(r));
                    }
                }
        }
        // Gaussian elimination with rational pivots, PeriodExpr right-hand sides
        size_t nrows = rows.size(), ncols = unknown.size();
        size_t rank = 0;
        for (size_t c = 0; c < ncols && rank < nrows; ++c) {
            size_t piv = rank;
            while (piv < nrows && rows[piv][c].is_zero()) ++piv;
            if (piv == nrows) throw std::runtime_error("drinfeld_symbolic: underdetermined system");
            std::swap(rows[piv], rows[rank]);
            std::swap(rhs[piv], rhs[rank]);
            Rational p = rows[rank][c];
            for (size_t cc = 0; cc < ncols; ++cc) rows[rank][cc] /= p;
            rhs[rank] = rhs[rank].scaled(Rational(1) / p);
            for (size_t r = 0; r < nrows; ++r) {
                if (r == rank || rows[r][c].is_zero()) continue;
                Rational f = rows[r][c];
                for (size_t cc = 0; cc < ncols; ++cc) rows[r][cc] -= f * rows[rank][cc];
                rhs[r] = rhs[r] - rhs[rank].scaled(f);
            }
            ++rank;
        }
        if (rank < ncols) throw std::runtime_error("drinfeld_symbolic: underdetermined system");
        // the system is overdetermined; leftover rows must be consistent,
        // which cross-checks the convergent-word table against the shuffle
        for (size_t r = rank; r < nrows; ++r)
            if (!rhs[r].is_zero())
                throw std::runtime_error("drinfeld_symbolic: inconsistent shuffle relations");
        for (size_t c = 0; c < ncols; ++c) {
            // after elimination row c has unit pivot in column c
            val[unknown[c]] = rhs[c];
        }
    }

    ncalg::NCSeries<PeriodExpr> z(2, max_weight);
    for (auto& [w, e] : val)
        if (w.size() <= max_weight) z.set(w, e);
    return z;
}

namespace {
cplx eval_symbol_per(const Symbol& s, const EvalBackend& backend,
                     std::map<std::pair<int, int>, hyperlog::CSeries>& cache) {
    if (s.kind == Symbol::Kind::zeta) {
        if (s.args.size() == 1) return cplx(num::zeta(s.args[0]));
        throw std::domain_error("per_eval: no numeric backend for multi-index zeta symbol");
    }
    if (!backend.cfg) throw std::domain_error("per_eval: assoc symbol without configuration backend");
    int w = std::max(s.word.size(), backend.assoc_weight);
    auto key = std::make_pair(s.index, w);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, hyperlog::associator(*backend.cfg, s.index, w)).first;
    return it->second.coeff(s.word);
}
} // namespace

cplx per_eval(const PeriodExpr& expr, const EvalBackend& backend) {
    if (!expr.is_zero() && expr.tag() != Realization::motivic)
        throw std::invalid_argument("per_eval: motivic input required");
    constexpr double kTwoPi = 6.28318530717958647692;
    std::map<std::pair<int, int>, hyperlog::CSeries> cache;
    cplx total(0.0);
    for (auto& [m, c] : expr.terms()) {
        cplx v(c.to_double());
        v *= std::pow(cplx(0.0, kTwoPi), m.lef_power); // per(lef) = 2 pi i
        for (auto& f : m.factors) v *= eval_symbol_per(f, backend, cache);
        total += v;
    }
    return total;
}

cplx sv_eval(const PeriodExpr& expr, const EvalBackend& backend) {
    if (!expr.is_zero() && expr.tag() != Realization::de_rham)
        throw std::invalid_argument("sv_eval: de Rham input required");
    cplx total(0.0);
    for (auto& [m, c] : expr.terms()) {
        cplx v(c.to_double());
        if (m.lef_power % 2 != 0) v = -v; // sv(lef) = -1
        for (auto& f : m.factors) {
            if (f.kind == Symbol::Kind::zeta) {
                if (f.args.size() == 1)
                    v *= num::sv_zeta(f.args[0]);
                else
                    throw std::domain_error("sv_eval: no numeric backend for multi-index zeta symbol");
            } else {
                if (f.word.size() != 1)
                    throw std::domain_error(
                        "sv_eval: no numeric backend for assoc symbols of length > 1");
                if (!backend.cfg)
                    throw std::domain_error("sv_eval: assoc symbol without configuration backend");
                int k = int(f.word[0]);
                const auto& pts = backend.cfg->points;
                cplx si = pts[size_t(f.index)];
                if (k == f.index)
                    v *= 0.0;
                else if (k == 0)
                    v *= std::log(std::norm(si));
                else
                    v *= std::log(std::norm(1.0 - si / pts[size_t(k)]));
            }
        }
        total += v;
    }
    return total;
}

} // namespace periodlab::periods
