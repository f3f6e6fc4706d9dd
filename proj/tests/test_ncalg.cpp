#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "periodlab/ncalg.hpp"
#include "test_support.hpp"

using namespace periodlab;
using namespace periodlab::ncalg;
using testsupport::Rng;
using RSeries = NCSeries<Rational>;
using RMulti = MultiSeries<Rational>;

namespace {
long binomial(int n, int k) {
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}
} // namespace

TEST_CASE("shuffle basics") {
    auto s = shuffle(Word{0}, Word{1});
    CHECK(s.size() == 2);
    CHECK(s[Word{0, 1}] == 1);
    CHECK(s[Word{1, 0}] == 1);

    // unit of shuffle
    Word w{0, 1, 0};
    auto su = shuffle(Word{}, w);
    CHECK(su.size() == 1);
    CHECK(su[w] == 1);

    // total multiplicity C(|u|+|v|, |u|)
    auto s2 = shuffle(Word{0, 1}, Word{0});
    long total = 0;
    for (auto& [ww, m] : s2) total += m;
    CHECK(total == 3);
}

TEST_CASE("shuffle commutative and associative up to combined length 6") {
    auto words = words_up_to(2, 4);
    auto as_series = [](const std::map<Word, long>& m) {
        std::map<Word, long> out = m;
        return out;
    };
    for (auto& u : words)
        for (auto& v : words) {
            if (u.size() + v.size() > 6 || u.empty() || v.empty()) continue;
            CHECK(as_series(shuffle(u, v)) == as_series(shuffle(v, u)));
        }
    // associativity on length-(1,1,2..) triples up to combined length 6
    auto shuffle_into = [](const std::map<Word, long>& m, const Word& w) {
        std::map<Word, long> out;
        for (auto& [u, cu] : m)
            for (auto& [x, cx] : shuffle(u, w)) out[x] += cu * cx;
        return out;
    };
    for (auto& u : words)
        for (auto& v : words)
            for (auto& w : words) {
                if (u.empty() || v.empty() || w.empty()) continue;
                if (u.size() + v.size() + w.size() > 6) continue;
                auto lhs = shuffle_into(shuffle(u, v), w);
                auto rhs = shuffle_into(shuffle(v, w), u);
                CHECK(lhs == rhs);
            }
    // binomial totals
    for (auto& u : words)
        for (auto& v : words) {
            if (u.size() + v.size() > 6) continue;
            long total = 0;
            for (auto& [ww, m] : shuffle(u, v)) total += m;
            CHECK(total == binomial(u.size() + v.size(), u.size()));
        }
}

TEST_CASE("concat_mul") {
    RSeries one = RSeries::unit(2, 4);
    RSeries e0 = RSeries::letter(2, 4, 0);
    RSeries e1 = RSeries::letter(2, 4, 1);

    RSeries b = one + e0 + concat_mul(e0, e1);
    CHECK(concat_mul(one, b) == b);

    CHECK(concat_mul(e0, e1).coeff(Word{0, 1}) == Rational(1));

    RSeries p = concat_mul(one + e0, one + e0);
    CHECK(p.coeff(Word{}) == Rational(1));
    CHECK(p.coeff(Word{0}) == Rational(2));
    CHECK(p.coeff(Word{0, 0}) == Rational(1));
    CHECK(p.coeff(Word{0, 1}) == Rational(0));
}

TEST_CASE("inverse") {
    RSeries one = RSeries::unit(2, 5);
    CHECK(nc_inverse(one) == one);

    RSeries e0 = RSeries::letter(2, 5, 0);
    RSeries inv = nc_inverse(one + e0);
    // geometric series 1 - e0 + e0e0 - ...
    Rational sign(1);
    for (int k = 0; k <= 5; ++k) {
        std::vector<Letter> ls(size_t(k), 0);
        CHECK(inv.coeff(Word(ls)) == sign);
        sign = -sign;
    }

    RSeries expe1 = nc_exp(RSeries::letter(2, 5, 1));
    RSeries expm = nc_exp(RSeries::letter(2, 5, 1).scaled(Rational(-1)));
    CHECK(nc_inverse(expe1) == expm);
    CHECK(concat_mul(expe1, nc_inverse(expe1)) == one);
}

TEST_CASE("exp and log") {
    RSeries zero(2, 4);
    CHECK(nc_exp(zero) == RSeries::unit(2, 4));

    RSeries e0 = RSeries::letter(2, 4, 0);
    CHECK(nc_log(nc_exp(e0)) == e0);

    RSeries s = nc_exp(e0 + RSeries::letter(2, 4, 1));
    CHECK(s.coeff(Word{0, 0}) == Rational(1, 2));
    CHECK(s.coeff(Word{0, 1}) == Rational(1, 2));
    CHECK(s.coeff(Word{1, 0}) == Rational(1, 2));
    CHECK(s.coeff(Word{1, 1}) == Rational(1, 2));

    Rng rng(7);
    for (int rep = 0; rep < 4; ++rep) {
        RSeries g = testsupport::random_group_like(rng, 2, 4);
        CHECK(nc_exp(nc_log(g)) == g);
    }

    CHECK_THROWS_AS(nc_exp(RSeries::unit(2, 4)), std::domain_error);
    CHECK_THROWS_AS(nc_log(RSeries(2, 4)), std::domain_error);
}

TEST_CASE("group-likeness") {
    CHECK(is_group_like(nc_exp(RSeries::letter(2, 4, 0)), 0.0));

    RSeries bad = RSeries::unit(2, 4);
    bad.set(Word{0, 1}, Rational(1)); // 1 + e0e1: A(e0)A(e1)=0 but A(e0e1)+A(e1e0)=1
    CHECK(!is_group_like(bad, 0.0));

    Rng rng(11);
    for (int rep = 0; rep < 4; ++rep)
        CHECK(is_group_like(testsupport::random_group_like(rng, 3, 4), 0.0));
}

TEST_CASE("abelianize") {
    // exp(e0) -> exp(s0)
    RSeries expe0 = nc_exp(RSeries::letter(2, 4, 0));
    RMulti ab = abelianize(expe0);
    for (int k = 0; k <= 4; ++k)
        CHECK(ab.coeff({k, 0}) == Rational::factorial_inv(k));

    RSeries s(2, 4);
    s.set(Word{}, Rational(1));
    s.set(Word{0, 1}, Rational(1));
    s.set(Word{1, 0}, Rational(1));
    RMulti m = abelianize(s);
    CHECK(m.coeff({0, 0}) == Rational(1));
    CHECK(m.coeff({1, 1}) == Rational(2));

    // group-like A: abelianize(A) = exp(sum A(e_k) s_k), termwise
    Rng rng(23);
    for (int rep = 0; rep < 4; ++rep) {
        RSeries g = testsupport::random_group_like(rng, 3, 4);
        RMulti lin(3, 4);
        for (int k = 0; k < 3; ++k) {
            RMulti::Expo e(3, 0);
            e[size_t(k)] = 1;
            lin.add_to(e, g.coeff(Word{k}));
        }
        CHECK(abelianize(g) == lin.exp());
    }
}

TEST_CASE("beta quotient") {
    // exp(e1), j=1: sum_k s1^{k-1}/k!
    RSeries expe1 = nc_exp(RSeries::letter(2, 5, 1));
    RMulti bq = beta_quotient(expe1, 1);
    for (int k = 1; k <= 5; ++k)
        CHECK(bq.coeff({0, k - 1}) == Rational::factorial_inv(k));
    CHECK(beta_quotient(expe1, 0).coeffs().empty());

    // product rule (AB)_j = A (B_j) + A_j B_empty, abelianized, exact.
    // Weight-W truncation makes the identity complete through degree W-1.
    auto truncate = [](const RMulti& m, int deg) {
        RMulti out(m.num_vars(), m.max_degree());
        for (auto& [e, c] : m.coeffs())
            if (RMulti::total_degree(e) <= deg) out.set(e, c);
        return out;
    };
    Rng rng(31);
    for (int rep = 0; rep < 5; ++rep) {
        RSeries a = testsupport::random_group_like(rng, 2, 4);
        RSeries b = testsupport::random_group_like(rng, 2, 4);
        for (int j = 0; j < 2; ++j) {
            RMulti lhs = beta_quotient(concat_mul(a, b), j);
            RMulti rhs = abelianize(a) * beta_quotient(b, j) +
                         beta_quotient(a, j).scaled(b.constant_term());
            CHECK(truncate(lhs, 3) == truncate(rhs, 3));
        }
    }

    // inversion rule: (F^{-1})_j * Fbar * F_empty = -F_j (denominator-cleared)
    Rng rng2(37);
    for (int rep = 0; rep < 5; ++rep) {
        RSeries f = testsupport::random_group_like(rng2, 2, 4);
        for (int j = 0; j < 2; ++j) {
            RMulti lhs = beta_quotient(nc_inverse(f), j) * abelianize(f);
            RMulti rhs = beta_quotient(f, j).scaled(Rational(-1));
            CHECK(truncate(lhs, 3) == truncate(rhs, 3));
        }
    }
}

TEST_CASE("ihara substitution") {
    Rng rng(41);
    RSeries f = testsupport::random_group_like(rng, 3, 4);
    std::vector<RSeries> gs = {RSeries::unit(3, 4), RSeries::unit(3, 4)};

    // identity action
    CHECK(ihara_substitute(f, Rational(1), gs, 1) == f);

    // scaling: coefficient of weight-l word picks lambda^l
    RSeries scaled = ihara_substitute(f, Rational(2), gs, 2);
    for (auto& [w, c] : f.coeffs()) {
        Rational lam(1);
        for (int k = 0; k < w.size(); ++k) lam *= Rational(2);
        CHECK(scaled.coeff(w) == c * lam);
    }

    // weight-2 hand oracle, n = 1: F = 1 + 2 e1, G = 1 + 3 e0
    // F(e0, G e1 G^{-1}) G = 1 + 3 e0 + 2 e1 + 6 e0e1
    RSeries f2(2, 2);
    f2.set(Word{}, Rational(1));
    f2.set(Word{1}, Rational(2));
    RSeries g2(2, 2);
    g2.set(Word{}, Rational(1));
    g2.set(Word{0}, Rational(3));
    RSeries r = ihara_substitute(f2, Rational(1), {g2}, 1);
    RSeries expect(2, 2);
    expect.set(Word{}, Rational(1));
    expect.set(Word{0}, Rational(3));
    expect.set(Word{1}, Rational(2));
    expect.set(Word{0, 1}, Rational(6));
    CHECK(r == expect);

    // non-unital G rejected
    RSeries gbad(2, 2);
    CHECK_THROWS_AS(ihara_substitute(f2, Rational(1), {gbad}, 1), std::domain_error);
}

TEST_CASE("multiseries laurent monomials") {
    RMulti m(2, 3);
    m.set({-1, 0}, Rational(1));
    m.set({0, 2}, Rational(3));
    RMulti shifted = m.shifted({1, 0});
    CHECK(shifted.coeff({0, 0}) == Rational(1));
    CHECK(shifted.coeff({1, 2}) == Rational(3));
    CHECK(RMulti::total_degree({-1, 0}) == -1);
    // truncation by total degree still applies
    RMulti big(2, 1);
    big.set({2, 0}, Rational(5));
    CHECK(big.coeffs().empty());
}
