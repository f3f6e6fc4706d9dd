#pragma once

#include <cstdint>

#include "periodlab/ncalg.hpp"

namespace testsupport {

// deterministic splitmix64; tests must not depend on global rng state
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    int below(int n) { return int(next() % std::uint64_t(n)); }
};

using periodlab::Rational;
using periodlab::ncalg::NCSeries;
using periodlab::ncalg::Word;

inline NCSeries<Rational> bracket(const NCSeries<Rational>& a, const NCSeries<Rational>& b) {
    return periodlab::ncalg::concat_mul(a, b) - periodlab::ncalg::concat_mul(b, a);
}

/// Random Lie element (nested brackets of letters with small rational
/// coefficients); exp of it is group-like in the truncated Hopf algebra.
inline NCSeries<Rational> random_lie(Rng& rng, int alphabet, int max_weight) {
    NCSeries<Rational> lie(alphabet, max_weight);
    int terms = 2 + rng.below(3);
    for (int t = 0; t < terms; ++t) {
        int depth = 1 + rng.below(max_weight);
        NCSeries<Rational> el = NCSeries<Rational>::letter(alphabet, max_weight, rng.below(alphabet));
        for (int d = 1; d < depth; ++d)
            el = bracket(el, NCSeries<Rational>::letter(alphabet, max_weight, rng.below(alphabet)));
        lie += el.scaled(Rational(rng.below(7) - 3, 1 + rng.below(3)));
    }
    return lie;
}

inline NCSeries<Rational> random_group_like(Rng& rng, int alphabet, int max_weight) {
    return periodlab::ncalg::nc_exp(random_lie(rng, alphabet, max_weight));
}

} // namespace testsupport
