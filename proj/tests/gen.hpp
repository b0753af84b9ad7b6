#pragma once

#include <cstdint>

#include "qks/scalar.hpp"

// Deterministic generators for property-style tests.
namespace testgen {

struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed ? seed : 1) {}
    uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    // uniform in [0, n)
    int below(int n) { return static_cast<int>(next() % static_cast<uint64_t>(n)); }
    // uniform in [lo, hi]
    int range(int lo, int hi) { return lo + below(hi - lo + 1); }
};

// Invertible scalar: rational unit times Q^h times (1-q^k)^{+-1} factors.
inline qks::Scalar gen_unit(Rng& rng) {
    using qks::Scalar;
    Scalar s = Scalar::from_rat(qks::Rat(rng.range(1, 5) * (rng.below(2) ? 1 : -1), rng.range(1, 4)));
    s = s * Scalar::q_half_pow(rng.range(-4, 4));
    for (int i = rng.below(3); i > 0; --i) {
        int k = rng.range(1, 3);
        s = rng.below(2) ? s * Scalar::q_int(k) : s * Scalar::inv_q_int(k);
    }
    return s;
}

// General scalar: unit times optional polynomial and binomial factors; may be zero.
inline qks::Scalar gen_scalar(Rng& rng) {
    using qks::Scalar;
    if (rng.below(12) == 0) return Scalar::zero();
    Scalar s = gen_unit(rng);
    if (rng.below(2)) {
        Scalar p = Scalar::one();
        for (int i = rng.range(1, 2); i > 0; --i)
            p = p + Scalar::from_int(rng.range(-3, 3)) * Scalar::q_half_pow(rng.range(0, 4)) *
                        Scalar::t_pow(rng.below(2));
        s = s * p;
    }
    for (int i = rng.below(2); i > 0; --i) {
        int j = rng.range(0, 3);
        s = rng.below(2) ? s * Scalar::one_minus_tq(j) : s * Scalar::t_minus_q(j);
    }
    return s;
}

} // namespace testgen
