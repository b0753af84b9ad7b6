#pragma once

#include <cstdint>

#include "qks/ppoly.hpp"

namespace qks {

namespace detail {

inline std::optional<Rat> as_rational(const Scalar& s) {
    if (s.is_zero()) return Rat(0);
    auto p = s.to_polynomial();
    if (!p || p->terms().size() != 1) return std::nullopt;
    auto& [key, c] = *p->terms().begin();
    if (QTPoly::key_q(key) != 0 || QTPoly::key_t(key) != 0) return std::nullopt;
    return c;
}

} // namespace detail

// Complete homogeneous generator h_n = sum_{|mu|=n} p_mu / z_mu.
inline PPoly h_poly(int n) {
    if (n < 0) return {};
    PPoly h;
    for (const Partition& mu : partitions_of(n))
        h.add(mu, Scalar::from_rat(Rat(1) / Rat(z_mu(mu))));
    return h;
}

// Jacobi-Trudi determinant det(h_{lambda_i - i + j}).
inline PPoly schur_poly(const Partition& lambda) {
    const int l = static_cast<int>(lambda.size());
    if (l == 0) return PPoly::one();
    std::vector<std::vector<PPoly>> m(l, std::vector<PPoly>(l));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) m[i][j] = h_poly(lambda[i] - (i + 1) + (j + 1));
    // expand along rows, memoized over the set of unused columns
    std::map<std::uint32_t, PPoly> memo;
    auto det = [&](auto&& self, std::uint32_t mask) -> PPoly {
        if (mask == 0) return PPoly::one();
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        int row = l - __builtin_popcount(mask);
        PPoly d;
        int parity = 0;
        for (int col = 0; col < l; ++col) {
            if (!(mask & (1u << col))) continue;
            PPoly sub = self(self, mask & ~(1u << col));
            PPoly term = m[row][col] * sub;
            d = (parity % 2 == 0) ? d + term : d - term;
            ++parity;
        }
        memo.emplace(mask, d);
        return d;
    };
    return det(det, (1u << l) - 1);
}

// Exact eigenvalue of the cut-and-join operator on s_lambda, computed by
// applying the operator and reading the ratio; a non-proportional result is
// an internal inconsistency.
inline Scalar cut_join_eigenvalue(const Partition& lambda) {
    PPoly s = schur_poly(lambda);
    PPoly k = cut_join_apply(s);
    if (s.is_zero()) throw std::logic_error("cut_join_eigenvalue: empty Schur polynomial");
    auto& [mu0, c0] = *s.terms().begin();
    auto inv = c0.inverse();
    if (!inv) throw std::logic_error("cut_join_eigenvalue: leading coefficient not invertible");
    Scalar ratio = k.coeff(mu0) * *inv;
    if (k != s.scaled(ratio))
        throw std::logic_error("cut_join_eigenvalue: " + partition_str(lambda) +
                               " is not an eigenvector");
    return ratio;
}

// Truncation of e^{p_1}.
inline PPoly exp_p1(int d_max) {
    PPoly f;
    Rat inv_fact = 1;
    for (int d = 0; d <= d_max; ++d) {
        if (d > 0) inv_fact /= d;
        f.add(Partition(d, 1), Scalar::from_rat(inv_fact));
    }
    return f;
}

// Diagonal evolution of e^{p_1}: each Schur component s_lambda of p_1^d/d!
// picks up Q^{2 c_lambda}, with c_lambda the verified cut-and-join eigenvalue.
inline PPoly hurwitz_tau(int d_max) {
    PPoly tau;
    for (int d = 0; d <= d_max; ++d) {
        Int dfact = factorial(d);
        for (auto& [lambda, f] : syt_counts(d)) {
            auto c = detail::as_rational(cut_join_eigenvalue(lambda));
            if (!c) throw std::logic_error("hurwitz_tau: non-rational eigenvalue");
            Rat twice = *c * 2;
            if (denominator(twice) != 1)
                throw std::logic_error("hurwitz_tau: eigenvalue not a half-integer");
            Scalar w = Scalar::q_half_pow(static_cast<int>(numerator(twice))) *
                       Scalar::from_rat(Rat(f) / Rat(dfact));
            tau = tau + schur_poly(lambda).scaled(w);
        }
    }
    return tau;
}

// Coefficients as power series in the deformation parameter: Q^h becomes
// sum_b (h/2)^b lambda^b / b!.  Index b runs 0..b_max.
inline std::map<Partition, std::vector<Rat>> lambda_expand(const PPoly& f, int b_max) {
    std::map<Partition, std::vector<Rat>> out;
    for (auto& [mu, c] : f.terms()) {
        if (!c.denominator_free())
            throw std::invalid_argument("lambda_expand: coefficient is not polynomial in Q");
        std::vector<Rat>& vec = out.try_emplace(mu, b_max + 1, Rat(0)).first->second;
        const QTPoly num = c.expanded_num();
        for (auto& [key, r] : num.terms()) {
            if (QTPoly::key_t(key) != 0)
                throw std::invalid_argument("lambda_expand: coefficient depends on T");
            Rat half_h = Rat(c.q_valuation() + QTPoly::key_q(key), 2);
            Rat pw = 1;
            for (int b = 0; b <= b_max; ++b) {
                vec[b] += r * pw;
                pw = pw * half_h / (b + 1);
            }
        }
    }
    return out;
}

} // namespace qks
