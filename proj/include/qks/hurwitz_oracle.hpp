#pragma once

#include "qks/boson.hpp"
#include "qks/kac_schwarz.hpp"

namespace qks {

using Perm = std::vector<int>; // p[i] = image of i, on {0..d-1}

inline Perm perm_compose(const Perm& p, const Perm& q) { // p after q
    Perm r(q.size());
    for (size_t i = 0; i < q.size(); ++i) r[i] = p[q[i]];
    return r;
}

inline Perm perm_inverse(const Perm& p) {
    Perm r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
    return r;
}

// Canonical representative of the cycle type: consecutive blocks of letters.
inline Perm cycle_type_rep(const Partition& mu) {
    Perm p;
    for (int part : mu) {
        int base = static_cast<int>(p.size());
        for (int i = 1; i < part; ++i) p.push_back(base + i);
        p.push_back(base);
    }
    return p;
}

namespace detail {

inline std::vector<Perm> transpositions(int d) {
    std::vector<Perm> ts;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            Perm t(d);
            for (int k = 0; k < d; ++k) t[k] = k;
            std::swap(t[i], t[j]);
            ts.push_back(std::move(t));
        }
    return ts;
}

// Distribution of ordered k-fold transposition products.
inline std::map<Perm, long long> product_counts(const std::vector<Perm>& ts, int d, int k) {
    std::map<Perm, long long> cnt;
    Perm id(d);
    for (int i = 0; i < d; ++i) id[i] = i;
    std::function<void(int, const Perm&)> dfs = [&](int depth, const Perm& cur) {
        if (depth == k) {
            ++cnt[cur];
            return;
        }
        for (const Perm& t : ts) dfs(depth + 1, perm_compose(t, cur));
    };
    dfs(0, id);
    return cnt;
}

} // namespace detail

// Number of ordered b-tuples of transpositions in S_d whose product is the
// given target permutation.  Meet-in-the-middle on the tuple for b >= 6.
inline long long count_factorizations(const Partition& mu, int b, const Perm& target) {
    const int d = weight(mu);
    if (d < 1 || d > 6 || b < 0 || b > 8)
        throw std::invalid_argument("count_factorizations: supported range is 1 <= |mu| <= 6, 0 <= b <= 8");
    auto ts = detail::transpositions(d);
    if (b < 6) {
        long long n = 0;
        std::function<void(int, const Perm&)> dfs = [&](int depth, const Perm& cur) {
            if (depth == b) {
                n += cur == target;
                return;
            }
            for (const Perm& t : ts) dfs(depth + 1, perm_compose(t, cur));
        };
        Perm id(d);
        for (int i = 0; i < d; ++i) id[i] = i;
        dfs(0, id);
        return n;
    }
    auto lo = detail::product_counts(ts, d, b / 2);
    auto hi = detail::product_counts(ts, d, b - b / 2);
    long long n = 0;
    for (auto& [a, ca] : lo) {
        auto it = hi.find(perm_compose(target, perm_inverse(a)));
        if (it != hi.end()) n += ca * it->second;
    }
    return n;
}

inline long long count_factorizations(const Partition& mu, int b) {
    return count_factorizations(mu, b, cycle_type_rep(mu));
}

struct OracleRow {
    Partition mu;
    int b = 0;
    long long count = 0;
    Rat normalized;  // count / (b! z_mu)
    Rat tau_coeff;   // [p_mu lambda^b] of the expanded tau
    bool match = false;
};

inline std::vector<OracleRow> oracle_table(int d_max, int b_max) {
    auto expand = lambda_expand(hurwitz_tau(d_max), b_max);
    std::vector<OracleRow> rows;
    for (int d = 1; d <= d_max; ++d)
        for (const Partition& mu : partitions_of(d)) {
            auto it = expand.find(mu);
            for (int b = 0; b <= b_max; ++b) {
                OracleRow row;
                row.mu = mu;
                row.b = b;
                row.count = count_factorizations(mu, b);
                row.normalized = Rat(row.count) / (Rat(factorial(b)) * z_mu(mu));
                row.tau_coeff = it == expand.end() ? Rat(0) : it->second[b];
                row.match = row.normalized == row.tau_coeff;
                rows.push_back(std::move(row));
            }
        }
    return rows;
}

// Transposition-count coefficients of the evolved tau against the group
// enumeration.  The count/(b! z_mu) normalization is first confirmed against
// the closed-form grade <= 2 block, and the sweep also enforces the parity
// constraint b = |mu| - len(mu) (mod 2) on the raw counts.
inline CheckReport check_tau_vs_oracle(int d_max, int b_max) {
    CheckReport rep{"tau_vs_oracle", "", {{"d_max", d_max}, {"b_max", b_max}}, false, {}};

    // Grade <= 2: tau = 1 + p_1 e^{lambda = 0 part...}; explicitly, the
    // p_2 strand is sinh(lambda)/2 and the p_1^2 strand is cosh(lambda)/2.
    auto low = lambda_expand(hurwitz_tau(2), b_max);
    for (int b = 0; b <= b_max; ++b) {
        Rat even = b % 2 == 0 ? Rat(1) / (2 * factorial(b)) : Rat(0);
        Rat odd = b % 2 == 1 ? Rat(1) / (2 * factorial(b)) : Rat(0);
        Rat single = b == 0 ? Rat(1) : Rat(0);
        std::map<Partition, Rat> want = {{{}, b == 0 ? Rat(1) : Rat(0)},
                                         {{1}, single},
                                         {{2}, odd},
                                         {{1, 1}, even}};
        for (auto& [mu, w] : want) {
            auto it = low.find(mu);
            Rat got = it == low.end() ? Rat(0) : it->second[b];
            if (got != w) {
                rep.params["contract_b_fail"] = b;
                rep.residual.emplace_back(b, Scalar::from_rat(got - w));
            }
        }
    }
    if (!rep.residual.empty()) {
        rep.finalize();
        return rep;
    }

    for (const OracleRow& row : oracle_table(d_max, b_max)) {
        bool parity_ok = (row.b - (weight(row.mu) - static_cast<int>(row.mu.size()))) % 2 == 0;
        if (row.match && (parity_ok || row.count == 0)) continue;
        rep.params["d_fail"] = weight(row.mu);
        rep.params["b_fail"] = row.b;
        if (rep.residual.size() < 8)
            rep.residual.emplace_back(row.b, Scalar::from_rat(row.tau_coeff - row.normalized));
    }
    rep.finalize();
    return rep;
}

} // namespace qks
