#pragma once

#include <map>
#include <string>
#include <vector>

#include "qks/rational.hpp"

namespace qks {

// Weakly decreasing positive parts; the empty vector is the empty partition.
using Partition = std::vector<int>;

inline int weight(const Partition& mu) {
    int d = 0;
    for (int p : mu) d += p;
    return d;
}

// Automorphism factor prod_i i^{m_i} m_i! over the part multiplicities.
inline Int z_mu(const Partition& mu) {
    Int z = 1;
    int run = 0, prev = 0;
    for (int p : mu) {
        run = (p == prev) ? run + 1 : 1;
        z *= Int(p) * run;
        prev = p;
    }
    return z;
}

// Sum of lambda_i (lambda_i - 2i + 1); twice the total content.
inline long long kappa(const Partition& mu) {
    long long k = 0;
    for (size_t i = 0; i < mu.size(); ++i) k += (long long)mu[i] * (mu[i] - 2 * (long long)(i + 1) + 1);
    return k;
}

inline Partition with_part(Partition mu, int part) {
    auto it = mu.begin();
    while (it != mu.end() && *it >= part) ++it;
    mu.insert(it, part);
    return mu;
}

inline Partition without_part(Partition mu, int part) {
    for (auto it = mu.begin(); it != mu.end(); ++it) {
        if (*it == part) {
            mu.erase(it);
            return mu;
        }
    }
    throw std::invalid_argument("without_part: part " + std::to_string(part) + " absent");
}

inline std::vector<Partition> partitions_of(int d) {
    std::vector<Partition> out;
    Partition cur;
    auto rec = [&](auto&& self, int rest, int max_part) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rest, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    if (d >= 0) rec(rec, d, d == 0 ? 1 : d);
    return out;
}

inline std::string partition_str(const Partition& mu) {
    std::string s = "(";
    for (size_t i = 0; i < mu.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(mu[i]);
    }
    return s + ")";
}

// Standard-tableau counts per shape of size d, by adding one box at a time.
inline std::map<Partition, Int> syt_counts(int d) {
    std::map<Partition, Int> cur{{Partition{}, 1}};
    for (int step = 0; step < d; ++step) {
        std::map<Partition, Int> next;
        for (auto& [mu, ways] : cur) {
            for (size_t i = 0; i <= mu.size(); ++i) {
                if (i > 0 && (i == mu.size() || mu[i] < mu[i - 1])) {
                    Partition nu = mu;
                    if (i == mu.size()) nu.push_back(1);
                    else ++nu[i];
                    next[nu] += ways;
                } else if (i == 0) {
                    Partition nu = mu;
                    if (nu.empty()) nu.push_back(1);
                    else ++nu[0];
                    next[nu] += ways;
                }
            }
        }
        cur = std::move(next);
    }
    return cur;
}

} // namespace qks
