#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qks/rational.hpp"

namespace qks {

// Sparse polynomial in Q (= q^{1/2}) and T over Rat.  Q-exponents may be
// negative in intermediate values; T-exponents are always >= 0.  Terms are
// kept sorted by (t, q) lexicographic key, nonzero coefficients only.
class QTPoly {
  public:
    // key = t * 2^32 + (q + 2^31); monotone in (t, q).
    using Key = int64_t;
    static constexpr int64_t kQOff = int64_t(1) << 31;
    static constexpr int64_t kTStride = int64_t(1) << 32;

    static Key key(int qdeg, int tdeg) { return tdeg * kTStride + (qdeg + kQOff); }
    static int key_q(Key k) { return int(k % kTStride - kQOff); }
    static int key_t(Key k) { return int(k / kTStride); }

    QTPoly() = default;

    static QTPoly constant(const Rat& c) { return monomial(c, 0, 0); }

    static QTPoly monomial(const Rat& c, int qdeg, int tdeg = 0) {
        QTPoly p;
        if (c != 0) p.terms_.emplace_back(key(qdeg, tdeg), c);
        return p;
    }

    // 1 - q^{k}, exponent in Q units (pass 2k for integer q-powers).
    static QTPoly one_minus_qpow(int qdeg) {
        QTPoly p = constant(1);
        p = p + monomial(-1, qdeg);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    const std::vector<std::pair<Key, Rat>>& terms() const { return terms_; }

    bool operator==(const QTPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const QTPoly& o) const { return !(*this == o); }

    int q_degree() const {
        int d = INT32_MIN;
        for (auto& [k, c] : terms_) d = std::max(d, key_q(k));
        return d;
    }
    int q_low() const {
        int d = INT32_MAX;
        for (auto& [k, c] : terms_) d = std::min(d, key_q(k));
        return d;
    }
    int t_degree() const {
        int d = 0;
        for (auto& [k, c] : terms_) d = std::max(d, key_t(k));
        return d;
    }

    QTPoly operator-() const {
        QTPoly r = *this;
        for (auto& [k, c] : r.terms_) c = -c;
        return r;
    }

    QTPoly operator+(const QTPoly& o) const {
        QTPoly r;
        r.terms_.reserve(terms_.size() + o.terms_.size());
        size_t i = 0, j = 0;
        while (i < terms_.size() || j < o.terms_.size()) {
            if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
                r.terms_.push_back(terms_[i++]);
            } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
                r.terms_.push_back(o.terms_[j++]);
            } else {
                Rat c = terms_[i].second + o.terms_[j].second;
                if (c != 0) r.terms_.emplace_back(terms_[i].first, std::move(c));
                ++i, ++j;
            }
        }
        return r;
    }

    QTPoly operator-(const QTPoly& o) const { return *this + (-o); }

    QTPoly operator*(const QTPoly& o) const {
        if (is_zero() || o.is_zero()) return {};
        std::map<Key, Rat> acc;
        for (auto& [ka, ca] : terms_)
            for (auto& [kb, cb] : o.terms_) {
                Key k = ka + kb - kQOff;
                auto [it, fresh] = acc.try_emplace(k, Rat(0));
                it->second += ca * cb;
                (void)fresh;
            }
        QTPoly r;
        r.terms_.reserve(acc.size());
        for (auto& [k, c] : acc)
            if (c != 0) r.terms_.emplace_back(k, std::move(c));
        return r;
    }

    QTPoly scaled(const Rat& c) const {
        if (c == 0) return {};
        QTPoly r = *this;
        for (auto& [k, v] : r.terms_) v *= c;
        return r;
    }

    QTPoly shifted(int qshift, int tshift = 0) const {
        QTPoly r = *this;
        for (auto& [k, v] : r.terms_) k += key(qshift, tshift) - key(0, 0);
        return r;
    }

    // Drop terms of Q-degree above qmax (series truncation).
    QTPoly q_truncated(int qmax) const {
        QTPoly r;
        for (auto& [k, c] : terms_)
            if (key_q(k) <= qmax) r.terms_.emplace_back(k, c);
        return r;
    }

    // Exact division; nullopt when the divisor does not divide.  Dividend and
    // divisor must both be Q-honest (q_low() >= 0); callers extract Q-content
    // first.
    std::optional<QTPoly> exact_div(const QTPoly& d) const {
        if (d.is_zero()) throw std::domain_error("QTPoly::exact_div: zero divisor");
        QTPoly rem = *this, quot;
        const auto& [dk, dc] = d.terms_.back();
        const int dq = key_q(dk), dt = key_t(dk);
        while (!rem.is_zero()) {
            const auto& [rk, rc] = rem.terms_.back();
            const int rq = key_q(rk), rt = key_t(rk);
            if (rt < dt || rq < dq) return std::nullopt;
            QTPoly m = monomial(rc / dc, rq - dq, rt - dt);
            quot = quot + m;
            rem = rem - m * d;
        }
        return quot;
    }

    // Substitute numeric values for q (via Q = qhalf) and T.
    Rat eval(const Rat& qhalf, const Rat& t) const {
        Rat r = 0;
        for (auto& [k, c] : terms_) r += c * rat_pow(qhalf, key_q(k)) * rat_pow(t, key_t(k));
        return r;
    }

  private:
    std::vector<std::pair<Key, Rat>> terms_;
};

} // namespace qks
