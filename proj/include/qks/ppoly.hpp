#pragma once

#include "qks/partition.hpp"
#include "qks/scalar.hpp"

namespace qks {

// Polynomial in the power-sum variables p_1, p_2, ... with Scalar
// coefficients; monomials are keyed by the partition of their indices.
class PPoly {
  public:
    PPoly() = default;

    static PPoly one() { return monomial({}, Scalar::one()); }

    static PPoly monomial(Partition mu, const Scalar& c) {
        PPoly f;
        if (!c.is_zero()) f.t_.emplace(std::move(mu), c);
        return f;
    }

    const std::map<Partition, Scalar>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    const Scalar& coeff(const Partition& mu) const {
        static const Scalar kZero = Scalar::zero();
        auto it = t_.find(mu);
        return it == t_.end() ? kZero : it->second;
    }

    void add(const Partition& mu, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = t_.try_emplace(mu, c);
        if (fresh) return;
        it->second = it->second + c;
        if (it->second.is_zero()) t_.erase(it);
    }

    PPoly operator+(const PPoly& b) const {
        PPoly r = *this;
        for (auto& [mu, c] : b.t_) r.add(mu, c);
        return r;
    }

    PPoly operator-() const {
        PPoly r = *this;
        for (auto& [mu, c] : r.t_) c = -c;
        return r;
    }

    PPoly operator-(const PPoly& b) const { return *this + (-b); }

    PPoly scaled(const Scalar& s) const {
        if (s.is_zero()) return {};
        PPoly r = *this;
        for (auto& [mu, c] : r.t_) c = c * s;
        return r;
    }

    PPoly operator*(const PPoly& b) const {
        PPoly r;
        for (auto& [mu, c] : t_) {
            for (auto& [nu, d] : b.t_) {
                Partition prod = mu;
                for (int p : nu) prod = with_part(std::move(prod), p);
                r.add(prod, c * d);
            }
        }
        return r;
    }

    bool operator==(const PPoly& b) const { return (*this - b).is_zero(); }
    bool operator!=(const PPoly& b) const { return !(*this == b); }

    int max_grade() const {
        int g = 0;
        for (auto& [mu, c] : t_) g = std::max(g, weight(mu));
        return g;
    }

    PPoly grade_truncated(int d_max) const {
        PPoly r;
        for (auto& [mu, c] : t_)
            if (weight(mu) <= d_max) r.t_.emplace(mu, c);
        return r;
    }

    PPoly grade_part(int d) const {
        PPoly r;
        for (auto& [mu, c] : t_)
            if (weight(mu) == d) r.t_.emplace(mu, c);
        return r;
    }

    std::string to_string() const {
        if (t_.empty()) return "0";
        std::string s;
        for (auto& [mu, c] : t_) {
            if (!s.empty()) s += " + ";
            s += "(" + c.to_string() + ")";
            if (!mu.empty()) s += "*p" + partition_str(mu);
        }
        return s;
    }

  private:
    std::map<Partition, Scalar> t_;
};

// alpha_m: m d/dp_m for m > 0, multiplication by p_{-m} for m < 0.
inline PPoly alpha_apply(int m, const PPoly& f) {
    if (m == 0) throw std::invalid_argument("alpha_apply: index must be nonzero");
    PPoly r;
    for (auto& [mu, c] : f.terms()) {
        if (m < 0) {
            r.add(with_part(mu, -m), c);
            continue;
        }
        int mult = 0;
        for (int p : mu) mult += p == m;
        if (mult) r.add(without_part(mu, m), c * Scalar::from_int((long long)m * mult));
    }
    return r;
}

// Cut-and-join: 1/2 sum_{m,n>=1} ((m+n) p_m p_n d/dp_{m+n} + mn p_{m+n} d2/dp_m dp_n).
inline PPoly cut_join_apply(const PPoly& f) {
    PPoly r;
    for (auto& [mu, c] : f.terms()) {
        std::map<int, int> mult;
        for (int p : mu) ++mult[p];
        for (auto& [s, k] : mult) { // split one part s into m + (s - m)
            Partition base = without_part(mu, s);
            for (int m = 1; 2 * m <= s; ++m) {
                Rat w = Rat(s) * k;
                if (2 * m == s) w /= 2;
                r.add(with_part(with_part(base, m), s - m), c * Scalar::from_rat(w));
            }
        }
        for (auto it = mult.begin(); it != mult.end(); ++it) { // fuse two parts
            int m = it->first, km = it->second;
            if (km >= 2) {
                Partition nu = with_part(without_part(without_part(mu, m), m), 2 * m);
                r.add(nu, c * Scalar::from_rat(Rat((long long)m * m) * km * (km - 1) / 2));
            }
            for (auto jt = std::next(it); jt != mult.end(); ++jt) {
                int n = jt->first, kn = jt->second;
                Partition nu = with_part(without_part(without_part(mu, m), n), m + n);
                r.add(nu, c * Scalar::from_rat(Rat((long long)m * n) * km * kn));
            }
        }
    }
    return r;
}

enum class WType { L, K };

namespace detail {

// Ordered application of a list of alpha factors, rightmost first.
inline PPoly alpha_chain(const std::vector<int>& idx, const PPoly& f) {
    PPoly r = f;
    for (auto it = idx.rbegin(); it != idx.rend(); ++it) {
        r = alpha_apply(*it, r);
        if (r.is_zero()) break;
    }
    return r;
}

// Normal order: negative (creation) indices to the left.
inline std::vector<int> normal_order(std::vector<int> idx) {
    std::stable_sort(idx.begin(), idx.end());
    return idx;
}

} // namespace detail

// L_m = 1/2 sum_{j+k=m} :a_j a_k:  and  K_m = 1/6 sum_{j+k+l=m} :a_j a_k a_l:,
// applied exactly; the index sums are finite on bounded-grade input.
// grade_max caps the grade of the result.
inline PPoly virasoro_w_apply(WType type, int m, const PPoly& f, int grade_max) {
    PPoly r;
    const int g = f.max_grade();
    // Any ordered tuple acting nonzero has its positive (annihilating)
    // indices at most g, which pins every index into [m - 2g, g] via the sum
    // constraint; tuples outside act as zero.
    if (type == WType::L) {
        for (int j = m - g; j <= g; ++j) {
            int k = m - j;
            if (j == 0 || k == 0) continue;
            PPoly part = detail::alpha_chain(detail::normal_order({j, k}), f);
            r = r + part.scaled(Scalar::from_rat(Rat(1, 2)));
        }
    } else {
        for (int j = m - 2 * g; j <= g; ++j) {
            if (j == 0) continue;
            for (int k = m - 2 * g; k <= g; ++k) {
                int l = m - j - k;
                if (k == 0 || l == 0 || l > g) continue;
                PPoly part = detail::alpha_chain(detail::normal_order({j, k, l}), f);
                r = r + part.scaled(Scalar::from_rat(Rat(1, 6)));
            }
        }
    }
    return r.grade_truncated(grade_max);
}

} // namespace qks
