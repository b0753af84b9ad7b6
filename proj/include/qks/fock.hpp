#pragma once

#include <cstdlib>
#include <tuple>

#include "qks/boson.hpp"
#include "qks/kac_schwarz.hpp"

namespace qks {

// Charge-0 wedge states indexed by partitions: lambda names the wedge with
// exponent set {i - 1 - lambda_i}, the vacuum being the empty partition.
class FockVec {
  public:
    FockVec() = default;

    static FockVec vacuum() { return state({}); }

    static FockVec state(Partition lambda, const Scalar& c = Scalar::one()) {
        FockVec v;
        if (!c.is_zero()) v.t_.emplace(std::move(lambda), c);
        return v;
    }

    const std::map<Partition, Scalar>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    const Scalar& coeff(const Partition& lambda) const {
        static const Scalar kZero = Scalar::zero();
        auto it = t_.find(lambda);
        return it == t_.end() ? kZero : it->second;
    }

    void add(const Partition& lambda, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = t_.try_emplace(lambda, c);
        if (fresh) return;
        it->second = it->second + c;
        if (it->second.is_zero()) t_.erase(it);
    }

    FockVec operator+(const FockVec& b) const {
        FockVec r = *this;
        for (auto& [lam, c] : b.t_) r.add(lam, c);
        return r;
    }

    FockVec operator-() const {
        FockVec r = *this;
        for (auto& [lam, c] : r.t_) c = -c;
        return r;
    }

    FockVec operator-(const FockVec& b) const { return *this + (-b); }

    FockVec scaled(const Scalar& s) const {
        if (s.is_zero()) return {};
        FockVec r = *this;
        for (auto& [lam, c] : r.t_) c = c * s;
        return r;
    }

    bool operator==(const FockVec& b) const { return (*this - b).is_zero(); }
    bool operator!=(const FockVec& b) const { return !(*this == b); }

  private:
    std::map<Partition, Scalar> t_;
};

// Regularized action of (z^l d^m) on wedge states: slot s (0-based, vacuum
// exponent s) maps its exponent k to k + l - m with weight falling(k, m),
// minus the diagonal counterterm falling(s, m) when l = m so that the vacuum
// tail drops out.  States of grade above D are discarded.
inline FockVec hat_apply(int l, int m, const FockVec& v, int D) {
    if (m < 0) throw std::invalid_argument("hat_apply: derivative order must be nonnegative");
    const int shift = l - m;
    FockVec out;
    for (auto& [lam, coeff] : v.terms()) {
        const int len = static_cast<int>(lam.size());
        const int L = len + std::abs(shift) + 2;
        std::vector<long long> exps(L);
        for (int s = 0; s < L; ++s) exps[s] = s - (s < len ? lam[s] : 0);
        for (int s = 0; s < L; ++s) {
            Int w = falling(exps[s], m);
            if (l == m) w -= falling(s, m);
            if (w == 0) continue;
            const long long e = exps[s] + shift;
            if (e >= L) continue; // the untouched vacuum tail occupies L, L+1, ...
            bool collide = false;
            int before = 0;
            for (int s2 = 0; s2 < L; ++s2) {
                if (s2 == s) continue;
                collide |= exps[s2] == e;
                before += exps[s2] < e;
            }
            if (collide) continue;
            std::vector<long long> ne = exps;
            ne.erase(ne.begin() + s);
            ne.insert(ne.begin() + before, e);
            Partition mu;
            for (int s2 = L - 1; s2 >= 0; --s2) {
                long long part = s2 - ne[s2];
                if (part < 0) throw std::logic_error("hat_apply: malformed wedge");
                if (part == 0 && mu.empty()) continue;
                mu.push_back(static_cast<int>(part));
            }
            std::reverse(mu.begin(), mu.end());
            if (weight(mu) > D) continue;
            Scalar c = coeff * Scalar::from_rat(Rat(w));
            if ((before - s) % 2) c = -c;
            out.add(mu, c);
        }
    }
    return out;
}

// One operator of the fermionic dictionary, written as z^l d^m atoms with
// rational coefficients.  The D -> D + 1 shift relative to the printed
// quadratic/cubic formulas makes the constants drop on charge 0 and is what
// the bosonic cross-check confirms.
struct FermOp {
    enum Kind { alpha, L, K, K0 } kind = alpha;
    int m = 0;

    std::string to_string() const {
        switch (kind) {
            case alpha: return "alpha(" + std::to_string(m) + ")";
            case L: return "L(" + std::to_string(m) + ")";
            case K: return "K(" + std::to_string(m) + ")";
            case K0: return "K0";
        }
        return "?";
    }

    // (l, m, coefficient) atoms of the z-differential operator
    std::vector<std::tuple<int, int, Rat>> atoms() const {
        switch (kind) {
            case alpha: return {{m, 0, 1}};
            case L: // -(z^m (D + (m+1)/2)) with D = z d/dz
                return {{m + 1, 1, -1}, {m, 0, Rat(-(m + 1), 2)}};
            case K: // z^m (D^2/2 + (m+1)/2 D + m/2 + (m-1)(m-2)/12)
                return {{m + 2, 2, Rat(1, 2)},
                        {m + 1, 1, Rat(m + 2, 2)},
                        {m, 0, Rat(m, 2) + Rat((m - 1) * (m - 2), 12)}};
            case K0: // (D^2 + D)/2
                return {{2, 2, Rat(1, 2)}, {1, 1, 1}};
        }
        return {};
    }
};

inline FockVec ferm_apply(const FermOp& op, const FockVec& v, int D) {
    FockVec r;
    for (auto& [l, m, c] : op.atoms())
        r = r + hat_apply(l, m, v, D).scaled(Scalar::from_rat(c));
    return r;
}

// Pairing sum_mu p_mu / z_mu <0| alpha_{mu_1} ... |v>, with alpha_n the hat
// of z^n; sends the state for lambda to the Schur polynomial s_lambda.
inline PPoly bf_correspond(const FockVec& v, int d_max) {
    PPoly out;
    for (auto& [lam, c] : v.terms()) {
        const int d = weight(lam);
        if (d > d_max) continue;
        for (const Partition& mu : partitions_of(d)) {
            FockVec w = FockVec::state(lam);
            for (auto it = mu.rbegin(); it != mu.rend() && !w.is_zero(); ++it)
                w = hat_apply(*it, 0, w, d);
            Scalar pairing = w.coeff({});
            if (!pairing.is_zero())
                out.add(mu, c * pairing * Scalar::from_rat(Rat(1) / Rat(z_mu(mu))));
        }
    }
    return out;
}

// Commutes the square bf o hat = boson o bf over all states of grade <= d_max.
inline CheckReport cross_check_operator(const FermOp& op, int d_max) {
    CheckReport rep{"bf_" + op.to_string(), "", {{"d_max", d_max}}, false, {}};
    const int mm = (op.kind == FermOp::alpha || op.kind == FermOp::L || op.kind == FermOp::K)
                       ? op.m
                       : 0;
    const int bound = d_max + std::abs(mm) + 2;
    for (int d = 0; d <= d_max; ++d) {
        for (const Partition& lam : partitions_of(d)) {
            PPoly lhs = bf_correspond(ferm_apply(op, FockVec::state(lam), bound), bound);
            PPoly s = schur_poly(lam);
            PPoly rhs;
            switch (op.kind) {
                case FermOp::alpha: rhs = alpha_apply(op.m, s); break;
                case FermOp::L: rhs = virasoro_w_apply(WType::L, op.m, s, bound); break;
                case FermOp::K: rhs = virasoro_w_apply(WType::K, op.m, s, bound); break;
                case FermOp::K0: rhs = cut_join_apply(s); break;
            }
            PPoly diff = lhs - rhs;
            if (!diff.is_zero()) {
                rep.params["d_fail"] = d;
                for (auto& [mu, c] : diff.terms()) {
                    if (rep.residual.size() >= 8) break;
                    rep.residual.emplace_back(weight(mu), c);
                }
                break;
            }
        }
        if (!rep.residual.empty()) break;
    }
    rep.finalize();
    return rep;
}

} // namespace qks
