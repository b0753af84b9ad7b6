#pragma once

#include <utility>
#include <vector>

#include "qks/zseries.hpp"

namespace qks {

// Polynomial in D = z d/dz with Scalar coefficients.
class DPoly {
  public:
    DPoly() = default;
    DPoly(const Scalar& c) { // NOLINT: implicit constant lift
        if (!c.is_zero()) c_.push_back(c);
    }

    static DPoly d() {
        DPoly p;
        p.c_ = {Scalar::zero(), Scalar::one()};
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    Scalar coeff(int i) const {
        return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Scalar::zero();
    }

    DPoly operator-() const {
        DPoly r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }

    DPoly operator+(const DPoly& b) const {
        DPoly r;
        size_t n = std::max(c_.size(), b.c_.size());
        r.c_.resize(n, Scalar::zero());
        for (size_t i = 0; i < n; ++i) r.c_[i] = coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
        r.trim();
        return r;
    }

    DPoly operator-(const DPoly& b) const { return *this + (-b); }

    DPoly operator*(const DPoly& b) const {
        DPoly r;
        if (is_zero() || b.is_zero()) return r;
        r.c_.assign(c_.size() + b.c_.size() - 1, Scalar::zero());
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] = r.c_[i + j] + c_[i] * b.c_[j];
        r.trim();
        return r;
    }

    DPoly scaled(const Scalar& s) const {
        DPoly r = *this;
        for (auto& v : r.c_) v = v * s;
        r.trim();
        return r;
    }

    // c(D + m)
    DPoly shifted_arg(int m) const {
        if (m == 0) return *this;
        DPoly r;
        r.c_.assign(c_.size(), Scalar::zero());
        for (size_t j = 0; j < c_.size(); ++j) {
            Scalar mp = Scalar::one();
            for (int i = static_cast<int>(j); i >= 0; --i) {
                r.c_[i] = r.c_[i] + c_[j] * Scalar::from_rat(Rat(binomial(static_cast<long long>(j), static_cast<int>(j) - i))) * mp;
                mp = mp * Scalar::from_int(m);
            }
        }
        r.trim();
        return r;
    }

    Scalar eval_int(long long k) const {
        Scalar r = Scalar::zero(), kp = Scalar::one();
        for (auto& v : c_) {
            r = r + v * kp;
            kp = kp * Scalar::from_int(k);
        }
        return r;
    }

    bool operator==(const DPoly& b) const { return (*this - b).is_zero(); }
    bool operator!=(const DPoly& b) const { return !(*this == b); }

    std::string to_string() const;

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Scalar> c_;
};

// Element of the quantum torus with polynomial D part: a finite sum of atoms
// z^m E^n c(D), where E z^k = q^k z^k.  Normal form keys atoms by (m, n).
class TorusOp {
  public:
    TorusOp() = default;

    static TorusOp atom(int m, int n, const DPoly& c) {
        TorusOp op;
        if (!c.is_zero()) op.a_[{m, n}] = c;
        return op;
    }

    static TorusOp identity() { return atom(0, 0, Scalar::one()); }
    static TorusOp z_pow(int m) { return atom(m, 0, Scalar::one()); }
    static TorusOp e_pow(int n) { return atom(0, n, Scalar::one()); }
    static TorusOp euler() { return atom(0, 0, DPoly::d()); }

    bool is_zero() const { return a_.empty(); }
    const std::map<std::pair<int, int>, DPoly>& atoms() const { return a_; }

    TorusOp operator-() const {
        TorusOp r = *this;
        for (auto& [k, c] : r.a_) c = -c;
        return r;
    }

    TorusOp operator+(const TorusOp& b) const {
        TorusOp r = *this;
        for (auto& [k, c] : b.a_) {
            auto it = r.a_.find(k);
            if (it == r.a_.end()) r.a_[k] = c;
            else {
                it->second = it->second + c;
                if (it->second.is_zero()) r.a_.erase(it);
            }
        }
        return r;
    }

    TorusOp operator-(const TorusOp& b) const { return *this + (-b); }

    TorusOp scaled(const Scalar& s) const {
        TorusOp r;
        for (auto& [k, c] : a_) {
            DPoly cs = c.scaled(s);
            if (!cs.is_zero()) r.a_[k] = cs;
        }
        return r;
    }

    // (z^{m1} E^{n1} c1(D)) (z^{m2} E^{n2} c2(D))
    //   = q^{n1 m2} z^{m1+m2} E^{n1+n2} c1(D + m2) c2(D)
    TorusOp operator*(const TorusOp& b) const {
        TorusOp r;
        for (auto& [k1, c1] : a_)
            for (auto& [k2, c2] : b.a_) {
                DPoly c = c1.shifted_arg(k2.first) * c2;
                c = c.scaled(Scalar::q_pow(k1.second * k2.first));
                if (c.is_zero()) continue;
                std::pair<int, int> k{k1.first + k2.first, k1.second + k2.second};
                auto it = r.a_.find(k);
                if (it == r.a_.end()) r.a_[k] = c;
                else {
                    it->second = it->second + c;
                    if (it->second.is_zero()) r.a_.erase(it);
                }
            }
        return r;
    }

    TorusOp pow(int e) const {
        if (e < 0) throw std::domain_error("TorusOp::pow: negative power");
        TorusOp r = identity(), b = *this;
        for (int n = e; n; n >>= 1) {
            if (n & 1) r = r * b;
            b = b * b;
        }
        return r;
    }

    bool operator==(const TorusOp& b) const { return (*this - b).is_zero(); }
    bool operator!=(const TorusOp& b) const { return !(*this == b); }

    int max_zshift() const {
        if (a_.empty()) return 0;
        int m = INT32_MIN;
        for (auto& [k, c] : a_) m = std::max(m, k.first);
        return m;
    }

    // Action on a series: the atom z^m E^n c(D) maps v z^k to
    // v c(k) q^{nk} z^{k+m}.  The result window shrinks by max_zshift().
    ZSeries apply(const ZSeries& f) const {
        int t = f.tail() == ZSeries::kExact ? ZSeries::kExact : f.tail() - max_zshift();
        ZSeries r(t);
        for (auto& [k, c] : a_) {
            auto [m, n] = k;
            for (auto& [e, v] : f.coeffs()) {
                if (e + m < -r.tail()) continue;
                Scalar w = v * c.eval_int(e) * Scalar::q_pow(n * e);
                if (w.is_zero()) continue;
                r.set(e + m, r.coeff(e + m) + w);
            }
        }
        return r;
    }

    TorusOp substitute_t(const Rat& t) const {
        TorusOp r;
        for (auto& [k, c] : a_) {
            DPoly cs;
            for (int i = c.degree(); i >= 0; --i)
                cs = cs * DPoly::d() + DPoly(c.coeff(i).substitute_t(t));
            if (!cs.is_zero()) r.a_[k] = cs;
        }
        return r;
    }

    std::string to_string() const;

  private:
    std::map<std::pair<int, int>, DPoly> a_;
};

inline TorusOp commutator(const TorusOp& a, const TorusOp& b) { return a * b - b * a; }

namespace detail {

inline std::string scalar_factor_str(const Scalar& s) {
    std::string t = s.to_string();
    bool composite = t.find(" + ") != std::string::npos || t.find(" - ") != std::string::npos ||
                     (!t.empty() && t[0] == '-');
    return composite ? "(" + t + ")" : t;
}

} // namespace detail

inline std::string DPoly::to_string() const {
    if (is_zero()) return "0";
    if (degree() == 0) return c_[0].to_string();
    std::string s;
    for (int i = 0; i <= degree(); ++i) {
        if (c_[i].is_zero()) continue;
        std::string piece;
        if (i == 0) piece = detail::scalar_factor_str(c_[i]);
        else {
            std::string dpart = i == 1 ? "D" : "D^" + std::to_string(i);
            piece = c_[i].is_one() ? dpart : detail::scalar_factor_str(c_[i]) + "*" + dpart;
        }
        if (!s.empty()) s += " + ";
        s += piece;
    }
    return s;
}

inline std::string TorusOp::to_string() const {
    if (a_.empty()) return "0";
    std::string s;
    for (auto& [k, c] : a_) {
        auto [m, n] = k;
        std::string piece;
        bool const_one = c.degree() == 0 && c.coeff(0).is_one();
        if (c.degree() > 0) piece = "(" + c.to_string() + ")";
        else if (!const_one || (m == 0 && n == 0)) piece = detail::scalar_factor_str(c.coeff(0));
        auto append = [&piece](const std::string& base, int e) {
            if (e == 0) return;
            if (!piece.empty()) piece += "*";
            piece += base;
            if (e != 1) piece += "^" + std::to_string(e);
        };
        append("z", m);
        append("E", n);
        if (!s.empty()) s += " + ";
        s += piece;
    }
    return s;
}

} // namespace qks
