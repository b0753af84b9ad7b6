#pragma once

#include <map>
#include <optional>

#include "qks/scalar.hpp"

namespace qks {

// Laurent series in z with Scalar coefficients, truncated below.  All
// exponents e >= -tail() carry exact coefficients; nothing is known below
// the window.  tail() == kExact marks an exact Laurent polynomial.
class ZSeries {
  public:
    static constexpr int kExact = INT32_MAX / 4;

    ZSeries() = default;                       // exact zero
    explicit ZSeries(int tail) : tail_(std::min(tail, kExact)) {}

    static ZSeries monomial(const Scalar& c, int e) {
        ZSeries f;
        f.set(e, c);
        return f;
    }

    int tail() const { return tail_; }
    bool exact() const { return tail_ == kExact; }

    // Highest exponent with a nonzero coefficient.
    std::optional<int> top() const {
        if (c_.empty()) return std::nullopt;
        return c_.begin()->first;
    }

    bool vanishes_on_window() const { return c_.empty(); }

    const std::map<int, Scalar, std::greater<int>>& coeffs() const { return c_; }

    void set(int e, const Scalar& v) {
        if (e < -tail_) return; // below the certified window
        if (v.is_zero()) c_.erase(e);
        else c_[e] = v;
    }

    // Certified coefficient read; exponents below the window are an error.
    const Scalar& coeff(int e) const {
        if (e < -tail_) throw std::domain_error("ZSeries::coeff: exponent below certified window");
        static const Scalar kZero = Scalar::zero();
        auto it = c_.find(e);
        return it == c_.end() ? kZero : it->second;
    }

    ZSeries truncated(int new_tail) const {
        ZSeries r(std::min(new_tail, tail_));
        for (auto& [e, v] : c_)
            if (e >= -r.tail_) r.c_.emplace(e, v);
        return r;
    }

    ZSeries operator-() const {
        ZSeries r = *this;
        for (auto& [e, v] : r.c_) v = -v;
        return r;
    }

    ZSeries operator+(const ZSeries& b) const {
        ZSeries r(std::min(tail_, b.tail_));
        for (auto& [e, v] : c_)
            if (e >= -r.tail_) r.c_[e] = v;
        for (auto& [e, v] : b.c_) {
            if (e < -r.tail_) continue;
            auto it = r.c_.find(e);
            if (it == r.c_.end()) r.c_[e] = v;
            else {
                it->second = it->second + v;
                if (it->second.is_zero()) r.c_.erase(it);
            }
        }
        return r;
    }

    ZSeries operator-(const ZSeries& b) const { return *this + (-b); }

    ZSeries scaled(const Scalar& s) const {
        ZSeries r(tail_);
        if (s.is_zero()) return r;
        for (auto& [e, v] : c_) {
            Scalar p = v * s;
            if (!p.is_zero()) r.c_.emplace(e, p);
        }
        return r;
    }

    // Multiply by the monomial c z^m.
    ZSeries shifted(int m, const Scalar& c = Scalar::one()) const {
        ZSeries r(tail_ == kExact ? kExact : tail_ - m);
        if (c.is_zero()) return r;
        for (auto& [e, v] : c_) {
            Scalar p = v * c;
            if (!p.is_zero()) r.c_.emplace(e + m, p);
        }
        return r;
    }

    ZSeries operator*(const ZSeries& b) const {
        long long ta = tail_ == kExact ? LLONG_MAX / 4 : tail_;
        long long tb = b.tail_ == kExact ? LLONG_MAX / 4 : b.tail_;
        long long topa = top() ? *top() : LLONG_MIN / 4;
        long long topb = b.top() ? *b.top() : LLONG_MIN / 4;
        long long t = std::min(ta - topb, tb - topa);
        ZSeries r(static_cast<int>(std::min<long long>(t, kExact)));
        for (auto& [ea, va] : c_)
            for (auto& [eb, vb] : b.c_) {
                int e = ea + eb;
                if (e < -r.tail_) continue;
                Scalar p = va * vb;
                if (p.is_zero()) continue;
                auto it = r.c_.find(e);
                if (it == r.c_.end()) r.c_.emplace(e, p);
                else {
                    it->second = it->second + p;
                    if (it->second.is_zero()) r.c_.erase(it);
                }
            }
        return r;
    }

    ZSeries substitute_t(const Rat& t) const {
        ZSeries r(tail_);
        for (auto& [e, v] : c_) {
            Scalar s = v.substitute_t(t);
            if (!s.is_zero()) r.c_.emplace(e, s);
        }
        return r;
    }

    // exponent<TAB>scalar rows, descending exponent.
    std::string to_tsv() const {
        std::string out;
        for (auto& [e, v] : c_) {
            out += std::to_string(e);
            out += '\t';
            out += v.to_string();
            out += '\n';
        }
        return out;
    }

  private:
    std::map<int, Scalar, std::greater<int>> c_;
    int tail_ = kExact;
};

struct SeriesDiff {
    int exponent = 0;
    Scalar lhs, rhs;
};

struct SeriesEq {
    bool equal = true;
    int window = ZSeries::kExact;                // compared on e >= -window
    std::optional<SeriesDiff> first_diff;
};

// Compare on the common certified window, reporting the highest-exponent
// discrepancy if any.
inline SeriesEq eq_to_order(const ZSeries& a, const ZSeries& b) {
    SeriesEq r;
    r.window = std::min(a.tail(), b.tail());
    std::map<int, char, std::greater<int>> seen;
    for (auto& [e, v] : a.coeffs())
        if (e >= -r.window) seen[e] = 1;
    for (auto& [e, v] : b.coeffs())
        if (e >= -r.window) seen[e] = 1;
    for (auto& [e, tag] : seen) {
        (void)tag;
        const Scalar &va = a.coeff(e), &vb = b.coeff(e);
        if (va != vb) {
            r.equal = false;
            r.first_diff = SeriesDiff{e, va, vb};
            return r;
        }
    }
    return r;
}

} // namespace qks
