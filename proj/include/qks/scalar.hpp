#pragma once

#include <compare>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "qks/qtpoly.hpp"

namespace qks {

// Binomial numerator factor kept in factored form.
//   kind 0: (1 - T q^j)     kind 1: (T - q^j)     j >= 0
struct NumFactor {
    int kind = 0;
    int j = 0;
    auto operator<=>(const NumFactor&) const = default;

    QTPoly expand() const {
        if (kind == 0) return QTPoly::constant(1) - QTPoly::monomial(1, 2 * j, 1);
        return QTPoly::monomial(1, 0, 1) - QTPoly::monomial(1, 2 * j, 0);
    }
};

namespace detail {

// Cyclotomic polynomial Phi_d in q = Q^2, monic in q.
inline QTPoly cyclotomic(int d) {
    static std::map<int, QTPoly> cache;
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    QTPoly p = QTPoly::monomial(1, 2 * d) - QTPoly::constant(1);
    for (int e = 1; e < d; ++e)
        if (d % e == 0) p = *p.exact_div(cyclotomic(e));
    cache.emplace(d, p);
    return p;
}

} // namespace detail

// Element of the coefficient field: exact rational function of Q = q^{1/2}
// and T with denominators restricted to products of (1 - q^k),
//
//   Q^{qexp} * num(Q,T) * prod nfac / prod_k (1 - q^k)^{m_k}.
//
// Canonical form: zero iff num is the zero polynomial (then all other parts
// are cleared); otherwise num has Q-valuation 0 and no (1 - q^k) in the
// denominator divides it.
class Scalar {
  public:
    Scalar() = default;

    static Scalar zero() { return {}; }
    static Scalar one() { return from_rat(1); }

    static Scalar from_int(long long v) { return from_rat(Rat(v)); }

    static Scalar from_rat(const Rat& v) {
        Scalar s;
        s.num_ = QTPoly::constant(v);
        return s;
    }

    static Scalar from_poly(QTPoly p) {
        Scalar s;
        s.num_ = std::move(p);
        s.normalize();
        return s;
    }

    // Q^h, i.e. q^{h/2}.
    static Scalar q_half_pow(int h) {
        Scalar s;
        s.num_ = QTPoly::constant(1);
        s.qexp_ = h;
        return s;
    }

    static Scalar q_pow(int k) { return q_half_pow(2 * k); }

    static Scalar t_pow(int m) {
        Scalar s;
        s.num_ = QTPoly::monomial(1, 0, m);
        return s;
    }

    // (1 - q^k) as a numerator polynomial; k >= 1.
    static Scalar q_int(int k) {
        if (k < 1) throw std::domain_error("Scalar::q_int: k must be >= 1");
        return from_poly(QTPoly::one_minus_qpow(2 * k));
    }

    // 1 / (1 - q^k)^mult.
    static Scalar inv_q_int(int k, int mult = 1) {
        if (k < 1 || mult < 1) throw std::domain_error("Scalar::inv_q_int: bad arguments");
        Scalar s = one();
        s.den_[k] = mult;
        return s;
    }

    static Scalar one_minus_tq(int j) {
        Scalar s = one();
        s.nfac_[NumFactor{0, j}] = 1;
        return s;
    }

    static Scalar t_minus_q(int j) {
        Scalar s = one();
        s.nfac_[NumFactor{1, j}] = 1;
        return s;
    }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return *this == one(); }

    int qexp() const { return qexp_; }
    const QTPoly& num() const { return num_; }
    const std::map<int, int>& den() const { return den_; }
    const std::map<NumFactor, int>& nfac() const { return nfac_; }

    Scalar operator-() const {
        Scalar r = *this;
        r.num_ = -r.num_;
        return r;
    }

    Scalar operator+(const Scalar& b) const {
        if (is_zero()) return b;
        if (b.is_zero()) return *this;
        Scalar r;
        r.den_ = den_;
        for (auto& [k, m] : b.den_) {
            auto& slot = r.den_[k];
            slot = std::max(slot, m);
        }
        QTPoly pa = num_, pb = b.num_;
        for (auto& [k, m] : r.den_) {
            for (int i = mult_of(den_, k); i < m; ++i) pa = pa * QTPoly::one_minus_qpow(2 * k);
            for (int i = mult_of(b.den_, k); i < m; ++i) pb = pb * QTPoly::one_minus_qpow(2 * k);
        }
        for (auto& [f, m] : nfac_) {
            int c = std::min(m, mult_of(b.nfac_, f));
            if (c > 0) r.nfac_[f] = c;
        }
        for (auto& [f, m] : nfac_)
            for (int i = mult_of(r.nfac_, f); i < m; ++i) pa = pa * f.expand();
        for (auto& [f, m] : b.nfac_)
            for (int i = mult_of(r.nfac_, f); i < m; ++i) pb = pb * f.expand();
        r.qexp_ = std::min(qexp_, b.qexp_);
        r.num_ = pa.shifted(qexp_ - r.qexp_) + pb.shifted(b.qexp_ - r.qexp_);
        r.normalize();
        return r;
    }

    Scalar operator-(const Scalar& b) const { return *this + (-b); }

    Scalar operator*(const Scalar& b) const {
        if (is_zero() || b.is_zero()) return {};
        Scalar r;
        r.num_ = num_ * b.num_;
        r.qexp_ = qexp_ + b.qexp_;
        r.den_ = den_;
        for (auto& [k, m] : b.den_) r.den_[k] += m;
        r.nfac_ = nfac_;
        for (auto& [f, m] : b.nfac_) r.nfac_[f] += m;
        r.normalize();
        return r;
    }

    // Multiplicative inverse when representable, i.e. when the numerator
    // factors into cyclotomics (equivalently, divides a product of (1 - q^k)).
    std::optional<Scalar> inverse() const {
        if (is_zero()) throw std::domain_error("Scalar: inverse of zero");
        if (!nfac_.empty() || num_.t_degree() != 0) return std::nullopt;
        QTPoly rest = num_;
        std::map<int, int> fac;
        int half_deg = rest.q_degree() / 2;
        int dmax = half_deg * half_deg + 6;
        for (int d = 1; d <= dmax && rest.q_degree() > 0; ++d) {
            while (true) {
                auto q = rest.exact_div(detail::cyclotomic(d));
                if (!q) break;
                rest = *q;
                ++fac[d];
            }
        }
        if (rest.size() != 1 || rest.q_degree() != 0) return std::nullopt;
        Rat c = rest.terms().front().second;
        int total_mult = 0;
        QTPoly p = QTPoly::constant(1);
        for (auto& [d, m] : fac) {
            total_mult += m;
            // (q^d - 1) / Phi_d = product of the proper cyclotomic cofactors
            QTPoly cof = *(QTPoly::monomial(1, 2 * d) - QTPoly::constant(1)).exact_div(detail::cyclotomic(d));
            for (int i = 0; i < m; ++i) p = p * cof;
        }
        Rat unit = Rat(total_mult % 2 ? -1 : 1) / c;
        Scalar r;
        r.num_ = p.scaled(unit);
        for (auto& [k, m] : den_)
            for (int i = 0; i < m; ++i) r.num_ = r.num_ * QTPoly::one_minus_qpow(2 * k);
        r.qexp_ = -qexp_;
        r.den_ = fac;
        r.normalize();
        return r;
    }

    Scalar operator/(const Scalar& b) const {
        if (b.is_zero()) throw std::domain_error("Scalar: division by zero");
        if (is_zero()) return {};
        if (auto inv = b.inverse()) return *this * *inv;
        // Fall back to exact polynomial division after full expansion.
        QTPoly pa = num_, pb = b.num_;
        for (auto& [f, m] : nfac_)
            for (int i = 0; i < m; ++i) pa = pa * f.expand();
        for (auto& [f, m] : b.nfac_)
            for (int i = 0; i < m; ++i) pb = pb * f.expand();
        for (auto& [k, m] : b.den_)
            for (int i = 0; i < m; ++i) pa = pa * QTPoly::one_minus_qpow(2 * k);
        int shift = pa.q_low();
        pa = pa.shifted(-shift);
        auto q = pa.exact_div(pb);
        if (!q) throw std::domain_error("Scalar: quotient not representable");
        Scalar r;
        r.num_ = *q;
        r.qexp_ = qexp_ - b.qexp_ + shift;
        r.den_ = den_;
        r.normalize();
        return r;
    }

    Scalar pow(int e) const {
        if (e < 0) {
            auto inv = inverse();
            if (!inv) throw std::domain_error("Scalar::pow: negative power of non-unit");
            return inv->pow(-e);
        }
        Scalar r = one(), b = *this;
        for (int n = e; n; n >>= 1) {
            if (n & 1) r = r * b;
            b = b * b;
        }
        return r;
    }

    bool operator==(const Scalar& b) const { return (*this - b).is_zero(); }
    bool operator!=(const Scalar& b) const { return !(*this == b); }

    // Exponent of the global Q power; the value is Q^{q_valuation} * num / den.
    int q_valuation() const { return qexp_; }

    bool denominator_free() const { return den_.empty(); }

    // Numerator with all factored binomials multiplied out (denominator and
    // the global Q power excluded).
    QTPoly expanded_num() const {
        QTPoly p = num_;
        for (auto& [f, m] : nfac_)
            for (int i = 0; i < m; ++i) p = p * f.expand();
        return p;
    }

    // Plain polynomial form when the denominator is empty and qexp >= 0.
    std::optional<QTPoly> to_polynomial() const {
        if (is_zero()) return QTPoly{};
        if (!den_.empty() || qexp_ < 0) return std::nullopt;
        return expanded_num().shifted(qexp_);
    }

    // Substitute a rational value for T; q stays symbolic.
    Scalar substitute_t(const Rat& t) const {
        if (is_zero()) return {};
        QTPoly p;
        for (auto& [k, c] : num_.terms()) {
            int td = QTPoly::key_t(k);
            p = p + QTPoly::monomial(c * rat_pow(t, td), QTPoly::key_q(k), 0);
        }
        for (auto& [f, m] : nfac_) {
            QTPoly fp = f.kind == 0 ? QTPoly::constant(1) - QTPoly::monomial(t, 2 * f.j)
                                    : QTPoly::constant(t) - QTPoly::monomial(1, 2 * f.j);
            for (int i = 0; i < m; ++i) p = p * fp;
        }
        Scalar r;
        r.num_ = std::move(p);
        r.qexp_ = qexp_;
        r.den_ = den_;
        r.normalize();
        return r;
    }

    // Substitute rational values for Q and T.  Throws if a denominator
    // factor vanishes at the chosen point.
    Rat eval(const Rat& qhalf, const Rat& t) const {
        if (is_zero()) return 0;
        Rat v = num_.eval(qhalf, t) * rat_pow(qhalf, qexp_);
        for (auto& [f, m] : nfac_) v *= rat_pow(f.expand().eval(qhalf, t), m);
        for (auto& [k, m] : den_) {
            Rat d = Rat(1) - rat_pow(qhalf, 2 * k);
            if (d == 0) throw std::domain_error("Scalar::eval: denominator vanishes");
            v /= rat_pow(d, m);
        }
        return v;
    }

    // q-adic expansion as a polynomial in Q and T, exact modulo Q^{qmax+1}.
    // Requires qexp >= 0 (no pole at q = 0 in the chosen normalization).
    QTPoly q_series(int qmax) const {
        if (is_zero()) return {};
        if (qexp_ < 0) throw std::domain_error("Scalar::q_series: negative Q valuation");
        QTPoly p = expanded_num().shifted(qexp_).q_truncated(qmax);
        for (auto& [k, m] : den_) {
            QTPoly geo;
            for (int i = 0; 2 * k * i <= qmax; ++i) geo = geo + QTPoly::monomial(1, 2 * k * i);
            for (int i = 0; i < m; ++i) p = (p * geo).q_truncated(qmax);
        }
        return p;
    }

    std::string to_string() const;
    static Scalar parse(const std::string& text);

  private:
    template <class M, class K>
    static int mult_of(const M& m, const K& k) {
        auto it = m.find(k);
        return it == m.end() ? 0 : it->second;
    }

    void normalize() {
        if (num_.is_zero()) {
            qexp_ = 0;
            den_.clear();
            nfac_.clear();
            return;
        }
        int low = num_.q_low();
        if (low != 0) {
            num_ = num_.shifted(-low);
            qexp_ += low;
        }
        for (auto it = den_.begin(); it != den_.end();) {
            int k = it->first;
            while (it->second > 0 && num_.q_degree() >= 2 * k && num_.size() > 1) {
                auto q = num_.exact_div(QTPoly::one_minus_qpow(2 * k));
                if (!q) break;
                num_ = std::move(*q);
                --it->second;
            }
            it = it->second == 0 ? den_.erase(it) : std::next(it);
        }
    }

    QTPoly num_;
    int qexp_ = 0;
    std::map<int, int> den_;
    std::map<NumFactor, int> nfac_;
};

namespace detail {

inline std::string q_pow_str(int h) {
    if (h == 2) return "q";
    if (h % 2 == 0) return "q^" + std::to_string(h / 2);
    return "q^(" + std::to_string(h) + "/2)";
}

inline std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

// One monomial c * Q^h * T^t, sign handled by the caller.
inline std::string term_str(const Rat& cabs, int h, int t) {
    std::string s;
    if (cabs != 1 || (h == 0 && t == 0)) s = rat_str(cabs);
    if (h != 0) {
        if (!s.empty()) s += "*";
        s += q_pow_str(h);
    }
    if (t != 0) {
        if (!s.empty()) s += "*";
        s += t == 1 ? "T" : "T^" + std::to_string(t);
    }
    return s;
}

inline std::string poly_str(const QTPoly& p) {
    std::string s;
    for (auto& [k, c] : p.terms()) {
        bool neg = c < 0;
        if (s.empty()) {
            if (neg) s += "-";
        } else {
            s += neg ? " - " : " + ";
        }
        s += term_str(neg ? Rat(-c) : c, QTPoly::key_q(k), QTPoly::key_t(k));
    }
    return s;
}

} // namespace detail

inline std::string Scalar::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    bool neg = false;
    auto push = [&s](const std::string& piece) {
        if (!s.empty()) s += "*";
        s += piece;
    };
    if (num_.size() == 1) {
        const auto& [k, c] = num_.terms().front();
        Rat cabs = c;
        if (c < 0) {
            neg = true;
            cabs = -c;
        }
        if (qexp_ != 0) push(detail::q_pow_str(qexp_));
        int td = QTPoly::key_t(k);
        if (td != 0) push(td == 1 ? "T" : "T^" + std::to_string(td));
        if (cabs != 1 || (s.empty() && nfac_.empty() && den_.empty()))
            s = s.empty() ? detail::rat_str(cabs) : detail::rat_str(cabs) + "*" + s;
    } else {
        if (qexp_ != 0) push(detail::q_pow_str(qexp_));
        std::string ps = detail::poly_str(num_);
        if (qexp_ != 0 || !nfac_.empty() || !den_.empty()) ps = "(" + ps + ")";
        push(ps);
    }
    for (auto& [f, m] : nfac_) {
        std::string fs = "(" + detail::poly_str(f.expand()) + ")";
        if (m > 1) fs += "^" + std::to_string(m);
        push(fs);
    }
    if (!den_.empty()) {
        std::string ds;
        int pieces = 0;
        for (auto& [k, m] : den_) {
            if (!ds.empty()) ds += "*";
            ds += "(" + detail::poly_str(QTPoly::one_minus_qpow(2 * k)) + ")";
            if (m > 1) ds += "^" + std::to_string(m);
            ++pieces;
        }
        s += "/";
        s += (pieces > 1) ? "(" + ds + ")" : ds;
    }
    if (neg) s = "-" + s;
    return s;
}

namespace detail {

struct ScalarParser {
    const std::string& s;
    size_t pos = 0;

    explicit ScalarParser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && s[pos] == ' ') ++pos;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) throw std::invalid_argument("Scalar::parse: expected '" + std::string(1, c) + "' at " + std::to_string(pos));
    }

    Int parse_uint() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw std::invalid_argument("Scalar::parse: expected number at " + std::to_string(pos));
        return Int(s.substr(start, pos - start));
    }

    long long parse_int() {
        bool neg = eat('-');
        Int v = parse_uint();
        return neg ? -v.convert_to<long long>() : v.convert_to<long long>();
    }

    // Exponent of q: integer, or (h/2) with odd h, optionally parenthesized.
    int parse_q_exponent_halves() {
        if (eat('(')) {
            long long a = parse_int();
            expect('/');
            long long b = parse_int();
            expect(')');
            if (b != 2) throw std::invalid_argument("Scalar::parse: q exponent denominator must be 2");
            return static_cast<int>(a);
        }
        return static_cast<int>(2 * parse_int());
    }

    Scalar parse_atom() {
        if (eat('(')) {
            Scalar v = parse_sum();
            expect(')');
            if (eat('^')) return v.pow(static_cast<int>(parse_int()));
            return v;
        }
        char c = peek();
        if (c == 'q') {
            ++pos;
            int h = 2;
            if (eat('^')) h = parse_q_exponent_halves();
            return Scalar::q_half_pow(h);
        }
        if (c == 'T') {
            ++pos;
            int m = 1;
            if (eat('^')) m = static_cast<int>(parse_int());
            return Scalar::t_pow(m);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int a = parse_uint();
            // rational continuation: '/' directly followed by a digit
            size_t save = pos;
            if (eat('/')) {
                if (std::isdigit(static_cast<unsigned char>(peek()))) {
                    Int b = parse_uint();
                    return Scalar::from_rat(Rat(a, b));
                }
                pos = save;
            }
            return Scalar::from_rat(Rat(a));
        }
        throw std::invalid_argument("Scalar::parse: unexpected character at " + std::to_string(pos));
    }

    Scalar parse_product() {
        Scalar v = parse_atom();
        while (true) {
            skip_ws();
            if (eat('*')) {
                v = v * parse_atom();
                continue;
            }
            // top-level division: '/' followed by '('
            size_t save = pos;
            if (eat('/')) {
                if (peek() == '(') {
                    v = v / parse_atom();
                    continue;
                }
                pos = save;
            }
            break;
        }
        return v;
    }

    Scalar parse_sum() {
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        Scalar v = parse_product();
        if (neg) v = -v;
        while (true) {
            char c = peek();
            if (c == '+' || c == '-') {
                ++pos;
                Scalar t = parse_product();
                v = (c == '+') ? v + t : v - t;
                continue;
            }
            break;
        }
        return v;
    }
};

} // namespace detail

inline Scalar Scalar::parse(const std::string& text) {
    detail::ScalarParser p(text);
    Scalar v = p.parse_sum();
    p.skip_ws();
    if (p.pos != text.size()) throw std::invalid_argument("Scalar::parse: trailing input at " + std::to_string(p.pos));
    return v;
}

// [n] = (q^{n/2} - q^{-n/2}) / (q^{1/2} - q^{-1/2})
inline Scalar q_bracket(int n) {
    if (n == 0) return Scalar::zero();
    return (Scalar::q_half_pow(n) - Scalar::q_half_pow(-n)) /
           (Scalar::q_half_pow(1) - Scalar::q_half_pow(-1));
}

// [n]! in brackets style: prod_{k=1}^{n} (q^{k/2} - q^{-k/2}).
inline Scalar q_factorial(int n) {
    Scalar r = Scalar::one();
    for (int k = 1; k <= n; ++k) r = r * (Scalar::q_half_pow(k) - Scalar::q_half_pow(-k));
    return r;
}

// (q; q)_n = prod_{k=1}^{n} (1 - q^k)
inline Scalar q_pochhammer(int n) {
    Scalar r = Scalar::one();
    for (int k = 1; k <= n; ++k) r = r * Scalar::q_int(k);
    return r;
}

// (a; q)_n = prod_{k=1}^{n} (1 - a q^{k-1}) for an arbitrary scalar a.
inline Scalar a_pochhammer(const Scalar& a, int n) {
    Scalar r = Scalar::one();
    for (int k = 1; k <= n; ++k) r = r * (Scalar::one() - a * Scalar::q_pow(k - 1));
    return r;
}

} // namespace qks
