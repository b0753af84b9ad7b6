#pragma once

#include <string>
#include <vector>

#include "qks/torus_op.hpp"

namespace qks {

enum class Family { hurwitz, mv, conifold_i, conifold_ii };

// Model selector.  framing carries r for mv and a for the conifold families.
struct ModelId {
    Family family = Family::hurwitz;
    int framing = 0;

    static ModelId hurwitz() { return {Family::hurwitz, 0}; }
    static ModelId mv(int r) { return {Family::mv, r}; }
    static ModelId coni(int a) { return {Family::conifold_i, a}; }
    static ModelId conii(int a) { return {Family::conifold_ii, a}; }

    std::string to_string() const {
        switch (family) {
            case Family::hurwitz: return "hurwitz";
            case Family::mv: return "mv:r=" + std::to_string(framing);
            case Family::conifold_i: return "coni:a=" + std::to_string(framing);
            case Family::conifold_ii: return "conii:a=" + std::to_string(framing);
        }
        return "?";
    }

    static ModelId parse(const std::string& s) {
        auto tail_int = [&s](size_t at) {
            size_t pos = 0;
            int v = std::stoi(s.substr(at), &pos);
            if (at + pos != s.size()) throw std::invalid_argument("ModelId: trailing characters in '" + s + "'");
            return v;
        };
        if (s == "hurwitz") return hurwitz();
        if (s.rfind("mv:r=", 0) == 0) return mv(tail_int(5));
        if (s.rfind("coni:a=", 0) == 0) return coni(tail_int(7));
        if (s.rfind("conii:a=", 0) == 0) return conii(tail_int(8));
        throw std::invalid_argument("ModelId: unknown model '" + s + "'");
    }

    bool operator==(const ModelId&) const = default;
};

// Coefficient of z^{j-n} in phi_j; n >= 0, leading coefficient is 1.
inline Scalar phi_coefficient(const ModelId& id, int j, int n) {
    if (n < 0) return Scalar::zero();
    const int a = id.framing;
    const int diag = n * (n - 2 * j - 1); // in Q units this multiplies the framing weight
    switch (id.family) {
        case Family::hurwitz:
            return Scalar::q_half_pow(diag) * Scalar::from_rat(Rat(1, factorial(n)));
        case Family::mv: {
            Scalar s = Scalar::q_half_pow((a + 1) * diag + n);
            for (int k = 1; k <= n; ++k) s = s * Scalar::inv_q_int(k);
            return s;
        }
        case Family::conifold_i: {
            Scalar s = Scalar::q_half_pow((a + 1) * diag + n);
            if (n % 2) s = -s;
            for (int k = 1; k <= n; ++k) s = s * Scalar::one_minus_tq(k - 1) * Scalar::inv_q_int(k);
            return s;
        }
        case Family::conifold_ii: {
            Scalar s = Scalar::q_half_pow(a * diag + n);
            for (int k = 1; k <= n; ++k) s = s * Scalar::t_minus_q(k - 1) * Scalar::inv_q_int(k);
            return s;
        }
    }
    return Scalar::zero();
}

// phi_j = z^j + (tail), certified down to z^{-N}.
inline ZSeries build_phi(const ModelId& id, int j, int N) {
    ZSeries f(N);
    for (int n = 0; j - n >= -N; ++n) f.set(j - n, phi_coefficient(id, j, n));
    return f;
}

inline std::vector<ZSeries> build_basis(const ModelId& id, int j_max, int N) {
    std::vector<ZSeries> basis;
    basis.reserve(j_max + 1);
    for (int j = 0; j <= j_max; ++j) basis.push_back(build_phi(id, j, N));
    return basis;
}

// The pair (P0, Q0) stabilizing the span of the phi_j.
inline std::pair<TorusOp, TorusOp> build_ks(const ModelId& id) {
    const int a = id.framing;
    const Scalar rootq = Scalar::q_half_pow(1);
    switch (id.family) {
        case Family::hurwitz:
            return {TorusOp::euler() + TorusOp::atom(-1, -1, Scalar::one()),
                    TorusOp::atom(1, 1, Scalar::one())};
        case Family::mv:
            return {TorusOp::identity() - TorusOp::e_pow(-1) - TorusOp::atom(-1, -(a + 1), rootq),
                    TorusOp::atom(1, a + 1, Scalar::one())};
        case Family::conifold_i:
            return {TorusOp::identity() - TorusOp::e_pow(-1) + TorusOp::atom(-1, -(a + 1), rootq) -
                        TorusOp::atom(-1, -(a + 2), rootq * Scalar::t_pow(1)),
                    TorusOp::atom(1, a + 1, Scalar::one())};
        case Family::conifold_ii:
            return {TorusOp::identity() - TorusOp::e_pow(-1) + TorusOp::atom(-1, -(a + 1), rootq) -
                        TorusOp::atom(-1, -a, rootq * Scalar::t_pow(1)),
                    TorusOp::atom(1, a, Scalar::one())};
    }
    return {TorusOp{}, TorusOp{}};
}

// Q0 phi_j = c phi_{j+1};  P0 phi_j = alpha phi_j + beta phi_{j-1}.
struct LadderData {
    Scalar c, alpha, beta;
};

inline LadderData ladder_data(const ModelId& id, int j) {
    const int a = id.framing;
    const Scalar one = Scalar::one();
    Scalar drop = one - Scalar::q_pow(-j); // 1 - q^{-j}
    switch (id.family) {
        case Family::hurwitz:
            return {Scalar::q_pow(j), Scalar::from_int(j), Scalar::zero()};
        case Family::mv:
            return {Scalar::q_pow((a + 1) * j), drop,
                    -Scalar::q_half_pow(1 - 2 * (a + 1) * j) * drop};
        case Family::conifold_i:
            return {Scalar::q_pow((a + 1) * j), drop,
                    Scalar::q_half_pow(1 - 2 * (a + 1) * j) * drop};
        case Family::conifold_ii:
            return {Scalar::q_pow(a * j), drop,
                    -Scalar::t_pow(1) * Scalar::q_half_pow(1 - 2 * a * j) * drop};
    }
    return {one, one, one};
}

// Closed form of [P0, Q0].
inline TorusOp expected_commutator(const ModelId& id) {
    const int a = id.framing;
    const Scalar w = Scalar::one() - Scalar::q_pow(-1);
    switch (id.family) {
        case Family::hurwitz:
            return TorusOp::atom(1, 1, Scalar::one());
        case Family::mv:
            return TorusOp::atom(1, a, w);
        case Family::conifold_i:
            return TorusOp::atom(1, a, w) +
                   TorusOp::atom(0, -1, w * Scalar::t_pow(1) * Scalar::q_half_pow(-1 - 2 * a));
        case Family::conifold_ii:
            return TorusOp::atom(1, a - 1, w) -
                   TorusOp::atom(0, -1, w * Scalar::q_half_pow(1 - 2 * a));
    }
    return {};
}

} // namespace qks
