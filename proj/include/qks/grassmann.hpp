#pragma once

#include <functional>

#include "qks/boson.hpp"
#include "qks/models.hpp"

namespace qks {

// A point of the big cell presented by series phi_j = z^j + lower order
// terms, all certified down to z^{-order}.
struct AdmissibleBasis {
    std::vector<ZSeries> elements;
    int order = 0;

    static AdmissibleBasis from_model(const ModelId& id, int j_max, int N) {
        return {build_basis(id, j_max, N), N};
    }
};

// Pluecker coordinate of the partition: the determinant of the minor pairing
// row exponents {i - 1 - lambda_i, i = 1..n} with columns phi_0 .. phi_{n-1}.
// Any n >= len(lambda) gives the same value; n = -1 picks len(lambda).
// reversed_rows flips the row order (negating the value for odd permutations);
// it exists for sign-convention experiments and negative controls.
inline Scalar plucker(const AdmissibleBasis& Vb, const Partition& lam, int n = -1,
                      bool reversed_rows = false) {
    const int len = static_cast<int>(lam.size());
    if (n < 0) n = len;
    if (n < len) throw std::invalid_argument("plucker: minor size below partition length");
    if (n > static_cast<int>(Vb.elements.size()))
        throw std::invalid_argument("plucker: minor size " + std::to_string(n) + " needs " +
                                    std::to_string(n) + " basis elements, have " +
                                    std::to_string(Vb.elements.size()));
    const int lam1 = lam.empty() ? 0 : lam[0];
    if (lam1 > Vb.order)
        throw std::invalid_argument("plucker: needs coefficients down to z^-" +
                                    std::to_string(lam1) + ", basis certified to z^-" +
                                    std::to_string(Vb.order));
    if (n == 0) return Scalar::one();

    std::vector<std::vector<Scalar>> M(n, std::vector<Scalar>(n));
    for (int i = 0; i < n; ++i) {
        int e = i - (i < len ? lam[i] : 0);
        int row = reversed_rows ? n - 1 - i : i;
        for (int j = 0; j < n; ++j) M[row][j] = Vb.elements[j].coeff(e);
    }

    // Laplace expansion along columns, memoized on the set of used rows.
    std::vector<Scalar> memo(size_t(1) << n, Scalar::zero());
    std::vector<bool> seen(size_t(1) << n, false);
    memo[0] = Scalar::one();
    seen[0] = true;
    std::function<const Scalar&(unsigned)> det = [&](unsigned used) -> const Scalar& {
        if (seen[used]) return memo[used];
        seen[used] = true;
        int col = __builtin_popcount(used) - 1;
        Scalar acc = Scalar::zero();
        int k = 0; // position of row i within the used set
        for (int i = 0; i < n; ++i) {
            if (!(used >> i & 1)) continue;
            if (!M[i][col].is_zero()) {
                Scalar term = M[i][col] * det(used & ~(1u << i));
                acc = (k + col) % 2 == 0 ? acc + term : acc - term;
            }
            ++k;
        }
        memo[used] = std::move(acc);
        return memo[used];
    };
    return det((1u << n) - 1);
}

// Schur expansion of the tau function of the point: sum over |lambda| <= d_max
// of plucker(Vb, lambda) * s_lambda.
inline PPoly tau_from_basis(const AdmissibleBasis& Vb, int d_max) {
    PPoly tau;
    for (int d = 0; d <= d_max; ++d)
        for (const Partition& lam : partitions_of(d)) {
            Scalar c = plucker(Vb, lam);
            if (!c.is_zero()) tau = tau + schur_poly(lam).scaled(c);
        }
    return tau;
}

// Wave function at zero times: the Miwa shift substitutes p_n -> z^{-n} into
// tau / tau(0), collecting grade d into the z^{-d} coefficient.  The caller
// must supply tau to grade N or beyond.
inline ZSeries sato_wave(const PPoly& tau, int N) {
    Scalar c0 = tau.coeff({});
    if (c0.is_zero()) throw std::invalid_argument("sato_wave: tau has no constant term");
    std::map<int, Scalar> acc;
    for (auto& [mu, c] : tau.terms()) {
        int d = weight(mu);
        if (d <= N) {
            auto [it, fresh] = acc.try_emplace(-d, c);
            if (!fresh) it->second = it->second + c;
        }
    }
    std::optional<Scalar> inv;
    if (!(c0 == Scalar::one())) {
        inv = c0.inverse();
        if (!inv) throw std::invalid_argument("sato_wave: tau(0) is not invertible");
    }
    ZSeries w(N);
    for (auto& [e, c] : acc) w.set(e, inv ? c * *inv : c);
    return w;
}

} // namespace qks
