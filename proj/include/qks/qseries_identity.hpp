#pragma once

#include "qks/kac_schwarz.hpp"

namespace qks {

// Verifies, through x^{x_max} q^{q_max}, that the product over m >= 0 of
// (1 - a q^{m+1} x) / (1 - q^m x) expands to 1 + sum_n prod_{j<=n}
// (1 - a q^j)/(1 - q^j) x^n.  The left side is expanded factor by factor with
// coefficients truncated past q^{q_max}; factors with m > q_max cannot touch
// the window.  with_a keeps a symbolic (carried by the T slot); otherwise
// a = 0 and the product is purely geometric.
inline CheckReport q_product_identity_check(int x_max, int q_max, bool with_a) {
    CheckReport rep{
        "q_product_identity", "", {{"q_max", q_max}, {"with_a", with_a ? 1 : 0}, {"x_max", x_max}},
        false, {}};
    const int qcut = 2 * q_max; // window in Q units

    std::vector<QTPoly> lhs(x_max + 1);
    lhs[0] = QTPoly::constant(1);
    for (int m = 0; m <= q_max; ++m) {
        // divide by (1 - q^m x)
        for (int k = 1; k <= x_max; ++k)
            lhs[k] = (lhs[k] + lhs[k - 1].shifted(2 * m, 0)).q_truncated(qcut);
        if (!with_a) continue;
        // multiply by (1 - a q^{m+1} x)
        for (int k = x_max; k >= 1; --k)
            lhs[k] = (lhs[k] - lhs[k - 1].shifted(2 * (m + 1), 1)).q_truncated(qcut);
    }

    Scalar rhs_n = Scalar::one();
    for (int n = 0; n <= x_max; ++n) {
        if (n > 0) {
            rhs_n = rhs_n * Scalar::inv_q_int(n);
            if (with_a) rhs_n = rhs_n * Scalar::one_minus_tq(n);
        }
        QTPoly diff = lhs[n] - rhs_n.q_series(qcut).q_truncated(qcut);
        if (!diff.is_zero() && rep.residual.size() < 8)
            rep.residual.emplace_back(n, Scalar::from_poly(diff));
    }
    rep.finalize();
    return rep;
}

} // namespace qks
