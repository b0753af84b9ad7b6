#include <catch2/catch_amalgamated.hpp>

#include "qks/kac_schwarz.hpp"

using namespace qks;

namespace {

std::vector<ModelId> all_models() {
    std::vector<ModelId> ms{ModelId::hurwitz()};
    for (int r = 0; r <= 3; ++r) ms.push_back(ModelId::mv(r));
    for (int a = -1; a <= 2; ++a) ms.push_back(ModelId::coni(a));
    for (int a = -1; a <= 2; ++a) ms.push_back(ModelId::conii(a));
    return ms;
}

} // namespace

TEST_CASE("annihilation reports pass for every model") {
    for (const ModelId& m : all_models()) {
        CheckReport rep = check_annihilation(m, 20);
        INFO(m.to_string());
        REQUIRE(rep.pass);
        REQUIRE(rep.residual.empty());
        REQUIRE(rep.check == "annihilation");
        REQUIRE(rep.model == m.to_string());
        REQUIRE(rep.params.at("N") == 20);
    }
}

TEST_CASE("perturbing the bottom element breaks annihilation") {
    auto [P, Q] = build_ks(ModelId::hurwitz());
    (void)Q;
    ZSeries phi0 = build_phi(ModelId::hurwitz(), 0, 12);
    phi0.set(-1, phi0.coeff(-1) + Scalar::one());
    ZSeries r = P.apply(phi0);
    REQUIRE_FALSE(r.vanishes_on_window());

    CheckReport rep{"annihilation", "hurwitz", {{"N", 12}}, false, {}};
    rep.add_residual(r);
    rep.finalize();
    REQUIRE_FALSE(rep.pass);
    REQUIRE(rep.residual.front().first == -1); // leading failure sits at z^{-1}
}

TEST_CASE("ladder reports pass for every model") {
    for (const ModelId& m : all_models()) {
        CheckReport rep = check_ladder(m, 6, 16);
        INFO(m.to_string());
        REQUIRE(rep.pass);
    }
    REQUIRE(check_ladder(ModelId::coni(1), 5, 12).pass);
}

TEST_CASE("recursion reports pass for every model") {
    for (const ModelId& m : all_models()) {
        CheckReport rep = check_recursion(m, 6, 16);
        INFO(m.to_string());
        REQUIRE(rep.pass);
    }
}

TEST_CASE("commutator check passes at operator and action level") {
    for (const ModelId& m : all_models()) {
        CheckReport rep = check_commutator(m);
        INFO(m.to_string());
        REQUIRE(rep.pass);
        REQUIRE(rep.params.at("op_equal") == 1);
    }
    auto [p1, q1] = build_ks(ModelId::mv(1));
    REQUIRE(commutator(p1, q1) != expected_commutator(ModelId::mv(2)));
}

TEST_CASE("basis reduction recovers membership coefficients") {
    const ModelId m = ModelId::hurwitz();
    std::vector<ZSeries> basis = build_basis(m, 5, 10);

    SECTION("a basis element reduces to a unit vector") {
        auto [coeffs, residual] = basis_reduce(basis[2], basis, 10);
        for (int j = 0; j <= 5; ++j) REQUIRE(coeffs[j] == (j == 2 ? Scalar::one() : Scalar::zero()));
        REQUIRE(residual.vanishes_on_window());
    }

    SECTION("an exact member with mixed coefficients round-trips") {
        std::vector<ZSeries> cb = build_basis(ModelId::coni(1), 3, 10);
        std::vector<Scalar> want{Scalar::from_int(3), -Scalar::q_pow(1) * Scalar::from_rat(Rat(1, 2)),
                                 Scalar::t_pow(1) * Scalar::q_half_pow(1), Scalar::inv_q_int(1)};
        ZSeries f;
        for (int j = 0; j < 4; ++j) f = f + cb[j].scaled(want[j]);
        auto [coeffs, residual] = basis_reduce(f, cb, 10);
        for (int j = 0; j < 4; ++j) REQUIRE(coeffs[j] == want[j]);
        REQUIRE(residual.vanishes_on_window());
    }

    SECTION("a non-member leaves its own residual") {
        ZSeries f = ZSeries::monomial(Scalar::one(), -1).truncated(8);
        auto [coeffs, residual] = basis_reduce(f, basis, 8);
        for (auto& c : coeffs) REQUIRE(c.is_zero());
        REQUIRE(residual.coeff(-1) == Scalar::one());
    }

    SECTION("a series topping above the basis is rejected") {
        ZSeries f = ZSeries::monomial(Scalar::one(), 7).truncated(8);
        REQUIRE_THROWS_AS(basis_reduce(f, basis, 8), std::invalid_argument);
    }
}

TEST_CASE("shifted bottom element reduces only at the degenerate point") {
    // z*phi_0 is not in the span at generic q: the residual at z^{-1} is the
    // square (Q - 1/Q)^2 / 2, which dies exactly at Q = 1.
    std::vector<ZSeries> basis = build_basis(ModelId::hurwitz(), 6, 10);
    ZSeries f = build_phi(ModelId::hurwitz(), 0, 10).shifted(1, Scalar::one());
    auto [coeffs, residual] = basis_reduce(f, basis, 9);
    REQUIRE(coeffs[1] == Scalar::one());
    REQUIRE_FALSE(residual.vanishes_on_window());
    Scalar expect = (Scalar::q_pow(1) - Scalar::from_int(2) + Scalar::q_pow(-1)) *
                    Scalar::from_rat(Rat(1, 2));
    REQUIRE(residual.coeff(-1) == expect);
    for (auto& [e, v] : residual.coeffs()) {
        INFO("exponent " << e);
        REQUIRE(v.eval(1, 0) == 0);
    }
}

TEST_CASE("powers of the pair preserve the subspace") {
    for (ModelId m : {ModelId::hurwitz(), ModelId::mv(1), ModelId::coni(0), ModelId::conii(1)}) {
        CheckReport rep = check_w_constraints(m, 2, 2, 2, 14);
        INFO(m.to_string());
        REQUIRE(rep.pass);
        REQUIRE(rep.params.at("k_max") == 2);
        REQUIRE(rep.params.count("sum_cap") == 0);
    }
    CheckReport capped = check_w_constraints(ModelId::mv(2), 3, 3, 1, 12, 3);
    REQUIRE(capped.pass);
    REQUIRE(capped.params.at("sum_cap") == 3);
}
