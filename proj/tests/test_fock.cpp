#include <catch2/catch_amalgamated.hpp>

#include "qks/fock.hpp"

using namespace qks;

namespace {

FockVec st(Partition lam) { return FockVec::state(std::move(lam)); }

std::vector<Partition> states_to_grade(int d_max) {
    std::vector<Partition> out;
    for (int d = 0; d <= d_max; ++d)
        for (auto& lam : partitions_of(d)) out.push_back(lam);
    return out;
}

} // namespace

TEST_CASE("hat action on wedge states") {
    SECTION("creation and annihilation by powers of z") {
        REQUIRE(hat_apply(-1, 0, FockVec::vacuum(), 4) == st({1}));
        REQUIRE(hat_apply(1, 0, st({1}), 4) == FockVec::vacuum());
        REQUIRE(hat_apply(2, 0, st({1}), 4).is_zero());
        REQUIRE(hat_apply(-1, 0, st({1}), 4) == st({2}) + st({1, 1}));
    }

    SECTION("diagonal operators are regularized to kill the vacuum") {
        REQUIRE(hat_apply(0, 0, FockVec::vacuum(), 4).is_zero());
        REQUIRE(hat_apply(1, 1, FockVec::vacuum(), 4).is_zero());
        REQUIRE(hat_apply(2, 2, FockVec::vacuum(), 4).is_zero());
    }

    SECTION("euler operator has eigenvalue minus the weight") {
        for (const Partition& lam : states_to_grade(5))
            REQUIRE(hat_apply(1, 1, st(lam), 6) == st(lam).scaled(Scalar::from_int(-weight(lam))));
    }

    SECTION("grade moves by derivative order minus z power") {
        for (const Partition& lam : states_to_grade(4)) {
            for (auto [l, m] : {std::pair{-2, 1}, {3, 0}, {-1, 2}}) {
                FockVec w = hat_apply(l, m, st(lam), 20);
                for (auto& [nu, c] : w.terms()) REQUIRE(weight(nu) == weight(lam) + m - l);
            }
        }
    }

    SECTION("oscillator commutators via hats") {
        for (const Partition& lam : states_to_grade(5)) {
            FockVec v = st(lam);
            const int D = weight(lam) + 9;
            for (int m = 1; m <= 4; ++m) {
                FockVec ab = hat_apply(m, 0, hat_apply(-m, 0, v, D), D);
                FockVec ba = hat_apply(-m, 0, hat_apply(m, 0, v, D), D);
                REQUIRE(ab - ba == v.scaled(Scalar::from_int(m)));
            }
        }
    }
}

TEST_CASE("fock vectors") {
    FockVec v = st({2}).scaled(Scalar::q_pow(1)) - st({1, 1});
    REQUIRE(v.coeff({2}) == Scalar::q_pow(1));
    REQUIRE(v.coeff({3}).is_zero());
    REQUIRE((v - v).is_zero());
    REQUIRE(v + v == v.scaled(Scalar::from_int(2)));
    REQUIRE(FockVec::state({1}, Scalar::zero()).is_zero());
}

TEST_CASE("fermionic dictionary operators") {
    SECTION("L(0) and K0 are diagonal with the expected eigenvalues") {
        for (const Partition& lam : states_to_grade(6)) {
            REQUIRE(ferm_apply({FermOp::L, 0}, st(lam), 7) ==
                    st(lam).scaled(Scalar::from_int(weight(lam))));
            REQUIRE(ferm_apply({FermOp::K0, 0}, st(lam), 7) ==
                    st(lam).scaled(Scalar::from_rat(Rat(kappa(lam), 2))));
        }
    }

    SECTION("lowering L produces the two-row combination") {
        REQUIRE(ferm_apply({FermOp::L, -1}, st({1}), 4) == st({2}) - st({1, 1}));
        REQUIRE(ferm_apply({FermOp::L, 1}, st({2}), 4) == st({1}));
    }

    SECTION("names") {
        REQUIRE(FermOp{FermOp::alpha, -3}.to_string() == "alpha(-3)");
        REQUIRE(FermOp{FermOp::K, 2}.to_string() == "K(2)");
        REQUIRE(FermOp{FermOp::K0, 0}.to_string() == "K0");
    }
}

TEST_CASE("boson-fermion correspondence") {
    REQUIRE(bf_correspond(FockVec::vacuum(), 3) == PPoly::one());
    REQUIRE(bf_correspond(st({1}), 3) == PPoly::monomial({1}, Scalar::one()));
    for (const Partition& lam : states_to_grade(5))
        REQUIRE(bf_correspond(st(lam), 5) == schur_poly(lam));
}

TEST_CASE("hat dictionary matches the bosonic operators") {
    std::vector<FermOp> ops = {{FermOp::alpha, -2}, {FermOp::alpha, 2},  {FermOp::alpha, -1},
                               {FermOp::L, 0},      {FermOp::L, 1},      {FermOp::L, -1},
                               {FermOp::K0, 0},     {FermOp::K, 1},      {FermOp::K, -1}};
    for (const FermOp& op : ops) {
        const int d = (op.kind == FermOp::K || op.kind == FermOp::K0) ? 4 : 5;
        CheckReport rep = cross_check_operator(op, d);
        INFO(rep.check);
        REQUIRE(rep.pass);
        REQUIRE(rep.residual.empty());
        REQUIRE(rep.params.at("d_max") == d);
    }
}
