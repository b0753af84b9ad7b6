#include <catch2/catch_amalgamated.hpp>

#include "qks/scalar.hpp"
#include "tests/gen.hpp"

using namespace qks;

namespace {
const Scalar kOne = Scalar::one();
const Scalar kQ = Scalar::q_pow(1);
const Scalar kT = Scalar::t_pow(1);
} // namespace

TEST_CASE("scalar basic identities") {
    CHECK(Scalar::q_half_pow(1) * Scalar::q_half_pow(1) == kQ);
    CHECK((kOne - kQ * kQ) / (kOne - kQ) == kOne + kQ);

    Scalar inv = kOne / (kOne - kQ);
    CHECK(inv + inv == Scalar::from_int(2) / (kOne - kQ));
    CHECK((inv + inv).to_string() == "2/(1 - q)");

    CHECK(kQ * kQ.pow(-1) == kOne);
    CHECK(Scalar::q_half_pow(-3).to_string() == "q^(-3/2)");
}

TEST_CASE("scalar canonical form is construction independent") {
    Scalar a = (kOne - kQ.pow(2)) / (kOne - kQ);
    Scalar b = kOne + kQ;
    CHECK(a.to_string() == b.to_string());

    // numerator divisible by a denominator factor cancels on contact
    Scalar c = Scalar::q_int(3) * Scalar::inv_q_int(3);
    CHECK(c == kOne);
    CHECK(c.to_string() == "1");

    // zero clears every component
    Scalar z = (kQ - kQ) * Scalar::inv_q_int(2) * Scalar::one_minus_tq(1);
    CHECK(z.is_zero());
    CHECK(z.to_string() == "0");
}

TEST_CASE("q-factorial styles agree") {
    CHECK(q_bracket(3) == Scalar::q_pow(-1) * (kOne + kQ + kQ.pow(2)));
    CHECK(q_factorial(2) ==
          (Scalar::q_half_pow(1) - Scalar::q_half_pow(-1)) * (kQ - kQ.pow(-1)));
    for (int n = 0; n <= 10; ++n) {
        Scalar lhs = q_factorial(n);
        Scalar sign = n % 2 ? -kOne : kOne;
        Scalar rhs = sign * Scalar::q_half_pow(-n * (n + 1) / 2) * q_pochhammer(n);
        CHECK(lhs == rhs);
    }
    CHECK(a_pochhammer(kT, 3) ==
          Scalar::one_minus_tq(0) * Scalar::one_minus_tq(1) * Scalar::one_minus_tq(2));
}

TEST_CASE("scalar field axioms") {
    testgen::Rng rng(20260816);
    for (int trial = 0; trial < 40; ++trial) {
        Scalar a = testgen::gen_scalar(rng);
        Scalar b = testgen::gen_scalar(rng);
        Scalar c = testgen::gen_scalar(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        CHECK(a * kOne == a);
    }
    for (int trial = 0; trial < 25; ++trial) {
        Scalar u = testgen::gen_unit(rng);
        REQUIRE(!u.is_zero());
        CHECK(u * (kOne / u) == kOne);
    }
}

TEST_CASE("substitution commutes with arithmetic") {
    testgen::Rng rng(7);
    const Rat qv(2, 3), tv(5, 7);
    for (int trial = 0; trial < 25; ++trial) {
        Scalar a = testgen::gen_scalar(rng);
        Scalar b = testgen::gen_scalar(rng);
        CHECK((a + b).eval(qv, tv) == a.eval(qv, tv) + b.eval(qv, tv));
        CHECK((a * b).eval(qv, tv) == a.eval(qv, tv) * b.eval(qv, tv));
        Scalar u = testgen::gen_unit(rng);
        CHECK((a / u).eval(qv, tv) == a.eval(qv, tv) / u.eval(qv, tv));
    }
}

TEST_CASE("scalar text round trip") {
    testgen::Rng rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        Scalar a = testgen::gen_scalar(rng);
        CHECK(Scalar::parse(a.to_string()) == a);
    }
    for (const char* text : {"q^(3/2)", "(1-q^2)", "T", "0", "-5/2*q^-3*T^2",
                             "(1 - T*q^2)*(T - q)/((1-q)^2*(1-q^4))"}) {
        Scalar v = Scalar::parse(text);
        CHECK(Scalar::parse(v.to_string()) == v);
    }
}

TEST_CASE("scalar T substitution") {
    Scalar f = Scalar::one_minus_tq(0) * Scalar::inv_q_int(1);
    CHECK(f.substitute_t(1).is_zero());
    CHECK(f.substitute_t(0) == Scalar::inv_q_int(1));
    Scalar g = Scalar::t_minus_q(2);
    CHECK(g.substitute_t(1) == kOne - kQ.pow(2));
}

TEST_CASE("scalar q-series expansion") {
    QTPoly s = (kOne / (kOne - kQ)).q_series(10);
    QTPoly expect;
    for (int k = 0; k <= 5; ++k) expect = expect + QTPoly::monomial(1, 2 * k);
    CHECK(s == expect);

    QTPoly s2 = (Scalar::one_minus_tq(1) * Scalar::inv_q_int(1)).q_series(4);
    // (1 - Tq)(1 + q + q^2) mod q^{2.5}
    QTPoly e2 = QTPoly::constant(1) + QTPoly::monomial(1, 2) + QTPoly::monomial(1, 4) +
                QTPoly::monomial(-1, 2, 1) + QTPoly::monomial(-1, 4, 1);
    CHECK(s2 == e2);
}

TEST_CASE("scalar error paths") {
    CHECK_THROWS_AS(kOne / Scalar::zero(), std::domain_error);
    CHECK_THROWS_AS(kOne / (kOne + kT), std::domain_error);
    CHECK_THROWS_AS(Scalar::q_half_pow(-1).q_series(4), std::domain_error);
    CHECK_THROWS_AS(Scalar::inv_q_int(1).eval(1, 0), std::domain_error);
    CHECK_THROWS_AS(Scalar::parse("q^"), std::invalid_argument);
    CHECK_THROWS_AS(Scalar::parse("1 + "), std::invalid_argument);
}

TEST_CASE("plain polynomial round trip") {
    Scalar p = kOne + kQ * kT - Scalar::from_rat(Rat(1, 2)) * kQ.pow(3);
    auto poly = p.to_polynomial();
    REQUIRE(poly.has_value());
    CHECK(Scalar::from_poly(*poly) == p);
    CHECK(!Scalar::inv_q_int(1).to_polynomial().has_value());
    CHECK(!Scalar::q_half_pow(-2).to_polynomial().has_value());
}
