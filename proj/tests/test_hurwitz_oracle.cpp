#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>

#include "qks/hurwitz_oracle.hpp"

using namespace qks;

namespace {

// Reference count by plain nested enumeration, written independently of the
// header's search so the two can disagree.
long long brute_count(const Partition& mu, int b) {
    const int d = weight(mu);
    Perm target = cycle_type_rep(mu);
    auto ts = detail::transpositions(d);
    Perm id(d);
    std::iota(id.begin(), id.end(), 0);
    std::vector<Perm> partial = {id};
    for (int step = 0; step < b; ++step) {
        std::vector<Perm> next;
        next.reserve(partial.size() * ts.size());
        for (const Perm& p : partial)
            for (const Perm& t : ts) next.push_back(perm_compose(t, p));
        partial = std::move(next);
    }
    long long n = 0;
    for (const Perm& p : partial) n += p == target;
    return n;
}

} // namespace

TEST_CASE("transposition factorization counts") {
    SECTION("smallest cases") {
        REQUIRE(count_factorizations({2}, 1) == 1);
        REQUIRE(count_factorizations({1, 1}, 1) == 0);
        REQUIRE(count_factorizations({1}, 0) == 1);
        REQUIRE(count_factorizations({1}, 1) == 0);
        REQUIRE(count_factorizations({1, 1}, 0) == 1);
        REQUIRE(count_factorizations({2}, 0) == 0);
    }

    SECTION("three-cycle from two transpositions, enumerated from scratch") {
        REQUIRE(count_factorizations({3}, 2) == brute_count({3}, 2));
        REQUIRE(brute_count({3}, 2) > 0);
    }

    SECTION("meet-in-the-middle agrees with direct enumeration") {
        for (const Partition& mu : {Partition{3}, Partition{2, 1}, Partition{1, 1, 1}})
            for (int b : {6, 7}) REQUIRE(count_factorizations(mu, b) == brute_count(mu, b));
        REQUIRE(count_factorizations({2, 2}, 6) == brute_count({2, 2}, 6));
    }

    SECTION("counts vanish off parity") {
        for (int d = 1; d <= 4; ++d)
            for (const Partition& mu : partitions_of(d))
                for (int b = 0; b <= 4; ++b)
                    if ((b - (d - static_cast<int>(mu.size()))) % 2 != 0)
                        REQUIRE(count_factorizations(mu, b) == 0);
    }

    SECTION("count is a class function") {
        std::mt19937 rng(20240817);
        for (int d = 2; d <= 4; ++d)
            for (const Partition& mu : partitions_of(d)) {
                Perm canon = cycle_type_rep(mu);
                for (int rep = 0; rep < 3; ++rep) {
                    Perm g(d);
                    std::iota(g.begin(), g.end(), 0);
                    std::shuffle(g.begin(), g.end(), rng);
                    Perm conj = perm_compose(perm_compose(g, canon), perm_inverse(g));
                    for (int b = 1; b <= 3; ++b)
                        REQUIRE(count_factorizations(mu, b, conj) ==
                                count_factorizations(mu, b));
                }
            }
    }

    SECTION("out-of-range queries are rejected") {
        REQUIRE_THROWS_AS(count_factorizations({4, 3}, 1), std::invalid_argument);
        REQUIRE_THROWS_AS(count_factorizations({2}, 9), std::invalid_argument);
        REQUIRE_THROWS_AS(count_factorizations({}, 0), std::invalid_argument);
    }
}

TEST_CASE("tau coefficients against the group enumeration") {
    SECTION("normalized rows") {
        auto rows = oracle_table(2, 3);
        for (const OracleRow& row : rows) {
            INFO(partition_str(row.mu) << " b=" << row.b);
            REQUIRE(row.match);
            if (row.mu == Partition{2} && row.b == 1) REQUIRE(row.tau_coeff == Rat(1, 2));
            if (row.mu == Partition{1, 1} && row.b == 0) REQUIRE(row.tau_coeff == Rat(1, 2));
        }
    }

    SECTION("sweep passes") {
        CheckReport rep = check_tau_vs_oracle(3, 4);
        REQUIRE(rep.check == "tau_vs_oracle");
        REQUIRE(rep.pass);
        REQUIRE(rep.residual.empty());
        REQUIRE(rep.params.at("d_max") == 3);
        REQUIRE(rep.params.at("b_max") == 4);
    }
}
