#include <doctest.h>

#include <random>

#include "frob/apery.hpp"
#include "frob/closed_forms.hpp"
#include "test_helpers.hpp"

using namespace frob;
using frob::testing::random_instance;

TEST_CASE("apery set examples") {
    AperySet S = apery_set(Instance({3, 4, 5}), 0);
    CHECK(S.elements() == std::vector<ZZ>{ZZ(0), ZZ(4), ZZ(5)});

    AperySet T = apery_set(Instance({11, 15, 19}), 5);
    CHECK(T.max_element() == 190);

    std::mt19937_64 rng(31);
    for (int it = 0; it < 6; ++it) {
        Instance A = random_instance(rng, 2 + it % 3, 2, 25);
        CHECK(apery_set(A, 0).elements()[0] == 0);
    }
}

TEST_CASE("apery set invariants on random instances") {
    std::mt19937_64 rng(77);
    for (int it = 0; it < 25; ++it) {
        Instance A = random_instance(rng, 2 + it % 3, 2, 22);
        std::uint64_t p = static_cast<std::uint64_t>(it % 6);
        DenumerantTable t(A);
        AperySet S = apery_set(t, p);
        const std::uint64_t a1 = A.least();
        REQUIRE(S.elements().size() == a1);
        for (std::uint64_t i = 0; i < a1; ++i) {
            const ZZ& m = S.elements()[i];
            CHECK(m % a1 == i);
            CHECK(t.count(m.get_ui()) > p);           // membership
            if (m >= a1)                              // minimality
                CHECK(t.count(m.get_ui() - a1) <= p);
        }
    }
}

TEST_CASE("apery evaluators reproduce the worked instances") {
    AperySet S = apery_set(Instance({11, 15, 19}), 5);
    CHECK(gp_from_apery(S) == 179);
    CHECK(np_from_apery(S) == 165);
    CHECK(sp_from_apery(S) == 13605);
    CHECK(power_sum(S, 3) == 189158535);
    CHECK(weighted_power_sum(S, 2, 3) ==
          ZZ("46691295420476497563538523364517263"
             "55433630648909109181546522"));

    AperySet T = apery_set(Instance({6, 11, 16}), 3);
    CHECK(gp_from_apery(T) == 85);
    CHECK(np_from_apery(T) == 73);
    CHECK(sp_from_apery(T) == 2675);
    CHECK(power_sum(T, 3) == 7652009);
    CHECK(weighted_power_sum(T, 2, 3) ==
          ZZ("24083450837052351738334815453210"));

    AperySet U = apery_set(Instance({2, 3}), 0);
    CHECK(U.elements() == std::vector<ZZ>{ZZ(0), ZZ(3)});
    CHECK(gp_from_apery(U) == 1);
    CHECK(np_from_apery(U) == 1);
    CHECK(sp_from_apery(U) == 1);
    CHECK(weighted_power_sum(U, -2, 1) == -2);
}

TEST_CASE("apery evaluators agree with the oracle") {
    std::mt19937_64 rng(2024);
    for (int it = 0; it < 50; ++it) {
        Instance A = random_instance(rng, 2 + it % 3, 2, 24);
        std::uint64_t p = static_cast<std::uint64_t>(it % 8);
        DenumerantTable t(A);
        AperySet S = apery_set(t, p);
        CHECK(gp_from_apery(S) == oracle_gp(t, p));
        CHECK(np_from_apery(S) == oracle_np(t, p));
        CHECK(sp_from_apery(S) == oracle_sp(t, p));
    }
}

TEST_CASE("power sums agree with the oracle") {
    std::mt19937_64 rng(4096);
    for (int it = 0; it < 20; ++it) {
        Instance A = random_instance(rng, 2 + it % 3, 2, 16);
        std::uint64_t p = static_cast<std::uint64_t>(it % 5);
        unsigned mu = 1 + it % 4;
        DenumerantTable t(A);
        AperySet S = apery_set(t, p);
        CHECK(power_sum(S, mu) == oracle_power_sum(t, p, mu));
    }
}

TEST_CASE("power sum at mu=1 reduces to the plain sum") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 12; ++it) {
        Instance A = random_instance(rng, 2 + it % 3, 2, 20);
        AperySet S = apery_set(A, static_cast<std::uint64_t>(it % 4));
        CHECK(power_sum(S, 1) == sp_from_apery(S));
        CHECK(power_sum(S, 0) == np_from_apery(S));  // mu=0 routes to count
    }
}

TEST_CASE("weighted power sums agree with the oracle") {
    std::mt19937_64 rng(8192);
    const long lambdas[] = {-2, 2, 3};
    for (int it = 0; it < 20; ++it) {
        Instance A = random_instance(rng, 2 + it % 3, 2, 14);
        std::uint64_t p = static_cast<std::uint64_t>(it % 4);
        unsigned mu = 1 + it % 3;
        long lambda = lambdas[it % 3];
        DenumerantTable t(A);
        AperySet S = apery_set(t, p);
        CHECK(weighted_power_sum(S, lambda, mu) ==
              oracle_weighted_sum(t, p, lambda, mu));
    }
}

TEST_CASE("weighted sum with lambda=-1 needs odd least generator") {
    AperySet S = apery_set(Instance({3, 4, 5}), 1);
    DenumerantTable t(Instance({3, 4, 5}));
    CHECK(weighted_power_sum(S, -1, 2) == oracle_weighted_sum(t, 1, -1, 2));

    AperySet T = apery_set(Instance({4, 6, 9}), 1);
    CHECK_THROWS_AS(weighted_power_sum(T, -1, 2), InvalidWeightError);
    CHECK_THROWS_AS(weighted_power_sum(T, 0, 2), InvalidWeightError);
    CHECK_THROWS_AS(weighted_power_sum(T, 1, 2), InvalidWeightError);
}

TEST_CASE("elements never shrink as the level grows") {
    std::mt19937_64 rng(616);
    // any three-generator instance: nondecreasing per residue class
    for (int it = 0; it < 12; ++it) {
        Instance A = random_instance(rng, 3, 2, 20);
        DenumerantTable t(A);
        AperySet prev = apery_set(t, 0);
        for (std::uint64_t p = 1; p <= 5; ++p) {
            AperySet cur = apery_set(t, p);
            for (std::size_t i = 0; i < A.least(); ++i)
                CHECK(prev.elements()[i] <= cur.elements()[i]);
            prev = cur;
        }
    }
    // arithmetic triples move strictly at every level the closed form covers
    for (std::uint64_t a = 3; a <= 11; ++a)
        for (std::uint64_t d : {1, 2, 3}) {
            if (std::gcd(a, d) != 1) continue;
            ArithTriple T(a, d);
            DenumerantTable t(T.instance());
            AperySet prev = apery_set(t, 0);
            for (std::uint64_t p = 1; p <= T.max_level(); ++p) {
                AperySet cur = apery_set(t, p);
                for (std::size_t i = 0; i < a; ++i)
                    CHECK(prev.elements()[i] < cur.elements()[i]);
                prev = cur;
            }
        }
}

TEST_CASE("malformed apery sets are rejected") {
    Instance A({3, 4, 5});
    CHECK_THROWS_AS(AperySet(A, 0, {ZZ(0), ZZ(4)}),
                    InternalInconsistencyError);
    CHECK_THROWS_AS(AperySet(A, 0, {ZZ(0), ZZ(5), ZZ(4)}),
                    InternalInconsistencyError);
    CHECK_THROWS_AS(AperySet(A, 1, {ZZ(0), ZZ(4), ZZ(5)}),
                    InternalInconsistencyError);
}
