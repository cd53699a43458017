#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "ramseylab/forcing.hpp"

using namespace ramseylab;

namespace {

Condition mutate(std::mt19937_64& rng, Condition q) {
    const Nat n = q.length();
    if (n < 2) return q;
    if (rng() % 2) {
        const Nat y = 1 + static_cast<Nat>(rng() % (n - 1));
        const Nat x = static_cast<Nat>(rng() % y);
        q.set_sigma(x, y, 1 - q.sigma(x, y));
    } else {
        const Nat x = static_cast<Nat>(rng() % n);
        if (rng() % 3 == 0) {
            q.clear_limit(x);
        } else {
            q.set_limit(x, Limit{static_cast<Color>(rng() % 2), static_cast<Nat>(rng() % (n + 1))});
        }
    }
    return q;
}

}  // namespace

TEST_CASE("validation agrees with the definition") {
    std::mt19937_64 rng(1);
    int invalid = 0;
    for (int t = 0; t < 1000; ++t) {
        const Nat n = static_cast<Nat>(rng() % 7);
        Condition q = oracle::random_condition(rng, n);
        REQUIRE(validate_condition(q).ok());
        for (int k = 0; k < 3; ++k) q = mutate(rng, q);
        CHECK(validate_condition(q).ok() == oracle::valid(q));
        invalid += !oracle::valid(q);
    }
    CHECK(invalid > 100);
}

TEST_CASE("violations and missing limits are reported") {
    Condition q(4);
    q.set_limit(0, Limit{1, 2});
    q.set_sigma(0, 3, 1);
    const ConditionReport r = validate_condition(q);
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations.front() == Pair{0, 2});
    CHECK(r.missing_limits == std::vector<Nat>{1, 2, 3});
    CHECK(validate_condition(q, LimitMode::kPartial).missing_limits.empty());
}

TEST_CASE("extension agrees with the definition") {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 1000; ++t) {
        const Nat n = static_cast<Nat>(rng() % 5);
        const Condition p = oracle::random_condition(rng, n);
        const Condition q = oracle::random_extension(rng, p, n + static_cast<Nat>(rng() % 3));
        CHECK(extends(q, p));
        CHECK(oracle::prolongs(q, p));
        const Condition r = oracle::random_condition(rng, static_cast<Nat>(rng() % 6));
        CHECK(prolongs(r, p) == oracle::prolongs(r, p));
        CHECK(extends(r, p) == oracle::prolongs(r, p));
        // Transitivity along a chain.
        const Condition s = oracle::random_extension(rng, q, q.length() + 1);
        CHECK(extends(s, p));
    }
    Condition bad(2);
    bad.set_limit(0, Limit{1, 0});
    CHECK_THROWS_AS((void)extends(bad, Condition{}), Error);
}

TEST_CASE("restriction") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 200; ++t) {
        const Condition q = oracle::random_condition(rng, 6);
        for (Nat m = 0; m <= 6; ++m) {
            const Condition r = q.restrict(m);
            CHECK(r.length() == m);
            CHECK(oracle::prolongs(q, r));
        }
    }
}

TEST_CASE("press check") {
    Condition q(3);
    q.set_limit(0, Limit{0, 1});
    q.set_limit(1, Limit{0, 2});
    q.set_limit(2, Limit{0, 3});
    CHECK_FALSE(press_check(q, ButtonTriple{0, 0, 1}));
    q.set_limit(1, Limit{1, 2});
    CHECK(press_check(q, ButtonTriple{0, 0, 1}));
    CHECK_FALSE(press_check(Condition(1), ButtonTriple{0, 0, 1}));
}

TEST_CASE("pressing agrees with exhaustive search") {
    std::mt19937_64 rng(4);
    int pressed = 0;
    int blocked = 0;
    for (int t = 0; t < 1000; ++t) {
        const Nat n = static_cast<Nat>(rng() % 5);
        const Condition q = oracle::random_condition(rng, n);
        const Nat b = 1 + static_cast<Nat>(rng() % 5);
        const ButtonTriple tr{0, static_cast<Nat>(rng() % b), b};
        const Nat target = std::max<Nat>(n, b + 1 + static_cast<Nat>(rng() % 2));
        if (target > 6) continue;
        const bool possible = oracle::press_possible(q, tr, target);
        try {
            const Condition r = extend_pressing(q, tr, target);
            CHECK(possible);
            CHECK(r.length() == target);
            CHECK(oracle::valid(r));
            CHECK(oracle::prolongs(r, q));
            CHECK(press_check(r, tr));
            ++pressed;
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::kPressBlocked);
            CHECK_FALSE(possible);
            ++blocked;
        }
    }
    CHECK(pressed > 100);
    CHECK(blocked > 10);
    CHECK_THROWS_AS(extend_pressing(Condition(2), ButtonTriple{0, 0, 3}, 3), Error);
    CHECK_THROWS_AS(extend_pressing(oracle::random_condition(rng, 5), ButtonTriple{0, 0, 1}, 4), Error);
}

TEST_CASE("assembling a chain") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 100; ++t) {
        std::vector<Condition> chain{oracle::random_condition(rng, 1)};
        for (int k = 0; k < 4; ++k) {
            chain.push_back(oracle::random_extension(rng, chain.back(), chain.back().length() + 1));
        }
        CHECK(assemble_coloring(chain) == chain.back().data());
        std::swap(chain[1], chain[3]);
        try {
            assemble_coloring(chain);
            FAIL("expected failure");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::kNotAChain);
        }
    }
    CHECK_THROWS_AS(assemble_coloring({}), Error);
}

TEST_CASE("least consistent point") {
    std::mt19937_64 rng(6);
    for (int t = 0; t < 500; ++t) {
        Condition q(7);
        for (Nat y = 1; y < 7; ++y) {
            for (Nat x = 0; x < y; ++x) q.set_sigma(x, y, static_cast<Color>(rng() % 2));
        }
        const Nat x = static_cast<Nat>(rng() % 7);
        const Color c = static_cast<Color>(rng() % 2);
        Nat want = 0;
        for (Nat z = 0;; ++z) {
            bool ok = true;
            for (Nat y = std::max(z, x + 1); y < 7; ++y) ok = ok && q.sigma(x, y) == c;
            if (ok) {
                want = z;
                break;
            }
        }
        CHECK(least_consistent_point(q, x, c) == want);
    }
}
