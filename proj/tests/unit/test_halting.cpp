#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "ramseylab/halting.hpp"

using namespace ramseylab;

namespace {

CEApproximation random_approximation(std::mt19937_64& rng, Nat domain, std::size_t stages) {
    std::vector<NatSet> s{NatSet{}};
    for (std::size_t i = 1; i < stages; ++i) {
        NatSet next = s.back();
        if (rng() % 2) next.insert(static_cast<Nat>(rng() % domain));
        s.push_back(next);
    }
    return CEApproximation(domain, s);
}

// Least s from which every later stage agrees with the last one below z.
Nat modulus_oracle(const CEApproximation& a, Nat z) {
    const auto& st = a.stages();
    auto cut = [z](const NatSet& x) {
        NatSet out;
        for (Nat v : x) {
            if (v <= z) out.insert(v);
        }
        return out;
    };
    Nat best = static_cast<Nat>(st.size() - 1);
    for (Nat s = static_cast<Nat>(st.size()); s-- > 0;) {
        bool ok = true;
        for (std::size_t t = s; t < st.size(); ++t) ok = ok && cut(st[t]) == cut(st.back());
        if (!ok) break;
        best = s;
    }
    return best;
}

}  // namespace

TEST_CASE("approximation validation") {
    CHECK_THROWS_AS(CEApproximation(3, {}), Error);
    CHECK_THROWS_AS(CEApproximation(3, {NatSet{5}}), Error);
    CHECK_THROWS_AS(CEApproximation(3, {NatSet{1}, NatSet{2}}), Error);
    const CEApproximation a(3, {NatSet{}, NatSet{1}});
    CHECK(a.stage(9) == NatSet{1});
    CHECK_THROWS_AS((void)a.least_modulus(3), Error);
    CHECK(CEApproximation(0, {NatSet{}}).modulus_envelope(4) == 0);
}

TEST_CASE("small worked example") {
    const CEApproximation a(3, {NatSet{}, NatSet{1}, NatSet{1}, NatSet{0, 1}});
    CHECK(a.least_modulus(0) == 3);
    CHECK(a.least_modulus(1) == 3);
    CHECK(a.least_modulus(2) == 3);
    CHECK(a.modulus_envelope(10) == 3);
    const Coloring f = build_coding_coloring(a, 10);
    for (Nat y = 1; y < 10; ++y) {
        for (Nat x = 0; x < y; ++x) CHECK(f.at(x, y) == (y - x <= 3 ? 0 : 1));
    }
    CHECK(f.limit(2) == Limit{1, 6});
    const JoinedSet z = JoinedSet::encode({0, 2}, {5, 9});
    CHECK(decode_membership(a, z, 0));
    CHECK(decode_membership(a, z, 1));
    CHECK_FALSE(decode_membership(a, z, 2));
}

TEST_CASE("modulus matches the definition") {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 300; ++t) {
        const Nat d = 1 + static_cast<Nat>(rng() % 8);
        const CEApproximation a = random_approximation(rng, d, 1 + rng() % 7);
        Nat env = 0;
        for (Nat z = 0; z < d; ++z) {
            CHECK(a.least_modulus(z) == modulus_oracle(a, z));
            env = std::max(env, modulus_oracle(a, z));
            CHECK(a.modulus_envelope(z) == env);
        }
    }
}

TEST_CASE("coding coloring is stable with limit 1") {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 100; ++t) {
        const CEApproximation a = random_approximation(rng, 6, 6);
        const Coloring f = build_coding_coloring(a, 20);
        CHECK(f.violations().empty());
        for (Nat x = 0; x < 20; ++x) {
            const Nat m = a.modulus_envelope(x);
            for (Nat y = x + 1; y < 20; ++y) CHECK(f.at(x, y) == (y - x > m ? 1 : 0));
            if (x + m + 1 + 3 <= 20) {
                const auto l = limit_color(f, x);
                REQUIRE(l.has_value());
                CHECK(l->color == 1);
            }
        }
    }
    CHECK_THROWS_AS(build_coding_coloring(CEApproximation(1, {NatSet{}}), 1), Error);
}

TEST_CASE("decoding any increasing p-homogeneous solution recovers the set") {
    std::mt19937_64 rng(8);
    int checked = 0;
    for (int t = 0; t < 200; ++t) {
        const Nat d = 2 + static_cast<Nat>(rng() % 6);
        const CEApproximation a = random_approximation(rng, d, 2 + rng() % 6);
        const Coloring f = build_coding_coloring(a, 24);
        for (int k = 0; k < 40; ++k) {
            NatSet left, right;
            for (Nat x = 0; x < 24; ++x) {
                if (rng() % 4 == 0) left.insert(x);
                if (rng() % 4 == 0) right.insert(x);
            }
            const JoinedSet z = JoinedSet::encode(left, right);
            const auto v = oracle::p_homogeneous(f, z.codes(), true);
            if (v.outcome != oracle::Outcome::kHolds || v.color != Color{1}) continue;
            for (Nat q = 0; q < d; ++q) {
                const auto x = left.lower_bound(q);
                if (x == left.end() || right.upper_bound(*x) == right.end()) {
                    CHECK_THROWS_AS(decode_membership(a, z, q), Error);
                    continue;
                }
                CHECK(decode_membership(a, z, q) == a.final_set().contains(q));
                ++checked;
            }
        }
    }
    CHECK(checked > 500);
}
