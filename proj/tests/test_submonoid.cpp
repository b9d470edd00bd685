#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "contspec/submonoid.hpp"

using namespace contspec;

namespace {

std::vector<long long> range_inclusive(long long lo, long long hi) {
    std::vector<long long> out;
    for (long long v = lo; v <= hi; ++v)
        out.push_back(v);
    return out;
}

} // namespace

TEST_CASE("closure oracle on reference generator sets") {
    CHECK(closure_oracle({3, 5}, 12) ==
          std::vector<long long>{0, 3, 5, 6, 8, 9, 10, 11, 12});
    CHECK(closure_oracle({}, 5) == std::vector<long long>{0});
    // both signs present: Bezout steps reach every integer in range
    CHECK(closure_oracle({3, -5}, 10) == range_inclusive(-10, 10));
    CHECK_THROWS_AS(closure_oracle({3}, 0), input_error);
}

TEST_CASE("canonical forms") {
    const auto s35 = canonicalize({3, 5});
    CHECK(s35.kind() == SubmonoidKind::Positive);
    CHECK(s35.d() == 1);
    CHECK(s35.gaps() == std::vector<long long>{1, 2, 4, 7});
    CHECK(s35.conductor() == 8);

    const auto even = canonicalize({2, -2});
    CHECK(even.kind() == SubmonoidKind::Group);
    CHECK(even.d() == 2);
    CHECK(even.window(20) == closure_oracle({2, -2}, 20));

    CHECK(canonicalize({0}).kind() == SubmonoidKind::Zero);
    CHECK(canonicalize({}).kind() == SubmonoidKind::Zero);
    CHECK(canonicalize({0, 3, 3, 5, 0}) == canonicalize({3, 5}));

    const auto neg3 = canonicalize({-3});
    CHECK(neg3.kind() == SubmonoidKind::Negative);
    CHECK(neg3.d() == 3);
    CHECK(neg3.gaps().empty());
    CHECK(neg3.conductor() == 1);

    const auto scaled = canonicalize({6, 9});
    CHECK(scaled.kind() == SubmonoidKind::Positive);
    CHECK(scaled.d() == 3);
    CHECK(scaled.gaps() == std::vector<long long>{1});
    CHECK(scaled.conductor() == 2);
}

TEST_CASE("membership") {
    const auto s35 = canonicalize({3, 5});
    CHECK_FALSE(s35.contains(7));
    CHECK(s35.contains(9));
    CHECK(s35.contains(0));
    CHECK_FALSE(s35.contains(-3));
    CHECK(CanonicalSubmonoid::zero().contains(0));
    CHECK_FALSE(CanonicalSubmonoid::zero().contains(1));
    const auto neg3 = canonicalize({-3});
    CHECK(neg3.contains(-6));
    CHECK_FALSE(neg3.contains(3));
    CHECK_FALSE(neg3.contains(-4));
}

TEST_CASE("window") {
    CHECK(canonicalize({3, 5}).window(6) == std::vector<long long>{0, 3, 5, 6});
    CHECK(CanonicalSubmonoid::group(2).window(3) == std::vector<long long>{-2, 0, 2});
    CHECK(canonicalize({2}).window(5) == std::vector<long long>{0, 2, 4});
    CHECK_THROWS_AS(canonicalize({2}).window(0), input_error);
}

TEST_CASE("negation closure") {
    CHECK(CanonicalSubmonoid::group(2).negation_closed());
    CHECK(CanonicalSubmonoid::zero().negation_closed());
    CHECK_FALSE(canonicalize({3, 5}).negation_closed());
    CHECK_FALSE(canonicalize({-3}).negation_closed());
}

TEST_CASE("gap computation for generators without a coprime pair") {
    // pairwise gcds 2, 3, 5 but overall gcd 1
    const auto s = canonicalize({6, 10, 15});
    CHECK(s.d() == 1);
    CHECK(s.window(40) == closure_oracle({6, 10, 15}, 40));
    CHECK_FALSE(s.contains(29));
    CHECK(s.contains(30));
}

TEST_CASE("random generator sets: canonical window equals closure oracle") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> value(-9, 9);
    std::uniform_int_distribution<int> count(0, 4);
    std::uniform_int_distribution<long long> bound(1, 50);
    for (int trial = 0; trial < 300; ++trial) {
        GeneratorSet gens;
        const int k = count(rng);
        for (int i = 0; i < k; ++i)
            gens.push_back(value(rng));
        const long long b = bound(rng);
        const auto canon = canonicalize(gens);
        CAPTURE(trial);
        CHECK(canon.window(b) == closure_oracle(gens, b));
    }
}

TEST_CASE("random generator sets: membership is addition-closed and contains zero") {
    std::mt19937 rng(987654);
    std::uniform_int_distribution<int> value(-9, 9);
    std::uniform_int_distribution<int> count(1, 4);
    for (int trial = 0; trial < 100; ++trial) {
        GeneratorSet gens;
        const int k = count(rng);
        for (int i = 0; i < k; ++i)
            gens.push_back(value(rng));
        const auto canon = canonicalize(gens);
        CHECK(canon.contains(0));
        for (long long a = -25; a <= 25; ++a) {
            if (!canon.contains(a))
                continue;
            for (long long b = a; b <= 25; ++b) {
                if (canon.contains(b))
                    CHECK(canon.contains(a + b));
            }
        }
    }
}

TEST_CASE("canonicalization is idempotent under regeneration") {
    std::mt19937 rng(55555);
    std::uniform_int_distribution<int> value(-9, 9);
    std::uniform_int_distribution<int> count(0, 4);
    for (int trial = 0; trial < 100; ++trial) {
        GeneratorSet gens;
        const int k = count(rng);
        for (int i = 0; i < k; ++i)
            gens.push_back(value(rng));
        const auto canon = canonicalize(gens);
        long long reach = 1;
        for (long long g : gens)
            reach += std::llabs(g);
        CHECK(canonicalize(canon.window(reach)) == canon);
    }
}
