#include <doctest.h>

#include <layercast/combinat.hpp>

using layercast::BigInt;
using layercast::binom;
using layercast::ksubsets;
using layercast::pascal_check;
using layercast::SubsetId;
using layercast::subset_rank;

TEST_CASE("binomial basics") {
    CHECK(binom(4, 2) == BigInt(6));
    CHECK(binom(0, 0) == BigInt(1));
    for (int n = 0; n <= 20; ++n) CHECK(binom(n, 0) == BigInt(1));
    CHECK(binom(1, 2) == BigInt(0));  // k > n convention carries vanishing terms
    CHECK(binom(5, -1) == BigInt(0));
    CHECK_THROWS_AS(binom(-1, 0), layercast::Error);
}

TEST_CASE("binomial symmetry up to n = 64") {
    for (int n = 0; n <= 64; ++n)
        for (int k = 0; k <= n; ++k) CHECK(binom(n, k) == binom(n, n - k));
}

TEST_CASE("values past 64-bit range stay exact") {
    CHECK(binom(64, 32).to_string() == "1832624140942590534");
    CHECK(binom(128, 64).to_string() == "23951146041928082866135587776380551750");
}

TEST_CASE("pascal identity") {
    CHECK(pascal_check(5, 2));
    CHECK(pascal_check(10, 10));  // boundary: C(9,10) = 0
    CHECK(pascal_check(64, 32));
    for (int n = 1; n <= 40; ++n)
        for (int k = 1; k <= n; ++k) CHECK(pascal_check(n, k));
    CHECK_THROWS_AS(pascal_check(3, 0), layercast::Error);
    CHECK_THROWS_AS(pascal_check(3, 4), layercast::Error);
}

TEST_CASE("ksubsets enumeration order") {
    auto s32 = ksubsets(3, 2);
    REQUIRE(s32.size() == 3);
    CHECK(s32[0].members == std::vector<int>{1, 2});
    CHECK(s32[1].members == std::vector<int>{1, 3});
    CHECK(s32[2].members == std::vector<int>{2, 3});

    auto s41 = ksubsets(4, 1);
    REQUIRE(s41.size() == 4);
    for (int i = 0; i < 4; ++i) CHECK(s41[static_cast<std::size_t>(i)].members == std::vector<int>{i + 1});

    auto s42 = ksubsets(4, 2);
    REQUIRE(s42.size() == 6);
    CHECK(s42.front().members == std::vector<int>{1, 2});
    CHECK(s42.back().members == std::vector<int>{3, 4});

    CHECK(ksubsets(3, 0).size() == 1);
    CHECK(ksubsets(3, 0)[0].empty());
    CHECK(ksubsets(3, 3).size() == 1);
    CHECK_THROWS_AS(ksubsets(3, 4), layercast::Error);
    CHECK_THROWS_AS(ksubsets(3, -1), layercast::Error);
}

TEST_CASE("enumeration is sorted lexicographically and complete") {
    for (int K = 1; K <= 8; ++K) {
        for (int t = 0; t <= K; ++t) {
            auto subs = ksubsets(K, t);
            CHECK(BigInt(static_cast<long long>(subs.size())) == binom(K, t));
            CHECK(std::is_sorted(subs.begin(), subs.end()));
            for (std::size_t i = 0; i < subs.size(); ++i)
                CHECK(subset_rank(subs[i], K) == i);
        }
    }
}

TEST_CASE("subset id validation and helpers") {
    CHECK_THROWS_AS(SubsetId::checked({2, 1}, 4), layercast::Error);
    CHECK_THROWS_AS(SubsetId::checked({1, 1}, 4), layercast::Error);
    CHECK_THROWS_AS(SubsetId::checked({0}, 4), layercast::Error);
    CHECK_THROWS_AS(SubsetId::checked({5}, 4), layercast::Error);
    SubsetId s = SubsetId::checked({1, 3, 4}, 4);
    CHECK(s.min_member() == 1);
    CHECK(s.contains(3));
    CHECK(!s.contains(2));
    CHECK(s.without(3).members == std::vector<int>{1, 4});
    CHECK(s.without(3).with(3) == s);
    CHECK(s.to_string() == "{1,3,4}");
}
