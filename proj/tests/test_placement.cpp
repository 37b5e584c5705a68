#include <doctest.h>

#include <layercast/placement.hpp>

using namespace layercast;

TEST_CASE("subpacketize splits into C(K,t) equal contiguous chunks") {
    SystemConfig cfg = validate_config(4, 1, 4);
    FileStore store = FileStore::random(4, 1024, 1);
    SubfileTable table = subpacketize(store, cfg);
    CHECK(table.subfiles_per_file() == 4);
    CHECK(table.subfile_len() == 256);
    // chunk for tau={2} is the second quarter of the file
    auto c = table.chunk(SubfileIndex{1, SubsetId({2})});
    CHECK(std::equal(c.begin(), c.end(), store.file(1).begin() + 256));
}

TEST_CASE("concatenating chunks in lexicographic order rebuilds the file") {
    SystemConfig cfg = validate_config(5, 2, 5);
    FileStore store = FileStore::random(5, 10 * 40, 2);  // C(5,2) = 10 chunks of 40
    SubfileTable table = subpacketize(store, cfg);
    for (int n = 1; n <= 5; ++n) {
        std::vector<std::uint8_t> rebuilt;
        for_each_ksubset(cfg.K, cfg.t, [&](const std::vector<int>& tau) {
            auto c = table.chunk(SubfileIndex{n, SubsetId(tau)});
            rebuilt.insert(rebuilt.end(), c.begin(), c.end());
        });
        CHECK(rebuilt == store.file(n));
    }
}

TEST_CASE("t = 0 keeps the file whole") {
    SystemConfig cfg = validate_config(3, 0, 3);
    FileStore store = FileStore::random(3, 100, 3);
    SubfileTable table = subpacketize(store, cfg);
    CHECK(table.subfiles_per_file() == 1);
    auto c = table.chunk(SubfileIndex{2, SubsetId(std::vector<int>{})});
    CHECK(std::vector<std::uint8_t>(c.begin(), c.end()) == store.file(2));
}

TEST_CASE("indivisible file length is rejected") {
    SystemConfig cfg = validate_config(4, 1, 4);
    FileStore store = FileStore::random(4, 1001, 4);
    try {
        subpacketize(store, cfg);
        FAIL("expected throw");
    } catch (const Error& e) {
        CHECK(e.code() == errc::indivisible_file_length);
    }
}

TEST_CASE("cache holds exactly the k-in-tau subfiles at gamma*N*F bytes") {
    SystemConfig cfg = validate_config(4, 1, 4);
    FileStore store = FileStore::random(4, 1024, 5);
    SubfileTable table = subpacketize(store, cfg);
    for (int k = 1; k <= 4; ++k) {
        CacheContents z = build_cache(k, cfg, &table);
        CHECK(z.entries.size() == 4);  // N * C(K-1, t-1) = 4 * 1
        CHECK(z.total_bytes() == 1024);  // gamma * N * F = (1/4) * 4 * 1024
        for (const SubfileIndex& idx : z.entries) CHECK(idx.tau.contains(k));
    }
}

TEST_CASE("cache size invariant across shapes") {
    for (int K = 1; K <= 6; ++K) {
        for (int t = 0; t <= K; ++t) {
            SystemConfig cfg = validate_config(K, t, K);
            CacheContents z = build_cache(1, cfg);  // index-only
            BigInt expected = BigInt(cfg.N) * binom(K - 1, t - 1);
            CHECK(BigInt(static_cast<long long>(z.entries.size())) == expected);
        }
    }
    // t = 0: empty cache; t = K: the whole library
    SystemConfig zero = validate_config(3, 0, 3);
    CHECK(build_cache(2, zero).entries.empty());
    SystemConfig full = validate_config(3, 3, 3);
    CHECK(build_cache(2, full).entries.size() == 3);
}

TEST_CASE("every subfile is cached by exactly t users") {
    SystemConfig cfg = validate_config(5, 2, 5);
    std::vector<CacheContents> caches;
    for (int k = 1; k <= 5; ++k) caches.push_back(build_cache(k, cfg));
    for_each_ksubset(cfg.K, cfg.t, [&](const std::vector<int>& tau) {
        SubfileIndex idx{3, SubsetId(tau)};
        int holders = 0;
        for (const auto& z : caches)
            holders += std::binary_search(z.entries.begin(), z.entries.end(), idx) ? 1 : 0;
        CHECK(holders == cfg.t);
    });
}

TEST_CASE("cache lookup: membership rule and payload access") {
    SystemConfig cfg = validate_config(4, 1, 4);
    FileStore store = FileStore::random(4, 1024, 6);
    SubfileTable table = subpacketize(store, cfg);
    CacheContents z1 = build_cache(1, cfg, &table);

    auto hit = cache_lookup(z1, SubfileIndex{2, SubsetId({1})});
    REQUIRE(hit.has_value());
    auto expect = table.chunk(SubfileIndex{2, SubsetId({1})});
    CHECK(std::equal(hit->begin(), hit->end(), expect.begin()));

    CHECK(!cache_lookup(z1, SubfileIndex{2, SubsetId({3})}).has_value());

    CacheContents z2 = build_cache(2, cfg, &table);
    for (int n = 1; n <= 4; ++n) CHECK(cache_lookup(z2, SubfileIndex{n, SubsetId({2})}).has_value());

    // asking an index-only cache for bytes it claims to hold is an error
    CacheContents bare = build_cache(1, cfg);
    try {
        cache_lookup(bare, SubfileIndex{1, SubsetId({1})});
        FAIL("expected throw");
    } catch (const Error& e) {
        CHECK(e.code() == errc::missing_payload);
    }
}
