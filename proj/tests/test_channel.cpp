#include <doctest.h>

#include <layercast/channel.hpp>
#include <layercast/oracle.hpp>

using namespace layercast;

namespace {
Rational q(long long n, long long d) { return Rational(BigInt(n), BigInt(d)); }

struct Rig {
    SystemConfig cfg;
    CapacityProfile profile;
    FileStore store;
    SubfileTable table;
    std::vector<CacheContents> caches;

    Rig(int K, int t, std::vector<Rational> alphas, std::size_t file_len, std::uint64_t seed)
        : cfg(validate_config(K, t, K)),
          profile(sort_capacities(alphas)),
          store(FileStore::random(K, file_len, seed)),
          table(subpacketize(store, cfg)) {
        for (int k = 1; k <= K; ++k) caches.push_back(build_cache(k, cfg, &table));
    }

    SimReport run(const DemandVector& d) const {
        Schedule sched = make_schedule(cfg, profile, d, &table);
        return simulate_delivery(cfg, profile, sched, caches, d, store);
    }
};
}  // namespace

TEST_CASE("SIC depth per user") {
    SystemConfig cfg = validate_config(4, 1, 4);
    CapacityProfile p = sort_capacities({q(1, 2), q(3, 4), Rational(1), Rational(1)});
    LayerPlan plan = make_layer_plan(cfg, p);
    // beta = (0, 9/20, 3/4, 9/10)
    CHECK(decodable_layers(1, plan, p.alpha(1)) == 1);
    CHECK(decodable_layers(2, plan, p.alpha(2)) == 2);  // boundary: beta_2 == alpha_2
    CHECK(decodable_layers(3, plan, p.alpha(3)) == 3);
    CHECK(decodable_layers(4, plan, p.alpha(4)) == 3);  // capped at K-t
}

TEST_CASE("every user reaches the layers that carry its XORs") {
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        auto [cfg, profile] = random_config(seed, 10);
        LayerPlan plan = make_layer_plan(cfg, profile);
        for (int k = 1; k <= cfg.K; ++k) {
            int L = decodable_layers(k, plan, profile.alpha(k));
            CHECK(L >= std::min(k, cfg.layer_count()));
        }
    }
}

TEST_CASE("end-to-end delivery: slow user rescued, bytes intact") {
    Rig rig(4, 1, {q(1, 2), Rational(1), Rational(1), Rational(1)}, 1024, 7);
    SimReport rep = rig.run(distinct_demand(rig.cfg));
    CHECK(rep.verified);
    CHECK(rep.global_completion == q(3, 2));
    for (const auto& u : rep.users) {
        CHECK(u.file_ok);
        CHECK(u.cached_subfiles == 1);     // C(3,0)
        CHECK(u.recovered_subfiles == 3);  // C(3,1)
        CHECK(u.completion <= rep.global_completion);
    }
}

TEST_CASE("unit capacities: delivery finishes exactly at the baseline") {
    Rig rig(3, 1, {Rational(1), Rational(1), Rational(1)}, 3 * 128, 8);
    SimReport rep = rig.run(distinct_demand(rig.cfg));
    CHECK(rep.verified);
    CHECK(rep.global_completion == Rational(1));
}

TEST_CASE("single-XOR case: completion 1/(K*alpha_1)") {
    Rig rig(4, 3, {q(1, 2), Rational(1), Rational(1), Rational(1)}, 4 * 64, 9);
    SimReport rep = rig.run(distinct_demand(rig.cfg));
    CHECK(rep.verified);
    CHECK(rep.global_completion == q(1, 2));
}

TEST_CASE("full caching needs no delivery at all") {
    Rig rig(3, 3, {q(1, 4), q(1, 2), Rational(1)}, 64, 10);
    SimReport rep = rig.run(distinct_demand(rig.cfg));
    CHECK(rep.verified);
    CHECK(rep.global_completion == Rational(0));
    for (const auto& u : rep.users) CHECK(u.recovered_subfiles == 0);
}

TEST_CASE("repeated demands decode fine") {
    Rig rig(4, 2, {q(1, 3), q(2, 3), Rational(1), Rational(1)}, 6 * 32, 11);
    SimReport rep = rig.run(validate_demand(rig.cfg, {2, 2, 2, 2}));
    CHECK(rep.verified);
    for (const auto& u : rep.users) CHECK(u.reconstructed == rig.store.file(2));
}

TEST_CASE("subfile accounting: cached + recovered covers the file exactly") {
    for (int K = 2; K <= 5; ++K) {
        for (int t = 1; t < K; ++t) {
            Rig rig(K, t, std::vector<Rational>(static_cast<std::size_t>(K), Rational(1)),
                    binom(K, t).to_u64() * 16, static_cast<std::uint64_t>(K * 100 + t));
            SimReport rep = rig.run(distinct_demand(rig.cfg));
            REQUIRE(rep.verified);
            for (const auto& u : rep.users) {
                CHECK(BigInt(static_cast<long long>(u.cached_subfiles)) == binom(K - 1, t - 1));
                CHECK(BigInt(static_cast<long long>(u.recovered_subfiles)) == binom(K - 1, t));
                CHECK(BigInt(static_cast<long long>(u.cached_subfiles + u.recovered_subfiles)) ==
                      binom(K, t));
                // each needed subfile comes out of exactly one XOR
                CHECK(u.events.size() == u.recovered_subfiles);
            }
        }
    }
}

TEST_CASE("a schedule that drops an XOR is caught as undeliverable") {
    Rig rig(4, 1, {Rational(1), Rational(1), Rational(1), Rational(1)}, 1024, 14);
    DemandVector d = distinct_demand(rig.cfg);
    Schedule sched = make_schedule(rig.cfg, rig.profile, d, &rig.table);
    sched.layers[0].pop_back();  // lose X_{1,4}
    try {
        simulate_delivery(rig.cfg, rig.profile, sched, rig.caches, d, rig.store);
        FAIL("expected throw");
    } catch (const Error& e) {
        CHECK(e.code() == errc::undeliverable_subfile);
    }
}

TEST_CASE("decode events carry the schedule end times") {
    Rig rig(4, 1, {q(1, 2), q(3, 4), Rational(1), Rational(1)}, 1024, 12);
    DemandVector d = distinct_demand(rig.cfg);
    Schedule sched = make_schedule(rig.cfg, rig.profile, d, &rig.table);
    SimReport rep = simulate_delivery(rig.cfg, rig.profile, sched, rig.caches, d, rig.store);
    for (const auto& u : rep.users) {
        for (const DecodeEvent& ev : u.events) {
            CHECK(ev.sigma.contains(u.rank));
            bool found = false;
            for (const auto& layer : sched.layers)
                for (const ScheduledXor& sx : layer)
                    if (sx.msg.sigma == ev.sigma) {
                        CHECK(sx.end == ev.time);
                        found = true;
                    }
            CHECK(found);
        }
    }
}

TEST_CASE("schedule completion equals the closed-form delay on random instances") {
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        auto [cfg, profile] = random_config(seed, 9);
        Schedule sched = make_schedule(cfg, profile, distinct_demand(cfg));
        CHECK(completion_time(sched) == expected_scheme_delay(cfg, profile));
    }
}

TEST_CASE("index-only schedules cannot be simulated") {
    SystemConfig cfg = validate_config(3, 1, 3);
    CapacityProfile p = sort_capacities({Rational(1), Rational(1), Rational(1)});
    FileStore store = FileStore::random(3, 3 * 8, 13);
    SubfileTable table = subpacketize(store, cfg);
    std::vector<CacheContents> caches;
    for (int k = 1; k <= 3; ++k) caches.push_back(build_cache(k, cfg, &table));
    Schedule bare = make_schedule(cfg, p, distinct_demand(cfg));  // no payloads
    try {
        simulate_delivery(cfg, p, bare, caches, distinct_demand(cfg), store);
        FAIL("expected throw");
    } catch (const Error& e) {
        CHECK(e.code() == errc::missing_payload);
    }
}
