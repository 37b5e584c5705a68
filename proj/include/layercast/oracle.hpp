#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "layercast/channel.hpp"
#include "layercast/combinat.hpp"
#include "layercast/placement.hpp"
#include "layercast/prng.hpp"
#include "layercast/scheduler.hpp"
#include "layercast/system.hpp"

// Brute-force validators. Deliberately free of the grouped closed forms in
// analysis.hpp: everything here is literal enumeration, so agreement with the
// formula route is meaningful evidence.

namespace layercast {

struct OracleResult {
    std::string quantity;
    Rational brute;
    Rational formula;
    bool agree = false;
};

/// Uncoded delay by walking every (t+1)-subset and charging the slowest
/// member, exactly as the serialized scheme would.
inline Rational brute_naive_delay(const SystemConfig& cfg, const CapacityProfile& profile) {
    if (binom(cfg.K, cfg.t + 1) > BigInt(1000000))
        fail(errc::budget_exceeded, "subset enumeration over 10^6");
    if (cfg.t == cfg.K) return Rational(0);  // no XORs to send
    Rational total(0);
    for_each_ksubset(cfg.K, cfg.t + 1, [&](const std::vector<int>& sigma) {
        Rational slowest(0);
        for (int member : sigma) {
            Rational inv = profile.alpha(member).reciprocal();
            if (inv > slowest) slowest = inv;
        }
        total += slowest;
    });
    return total / Rational(binom(cfg.K, cfg.t), BigInt(1));
}

/// Bottleneck delay evaluated straight from its defining max, for comparing
/// against schedule completion times.
inline Rational expected_scheme_delay(const SystemConfig& cfg, const CapacityProfile& profile) {
    Rational best(0);
    for (int k = 1; k <= cfg.K; ++k) {
        Rational v = Rational(binom(cfg.K, cfg.t + 1) - binom(cfg.K - k, cfg.t + 1), BigInt(1)) /
                     profile.alpha(k);
        if (v > best) best = v;
    }
    return best / Rational(binom(cfg.K, cfg.t), BigInt(1));
}

/// End-to-end byte-level check: run placement, delivery and decoding for
/// every distinct-demand permutation (or just the identity demand) and
/// compare completion against the closed form. N must equal K.
inline OracleResult brute_decode_check(const SystemConfig& cfg, const CapacityProfile& profile,
                                       bool all_demands, std::uint64_t seed = 1,
                                       std::size_t subfile_bytes = 64) {
    if (cfg.N != cfg.K) fail(errc::bad_range, "decode check wants N == K");
    if (all_demands && cfg.K > 5)
        fail(errc::budget_exceeded, "K! demand permutations only enumerated up to K = 5");

    const std::uint64_t parts = binom(cfg.K, cfg.t).to_u64();
    FileStore store = FileStore::random(cfg.N, subfile_bytes * parts, seed);
    SubfileTable table = subpacketize(store, cfg);
    std::vector<CacheContents> caches;
    for (int k = 1; k <= cfg.K; ++k) caches.push_back(build_cache(k, cfg, &table));

    const Rational expected = expected_scheme_delay(cfg, profile);
    OracleResult result{"decode_check", Rational(0), expected, true};

    std::vector<int> demand(static_cast<std::size_t>(cfg.K));
    std::iota(demand.begin(), demand.end(), 1);
    do {
        DemandVector d = validate_demand(cfg, demand);
        Schedule sched = make_schedule(cfg, profile, d, &table);
        SimReport rep = simulate_delivery(cfg, profile, sched, caches, d, store);
        result.brute = rep.global_completion;
        if (!rep.verified || rep.global_completion != expected) {
            result.agree = false;
            return result;
        }
    } while (all_demands && std::next_permutation(demand.begin(), demand.end()));
    return result;
}

/// Deterministic random instance on a rational capacity grid, so every
/// downstream comparison stays exact. Same seed, same config.
inline std::pair<SystemConfig, CapacityProfile> random_config(std::uint64_t seed, int K_max,
                                                              int grid = 64) {
    SplitMix64 rng(seed);
    const int K = 2 + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(K_max - 1)));
    const int t = static_cast<int>(rng.bounded(static_cast<std::uint64_t>(K)));
    std::vector<Rational> alphas;
    alphas.reserve(static_cast<std::size_t>(K));
    for (int i = 0; i < K; ++i) {
        auto numer = 1 + static_cast<long long>(rng.bounded(static_cast<std::uint64_t>(grid)));
        alphas.emplace_back(BigInt(numer), BigInt(grid));
    }
    return {validate_config(K, t, K), sort_capacities(alphas)};
}

}  // namespace layercast
