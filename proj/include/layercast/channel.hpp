#pragma once

#include <map>
#include <vector>

#include "layercast/placement.hpp"
#include "layercast/scheduler.hpp"
#include "layercast/system.hpp"

namespace layercast {

/// How many layers rank k can peel off with successive interference
/// cancellation: the largest m with beta_m <= alpha_k. Layers above L are
/// noise to this user. For plans from the bottleneck rule this is always at
/// least min(k, K-t), so a user reaches every XOR addressed to it.
inline int decodable_layers(int /*rank*/, const LayerPlan& plan, const Rational& alpha) {
    int L = 0;
    while (L < plan.layer_count() && plan.beta(L + 1) <= alpha) ++L;
    return L;
}

/// One subfile recovery: user `user` pulled `recovered` out of XOR `sigma`
/// at the moment that XOR finished transmitting.
struct DecodeEvent {
    int user = 0;
    SubsetId sigma;
    Rational time;
    SubfileIndex recovered;
};

struct UserSimResult {
    int rank = 0;
    int layers_decoded = 0;
    std::size_t cached_subfiles = 0;     // of the demanded file
    std::size_t recovered_subfiles = 0;  // pulled from XORs
    Rational completion;                 // last useful decode instant
    std::vector<DecodeEvent> events;
    std::vector<std::uint8_t> reconstructed;
    bool file_ok = false;
};

struct SimReport {
    std::vector<UserSimResult> users;
    Rational global_completion;  // max over users
    bool verified = false;       // every reconstruction byte-identical
};

/// Maximum layer drain time; with equal-rate completion this is the delay of
/// the whole scheme. Empty schedule (t == K) takes no time.
inline Rational completion_time(const Schedule& sched) {
    Rational best(0);
    for (const Rational& c : sched.layer_completion)
        if (c > best) best = c;
    return best;
}

/// Runs every receiver over the schedule: peel decodable layers top-down,
/// cancel cached subfiles out of each XOR addressed to the user, then stitch
/// the demanded file back together from cache plus recovered pieces.
inline SimReport simulate_delivery(const SystemConfig& cfg, const CapacityProfile& profile,
                                   const Schedule& sched, const std::vector<CacheContents>& caches,
                                   const DemandVector& demand, const FileStore& store) {
    if (static_cast<int>(caches.size()) != cfg.K)
        fail(errc::bad_range, "need one cache per user");
    SimReport report;
    report.verified = true;

    for (int k = 1; k <= cfg.K; ++k) {
        const CacheContents& cache = caches[static_cast<std::size_t>(k - 1)];
        UserSimResult res;
        res.rank = k;
        res.layers_decoded = decodable_layers(k, sched.plan, profile.alpha(k));

        std::map<SubsetId, std::vector<std::uint8_t>> recovered;
        for (int m = 1; m <= res.layers_decoded; ++m) {
            for (const ScheduledXor& sx : sched.layers[static_cast<std::size_t>(m - 1)]) {
                if (!sx.msg.sigma.contains(k)) continue;  // decoded for SIC, nothing to keep
                if (!sx.msg.payload)
                    fail(errc::missing_payload, "schedule built without byte payloads");
                std::vector<std::uint8_t> bytes = *sx.msg.payload;
                for (int j : sx.msg.sigma.members) {
                    if (j == k) continue;
                    auto cached = cache_lookup(cache, {demand.file_for(j), sx.msg.sigma.without(j)});
                    if (!cached)
                        fail(errc::internal_check, "peer subfile missing from own cache");
                    for (std::size_t i = 0; i < bytes.size(); ++i) bytes[i] ^= (*cached)[i];
                }
                SubfileIndex got{demand.file_for(k), sx.msg.sigma.without(k)};
                res.events.push_back(DecodeEvent{k, sx.msg.sigma, sx.end, got});
                if (sx.end > res.completion) res.completion = sx.end;
                recovered.emplace(got.tau, std::move(bytes));
            }
        }
        res.recovered_subfiles = recovered.size();

        // reconstruct the demanded file in lexicographic tau order
        const int wanted = demand.file_for(k);
        for_each_ksubset(cfg.K, cfg.t, [&](const std::vector<int>& tau_members) {
            SubsetId tau(tau_members);
            if (auto cached = cache_lookup(cache, {wanted, tau})) {
                res.reconstructed.insert(res.reconstructed.end(), cached->begin(), cached->end());
                ++res.cached_subfiles;
                return;
            }
            auto it = recovered.find(tau);
            if (it == recovered.end())
                fail(errc::undeliverable_subfile,
                     "subfile " + tau.to_string() + " of file " + std::to_string(wanted) +
                         " neither cached nor recovered by rank " + std::to_string(k));
            res.reconstructed.insert(res.reconstructed.end(), it->second.begin(),
                                     it->second.end());
        });

        res.file_ok = res.reconstructed == store.file(wanted);
        report.verified = report.verified && res.file_ok;
        if (res.completion > report.global_completion) report.global_completion = res.completion;
        report.users.push_back(std::move(res));
    }
    return report;
}

}  // namespace layercast
