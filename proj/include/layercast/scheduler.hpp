#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "layercast/combinat.hpp"
#include "layercast/placement.hpp"
#include "layercast/rational.hpp"
#include "layercast/system.hpp"

namespace layercast {

/// Coded multicast message for a (t+1)-subset sigma: the XOR of the subfiles
/// each member is missing. Its layer is min(sigma), the weakest user served.
struct XorMessage {
    SubsetId sigma;
    int layer = 0;
    std::optional<std::vector<std::uint8_t>> payload;
};

/// Number of XORs whose weakest intended user is at most rank k.
inline BigInt cumulative_xor_count(const SystemConfig& cfg, int k) {
    return binom(cfg.K, cfg.t + 1) - binom(cfg.K - k, cfg.t + 1);
}

/// All C(K, t+1) XORs in lexicographic sigma order. With a subfile table the
/// payloads are materialized; without one the messages are index-only.
inline std::vector<XorMessage> generate_xors(const SystemConfig& cfg, const DemandVector& demand,
                                             const SubfileTable* table = nullptr) {
    std::vector<XorMessage> out;
    if (cfg.t == cfg.K) return out;  // everything cached, no delivery
    for_each_ksubset(cfg.K, cfg.t + 1, [&](const std::vector<int>& sigma_members) {
        XorMessage msg;
        msg.sigma = SubsetId(sigma_members);
        msg.layer = msg.sigma.min_member();
        if (table) {
            std::vector<std::uint8_t> acc(table->subfile_len(), 0);
            for (int k : sigma_members) {
                SubfileIndex part{demand.file_for(k), msg.sigma.without(k)};
                auto bytes = table->chunk(part);
                for (std::size_t i = 0; i < acc.size(); ++i) acc[i] ^= bytes[i];
            }
            msg.payload = std::move(acc);
        }
        out.push_back(std::move(msg));
    });
    return out;
}

/// Splits the XOR list into power layers by weakest member. Layer k holds
/// C(K-k, t) messages; layers 1..K-t cover everything exactly once.
inline std::vector<std::vector<XorMessage>> partition_layers(const SystemConfig& cfg,
                                                             std::vector<XorMessage> xors) {
    std::vector<std::vector<XorMessage>> layers(
        static_cast<std::size_t>(cfg.layer_count()));
    for (auto& x : xors) {
        if (x.layer < 1 || x.layer > cfg.layer_count())
            fail(errc::internal_check, "XOR layer outside [1..K-t]");
        layers[static_cast<std::size_t>(x.layer - 1)].push_back(std::move(x));
    }
    return layers;
}

struct Bottleneck {
    int w = 0;          // smallest maximizing rank
    Rational max_ratio; // max_k cum(k)/alpha_k; delay is max_ratio / C(K,t)
};

/// The bottleneck user: the rank that takes longest to clear all XORs
/// addressed at or below it. Not necessarily the weakest user.
inline Bottleneck find_bottleneck(const SystemConfig& cfg, const CapacityProfile& profile) {
    Bottleneck best;
    for (int k = 1; k <= cfg.K; ++k) {
        Rational value = Rational(cumulative_xor_count(cfg, k), BigInt(1)) / profile.alpha(k);
        if (best.w == 0 || value > best.max_ratio) {
            best.w = k;
            best.max_ratio = value;
        }
    }
    return best;
}

/// Power-split plan: breakpoints[k] is the SNR-exponent boundary between
/// layers k and k+1, rates[k-1] the normalized rate of layer k.
struct LayerPlan {
    int w = 0;
    Rational max_ratio;
    std::vector<Rational> breakpoints;  // size K-t+1, breakpoints[0] == 0
    std::vector<Rational> rates;        // size K-t, all > 0
    std::vector<BigInt> layer_sizes;    // size K-t, C(K-k, t)

    const Rational& beta(int k) const { return breakpoints[static_cast<std::size_t>(k)]; }
    const Rational& rate(int k) const { return rates[static_cast<std::size_t>(k - 1)]; }
    int layer_count() const { return static_cast<int>(rates.size()); }
};

/// Computes the split so every layer finishes at the same time and the
/// bottleneck user w is served exactly at its capacity. Any argmax-tied w
/// yields the same plan since breakpoints reduce to cum(k)/max_ratio.
inline LayerPlan power_coefficients(const SystemConfig& cfg, const CapacityProfile& profile,
                                    const Bottleneck& bn) {
    LayerPlan plan;
    plan.w = bn.w;
    plan.max_ratio = bn.max_ratio;
    plan.breakpoints.push_back(Rational(0));
    if (cfg.layer_count() == 0) return plan;  // t == K: nothing to send

    const Rational cum_w(cumulative_xor_count(cfg, bn.w), BigInt(1));
    const Rational& alpha_w = profile.alpha(bn.w);
    for (int k = 1; k <= cfg.layer_count(); ++k) {
        Rational beta_k = Rational(cumulative_xor_count(cfg, k), BigInt(1)) * alpha_w / cum_w;
        if (beta_k > profile.alpha(k))
            fail(errc::infeasible_layer,
                 "breakpoint " + beta_k.to_fraction_string() + " exceeds capacity of rank " +
                     std::to_string(k) + " (w not from the bottleneck rule?)");
        plan.rates.push_back(beta_k - plan.breakpoints.back());
        plan.breakpoints.push_back(std::move(beta_k));
        plan.layer_sizes.push_back(binom(cfg.K - k, cfg.t));
    }
    return plan;
}

inline LayerPlan make_layer_plan(const SystemConfig& cfg, const CapacityProfile& profile) {
    return power_coefficients(cfg, profile, find_bottleneck(cfg, profile));
}

/// SNR-exponent interval each layer occupies: at transmit power P, layer k
/// carries power P^-beta_{k-1} - P^-beta_k.
inline std::vector<std::pair<Rational, Rational>> symbolic_powers(const LayerPlan& plan) {
    std::vector<std::pair<Rational, Rational>> out;
    for (int k = 1; k <= plan.layer_count(); ++k)
        out.emplace_back(plan.beta(k - 1), plan.beta(k));
    return out;
}

struct ScheduledXor {
    XorMessage msg;
    Rational start;
    Rational end;
};

/// Transmission timeline: all layers run simultaneously from time 0, each
/// sending its XORs back to back at its own rate.
struct Schedule {
    LayerPlan plan;
    std::vector<std::vector<ScheduledXor>> layers;
    std::vector<Rational> layer_completion;
    Rational subfile_size;  // 1/C(K,t) of a unit file
};

inline Schedule build_schedule(std::vector<std::vector<XorMessage>> layers, const LayerPlan& plan,
                               const SystemConfig& cfg) {
    if (static_cast<int>(layers.size()) != plan.layer_count())
        fail(errc::internal_check, "layer partition does not match plan");
    Schedule sched;
    sched.plan = plan;
    sched.subfile_size = Rational(BigInt(1), binom(cfg.K, cfg.t));
    for (int k = 1; k <= plan.layer_count(); ++k) {
        auto& queue = layers[static_cast<std::size_t>(k - 1)];
        if (BigInt(static_cast<long long>(queue.size())) !=
            plan.layer_sizes[static_cast<std::size_t>(k - 1)])
            fail(errc::internal_check, "layer size mismatch against C(K-k, t)");
        const Rational slot = sched.subfile_size / plan.rate(k);
        std::vector<ScheduledXor> timeline;
        timeline.reserve(queue.size());
        Rational cursor(0);
        for (auto& msg : queue) {
            Rational end = cursor + slot;
            timeline.push_back(ScheduledXor{std::move(msg), std::move(cursor), end});
            cursor = end;
        }
        sched.layer_completion.push_back(cursor);
        sched.layers.push_back(std::move(timeline));
    }
    // every layer must drain at the same instant; anything else is a scheme bug
    for (const Rational& c : sched.layer_completion)
        if (c != sched.layer_completion.front())
            fail(errc::internal_check, "unequal layer completion times");
    return sched;
}

inline Schedule make_schedule(const SystemConfig& cfg, const CapacityProfile& profile,
                              const DemandVector& demand, const SubfileTable* table = nullptr) {
    LayerPlan plan = make_layer_plan(cfg, profile);
    return build_schedule(partition_layers(cfg, generate_xors(cfg, demand, table)), plan, cfg);
}

}  // namespace layercast
