#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "layercast/combinat.hpp"
#include "layercast/rational.hpp"
#include "layercast/scheduler.hpp"
#include "layercast/system.hpp"

namespace layercast {

/// Delivery time of the classic coded-caching scheme when every link has
/// unit capacity: K(1-gamma)/(t+1).
inline Rational baseline_delay(const SystemConfig& cfg) {
    return Rational(BigInt(cfg.K - cfg.t), BigInt(cfg.t + 1));
}

namespace detail {
// Enumeration bound for the in-place cross-check of the grouped form.
inline constexpr std::uint64_t naive_enum_budget = 100000;
}  // namespace detail

/// Delay of sending each XOR at its weakest member's rate, one after another.
/// Grouped closed form, cross-checked against literal subset enumeration
/// whenever C(K, t+1) is small enough to enumerate.
inline Rational naive_delay(const SystemConfig& cfg, const CapacityProfile& profile) {
    Rational sum(0);
    for (int k = 1; k <= cfg.K; ++k)
        sum += Rational(binom(cfg.K - k, cfg.t), BigInt(1)) / profile.alpha(k);
    Rational grouped = sum / Rational(binom(cfg.K, cfg.t), BigInt(1));

    BigInt n_subsets = binom(cfg.K, cfg.t + 1);
    if (cfg.t < cfg.K && n_subsets <= BigInt::from_u64(detail::naive_enum_budget)) {
        Rational total(0);
        for_each_ksubset(cfg.K, cfg.t + 1, [&](const std::vector<int>& sigma) {
            Rational worst(0);
            for (int member : sigma) {
                Rational inv = profile.alpha(member).reciprocal();
                if (inv > worst) worst = inv;
            }
            total += worst;
        });
        total = total / Rational(binom(cfg.K, cfg.t), BigInt(1));
        if (total != grouped)
            fail(errc::internal_check, "uncoded delay: enumeration disagrees with grouped form");
    }
    return grouped;
}

/// Delay of the superposition scheme: the bottleneck ratio normalized by the
/// subpacketization count, together with the achieving rank.
inline std::pair<Rational, int> superposition_delay(const SystemConfig& cfg,
                                                    const CapacityProfile& profile) {
    Bottleneck bn = find_bottleneck(cfg, profile);
    return {bn.max_ratio / Rational(binom(cfg.K, cfg.t), BigInt(1)), bn.w};
}

/// Capacity the k-th weakest user needs for the full-capacity delay to
/// survive: 1 - C(K-k, t+1)/C(K, t+1).
inline Rational threshold_exact(const SystemConfig& cfg, int k) {
    BigInt all = binom(cfg.K, cfg.t + 1);
    if (all.is_zero()) return Rational(0);  // t == K: nothing is transmitted, any capacity does
    return Rational(1) - Rational(binom(cfg.K - k, cfg.t + 1), all);
}

/// Large-system approximation of the same threshold.
inline double threshold_approx(const SystemConfig& cfg, int k) {
    double kg = static_cast<double>(k) * cfg.t / cfg.K;
    return -std::expm1(-kg);
}

struct ThresholdRow {
    int k = 0;
    Rational exact;
    double approx = 0.0;
};

struct ThresholdTable {
    std::vector<ThresholdRow> rows;  // k = 1..K
};

inline ThresholdTable thresholds(const SystemConfig& cfg) {
    ThresholdTable table;
    table.rows.reserve(static_cast<std::size_t>(cfg.K));
    for (int k = 1; k <= cfg.K; ++k)
        table.rows.push_back(ThresholdRow{k, threshold_exact(cfg, k), threshold_approx(cfg, k)});
    return table;
}

struct LowerBound {
    Rational value;                    // cut-set style bound on the optimal delay
    std::optional<Rational> gap;       // T_sc / bound; empty when the bound is zero
};

/// Bound from the augmented system in which ranks 1..w are lifted to alpha_w
/// and the rest to capacity 1: (1/alpha_w) * (1/2) * w(1-gamma)/(1+w*gamma).
inline LowerBound lower_bound(const SystemConfig& cfg, const CapacityProfile& profile) {
    Bottleneck bn = find_bottleneck(cfg, profile);
    Rational gamma = cfg.gamma();
    Rational w_r(bn.w);
    Rational bound = profile.alpha(bn.w).reciprocal() * Rational(1, 2) * w_r *
                     (Rational(1) - gamma) / (Rational(1) + w_r * gamma);
    LowerBound lb;
    lb.value = bound;
    if (!bound.is_zero()) {
        Rational t_sc = bn.max_ratio / Rational(binom(cfg.K, cfg.t), BigInt(1));
        Rational gap = t_sc / bound;
        if (gap > Rational(4))
            fail(errc::internal_check, "optimality gap exceeds 4: " + gap.to_fraction_string());
        lb.gap = std::move(gap);
    }
    return lb;
}

/// Uncoded delay when one user sits at capacity 1/K + gamma and everyone
/// else at 1; equals 2*T_baseline - (1-gamma) exactly.
inline Rational example_single_slow_user(int K, int t) {
    SystemConfig cfg = validate_config(K, t, K);
    Rational slow = Rational(BigInt(1 + t), BigInt(K));  // 1/K + gamma
    if (slow >= Rational(1))
        fail(errc::premise_violated, "1/K + gamma must be below 1 for the slow-user example");
    std::vector<Rational> alphas(static_cast<std::size_t>(K), Rational(1));
    alphas[0] = slow;
    Rational value = naive_delay(cfg, sort_capacities(alphas));
    Rational closed = Rational(2) * baseline_delay(cfg) - (Rational(1) - cfg.gamma());
    if (value != closed)
        fail(errc::internal_check, "slow-user example disagrees with its closed form");
    return value;
}

struct BinomialGapBound {
    Rational lhs;  // [C(K,t+1) - C(K-m,t+1)] / C(K,t)
    Rational rhs;  // m * (1 - gamma)
    bool holds = false;
};

/// The bound that drives the factor-4 argument: the normalized cumulative
/// XOR count through rank m never exceeds m(1-gamma). Equality at m = 1.
inline BinomialGapBound binomial_gap_bound(int K, int t, int m) {
    if (m < 1) fail(errc::bad_range, "m must be >= 1");
    SystemConfig cfg = validate_config(K, t, K);
    BinomialGapBound r;
    r.lhs = Rational(binom(K, t + 1) - binom(K - m, t + 1), binom(K, t));
    r.rhs = Rational(m) * (Rational(1) - cfg.gamma());
    r.holds = r.lhs <= r.rhs;
    return r;
}

/// Everything about one configuration in a single report.
struct DelayReport {
    Rational baseline;       // all links at capacity 1
    Rational uncoded;        // XORs serialized at worst-member rate
    Rational superposed;     // the layered scheme
    Rational lower;          // converse bound
    int w = 0;               // bottleneck rank
    std::optional<Rational> gap_ratio;         // superposed / lower
    std::optional<Rational> speedup_vs_naive;  // uncoded / superposed
};

inline DelayReport full_report(const SystemConfig& cfg, const CapacityProfile& profile) {
    DelayReport rep;
    rep.baseline = baseline_delay(cfg);
    rep.uncoded = naive_delay(cfg, profile);
    auto [t_sc, w] = superposition_delay(cfg, profile);
    rep.superposed = t_sc;
    rep.w = w;
    LowerBound lb = lower_bound(cfg, profile);
    rep.lower = lb.value;
    rep.gap_ratio = lb.gap;
    if (!rep.superposed.is_zero()) rep.speedup_vs_naive = rep.uncoded / rep.superposed;
    if (rep.baseline > rep.superposed || rep.superposed > rep.uncoded)
        fail(errc::internal_check, "delay ordering baseline <= superposed <= uncoded violated");
    return rep;
}

}  // namespace layercast
