#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "layercast/errors.hpp"
#include "layercast/rational.hpp"

namespace layercast {

/// Validated broadcast-system parameters. The cache budget is carried as the
/// integer t (the subset size used by placement); gamma = t/K is derived so
/// fractional cache sizes cannot sneak in through the API.
struct SystemConfig {
    int K = 0;  // number of users
    int t = 0;  // integer cache parameter, 0 <= t <= K
    int N = 0;  // library size, N >= K so all-distinct demands are possible

    Rational gamma() const { return Rational(BigInt(t), BigInt(K)); }
    int layer_count() const { return K - t; }
};

inline SystemConfig validate_config(const SystemConfig& raw) {
    if (raw.K < 1) fail(errc::bad_range, "K must be >= 1");
    if (raw.t < 0 || raw.t > raw.K) fail(errc::bad_range, "t must lie in [0, K]");
    if (raw.N < raw.K) fail(errc::bad_range, "N must be >= K (worst-case distinct demands)");
    return raw;
}

inline SystemConfig validate_config(int K, int t, int N) {
    return validate_config(SystemConfig{K, t, N});
}

/// Derives the integer cache parameter from a fractional cache size.
/// K*gamma must be an integer; anything else is outside this scheme.
inline int cache_param_from_gamma(int K, const Rational& gamma) {
    Rational kg = Rational(K) * gamma;
    if (kg.den() != BigInt(1))
        fail(errc::non_integer_cache,
             "K*gamma = " + kg.to_fraction_string() + " is not an integer");
    BigInt v = kg.num();
    if (v.signum() < 0 || v > BigInt(K)) fail(errc::bad_range, "gamma outside [0, 1]");
    return static_cast<int>(v.to_u64());
}

/// Per-user link capacities sorted ascending, with the permutation back to
/// the caller's user identifiers. All scheme math runs in rank space.
struct CapacityProfile {
    std::vector<Rational> alphas;   // ascending, alphas[i] is rank i+1
    std::vector<int> user_of_rank;  // 1-based user id for each rank

    const Rational& alpha(int rank) const { return alphas[static_cast<std::size_t>(rank - 1)]; }
    int K() const { return static_cast<int>(alphas.size()); }
};

/// Sorts capacities ascending, ties broken by user id so the permutation is
/// deterministic. Capacities must lie in (0, 1].
inline CapacityProfile sort_capacities(const std::vector<Rational>& by_user) {
    const int K = static_cast<int>(by_user.size());
    for (const Rational& a : by_user) {
        if (a.signum() <= 0 || a > Rational(1))
            fail(errc::out_of_range, "capacity " + a.to_fraction_string() + " outside (0, 1]");
    }
    std::vector<int> order(static_cast<std::size_t>(K));
    std::iota(order.begin(), order.end(), 1);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return by_user[static_cast<std::size_t>(a - 1)] < by_user[static_cast<std::size_t>(b - 1)];
    });
    CapacityProfile p;
    p.user_of_rank = order;
    p.alphas.reserve(static_cast<std::size_t>(K));
    for (int id : order) p.alphas.push_back(by_user[static_cast<std::size_t>(id - 1)]);
    return p;
}

/// Requested file per sorted rank. Entries may repeat; the delivery scheme is
/// run unmodified on repeated demands.
struct DemandVector {
    std::vector<int> d;  // d[rank-1] in [1..N]

    int file_for(int rank) const { return d[static_cast<std::size_t>(rank - 1)]; }
};

inline DemandVector validate_demand(const SystemConfig& cfg, std::vector<int> d) {
    if (static_cast<int>(d.size()) != cfg.K)
        fail(errc::bad_range, "demand vector must have K entries");
    for (int f : d)
        if (f < 1 || f > cfg.N) fail(errc::bad_range, "demanded file outside [1..N]");
    return DemandVector{std::move(d)};
}

/// Worst-case demand: rank k asks for file k (requires N >= K, guaranteed).
inline DemandVector distinct_demand(const SystemConfig& cfg) {
    std::vector<int> d(static_cast<std::size_t>(cfg.K));
    std::iota(d.begin(), d.end(), 1);
    return DemandVector{std::move(d)};
}

}  // namespace layercast
