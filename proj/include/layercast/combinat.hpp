#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "layercast/bigint.hpp"
#include "layercast/errors.hpp"

namespace layercast {

/// A subset of user ranks, kept strictly ascending. Ordering is lexicographic
/// on the member list, which fixes the enumeration order everywhere.
struct SubsetId {
    std::vector<int> members;

    SubsetId() = default;
    explicit SubsetId(std::vector<int> m) : members(std::move(m)) {}

    /// Validates members are strictly ascending within [1..K].
    static SubsetId checked(std::vector<int> m, int K) {
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] < 1 || m[i] > K) fail(errc::bad_range, "subset member out of [1..K]");
            if (i > 0 && m[i] <= m[i - 1]) fail(errc::bad_range, "subset members not ascending");
        }
        return SubsetId(std::move(m));
    }

    int size() const noexcept { return static_cast<int>(members.size()); }
    bool empty() const noexcept { return members.empty(); }
    int min_member() const { return members.front(); }
    bool contains(int user) const {
        return std::binary_search(members.begin(), members.end(), user);
    }
    /// Members with `user` removed (used for sigma \ {k} subfile indices).
    SubsetId without(int user) const {
        std::vector<int> m;
        m.reserve(members.size());
        for (int v : members)
            if (v != user) m.push_back(v);
        return SubsetId(std::move(m));
    }
    SubsetId with(int user) const {
        std::vector<int> m = members;
        m.insert(std::lower_bound(m.begin(), m.end(), user), user);
        return SubsetId(std::move(m));
    }

    std::string to_string() const {
        std::string s = "{";
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(members[i]);
        }
        return s + "}";
    }

    friend bool operator==(const SubsetId&, const SubsetId&) = default;
    friend std::strong_ordering operator<=>(const SubsetId& a, const SubsetId& b) {
        return a.members <=> b.members;
    }
};

/// C(n, k), exact. Returns 0 for k < 0 or k > n; that convention carries the
/// vanishing terms in the cumulative-count and threshold formulas.
inline BigInt binom(int n, int k) {
    if (n < 0) fail(errc::bad_range, "binom requires n >= 0");
    if (k < 0 || k > n) return BigInt(0);
    if (k > n - k) k = n - k;
    BigInt r(1);
    for (int i = 1; i <= k; ++i) {
        r *= BigInt(n - k + i);
        r /= BigInt(i);  // exact: partial products are themselves binomials
    }
    return r;
}

/// Pascal identity self-check: C(n,k) == C(n-1,k) + C(n-1,k-1).
inline bool pascal_check(int n, int k) {
    if (k < 1 || k > n) fail(errc::bad_range, "pascal_check requires 1 <= k <= n");
    return binom(n, k) == binom(n - 1, k) + binom(n - 1, k - 1);
}

/// Visits all size-`size` subsets of [1..K] in lexicographic order.
template <typename Fn>
void for_each_ksubset(int K, int size, Fn&& fn) {
    if (size < 0 || size > K) fail(errc::bad_range, "subset size outside [0, K]");
    std::vector<int> cur(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        fn(static_cast<const std::vector<int>&>(cur));
        // advance: rightmost position that can still grow
        int i = size - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == K - (size - 1 - i)) --i;
        if (i < 0) return;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < size; ++j)
            cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
}

/// All C(K, size) subsets, lexicographic. Materialized; use for_each_ksubset
/// for large enumerations.
inline std::vector<SubsetId> ksubsets(int K, int size) {
    std::vector<SubsetId> out;
    for_each_ksubset(K, size, [&](const std::vector<int>& m) { out.emplace_back(m); });
    return out;
}

/// Zero-based position of `s` in the lexicographic enumeration of
/// |s|-subsets of [1..K].
inline std::uint64_t subset_rank(const SubsetId& s, int K) {
    const int t = s.size();
    BigInt rank(0);
    int prev = 0;
    for (int i = 0; i < t; ++i) {
        for (int v = prev + 1; v < s.members[static_cast<std::size_t>(i)]; ++v)
            rank += binom(K - v, t - i - 1);
        prev = s.members[static_cast<std::size_t>(i)];
    }
    return rank.to_u64();
}

}  // namespace layercast
