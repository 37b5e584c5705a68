#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "layercast/combinat.hpp"
#include "layercast/errors.hpp"
#include "layercast/prng.hpp"
#include "layercast/system.hpp"

namespace layercast {

/// Identifies subfile W^n_tau: file n split by the t-subset tau of users
/// that cache it.
struct SubfileIndex {
    int file = 0;  // 1-based
    SubsetId tau;

    friend bool operator==(const SubfileIndex&, const SubfileIndex&) = default;
    friend std::strong_ordering operator<=>(const SubfileIndex& a, const SubfileIndex& b) {
        if (auto c = a.file <=> b.file; c != 0) return c;
        return a.tau <=> b.tau;
    }
};

/// The library: N equal-length files.
class FileStore {
public:
    FileStore(std::vector<std::vector<std::uint8_t>> files) : files_(std::move(files)) {
        if (files_.empty()) fail(errc::bad_range, "empty file store");
        for (const auto& f : files_)
            if (f.size() != files_[0].size())
                fail(errc::bad_range, "library files must have equal length");
    }

    static FileStore random(int n_files, std::size_t file_len, std::uint64_t seed) {
        SplitMix64 rng(seed);
        std::vector<std::vector<std::uint8_t>> files;
        files.reserve(static_cast<std::size_t>(n_files));
        for (int n = 0; n < n_files; ++n) {
            std::vector<std::uint8_t> f(file_len);
            for (auto& b : f) b = static_cast<std::uint8_t>(rng.next());
            files.push_back(std::move(f));
        }
        return FileStore(std::move(files));
    }

    int count() const { return static_cast<int>(files_.size()); }
    std::size_t file_len() const { return files_[0].size(); }
    const std::vector<std::uint8_t>& file(int n) const {
        return files_[static_cast<std::size_t>(n - 1)];
    }

private:
    std::vector<std::vector<std::uint8_t>> files_;
};

/// Result of subpacketization: every file cut into C(K,t) contiguous equal
/// chunks, one per t-subset tau in lexicographic order.
class SubfileTable {
public:
    SubfileTable(int K, int t, std::size_t subfile_len,
                 std::vector<std::vector<std::vector<std::uint8_t>>> chunks)
        : K_(K), t_(t), subfile_len_(subfile_len), chunks_(std::move(chunks)) {}

    int K() const { return K_; }
    int t() const { return t_; }
    std::size_t subfile_len() const { return subfile_len_; }
    std::uint64_t subfiles_per_file() const { return chunks_[0].size(); }

    std::span<const std::uint8_t> chunk(const SubfileIndex& idx) const {
        return chunks_[static_cast<std::size_t>(idx.file - 1)][subset_rank(idx.tau, K_)];
    }

private:
    int K_, t_;
    std::size_t subfile_len_;
    std::vector<std::vector<std::vector<std::uint8_t>>> chunks_;  // [file][tau rank]
};

inline SubfileTable subpacketize(const FileStore& store, const SystemConfig& cfg) {
    BigInt parts_big = binom(cfg.K, cfg.t);
    std::uint64_t parts = parts_big.to_u64();  // byte mode is only viable at small K anyway
    if (store.file_len() % parts != 0)
        fail(errc::indivisible_file_length,
             "file length " + std::to_string(store.file_len()) + " not divisible by C(K,t) = " +
                 parts_big.to_string());
    const std::size_t len = store.file_len() / parts;
    std::vector<std::vector<std::vector<std::uint8_t>>> chunks(
        static_cast<std::size_t>(store.count()));
    for (int n = 1; n <= store.count(); ++n) {
        auto& per_file = chunks[static_cast<std::size_t>(n - 1)];
        per_file.reserve(parts);
        const auto& bytes = store.file(n);
        for (std::uint64_t p = 0; p < parts; ++p)
            per_file.emplace_back(bytes.begin() + static_cast<std::ptrdiff_t>(p * len),
                                  bytes.begin() + static_cast<std::ptrdiff_t>((p + 1) * len));
    }
    return SubfileTable(cfg.K, cfg.t, len, std::move(chunks));
}

/// Cache Z_k of one user: every subfile W^n_tau with k in tau, for all files.
/// Placement never sees capacities; only (K, t) shape it.
struct CacheContents {
    int user = 0;                                     // rank
    std::vector<SubfileIndex> entries;                // sorted by (file, tau)
    std::vector<std::vector<std::uint8_t>> payloads;  // aligned with entries; empty in index mode

    bool materialized() const { return payloads.size() == entries.size(); }

    std::size_t total_bytes() const {
        std::size_t s = 0;
        for (const auto& p : payloads) s += p.size();
        return s;
    }
};

inline CacheContents build_cache(int rank, const SystemConfig& cfg,
                                 const SubfileTable* table = nullptr) {
    CacheContents z;
    z.user = rank;
    for (int n = 1; n <= cfg.N; ++n) {
        for_each_ksubset(cfg.K, cfg.t, [&](const std::vector<int>& tau) {
            if (!std::binary_search(tau.begin(), tau.end(), rank)) return;
            SubfileIndex idx{n, SubsetId(tau)};
            if (table) {
                auto bytes = table->chunk(idx);
                z.payloads.emplace_back(bytes.begin(), bytes.end());
            }
            z.entries.push_back(std::move(idx));
        });
    }
    return z;
}

/// Bytes for `idx` if user caches it, nullopt otherwise. Asking an index-only
/// cache for bytes of a held entry is a caller error.
inline std::optional<std::span<const std::uint8_t>> cache_lookup(const CacheContents& cache,
                                                                 const SubfileIndex& idx) {
    if (!idx.tau.contains(cache.user)) return std::nullopt;
    auto it = std::lower_bound(cache.entries.begin(), cache.entries.end(), idx);
    if (it == cache.entries.end() || *it != idx) return std::nullopt;
    if (cache.payloads.empty())
        fail(errc::missing_payload, "cache built in index-only mode has no bytes");
    return std::span<const std::uint8_t>(
        cache.payloads[static_cast<std::size_t>(it - cache.entries.begin())]);
}

}  // namespace layercast
