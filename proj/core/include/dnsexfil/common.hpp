// Copyright (c) 2026 the dnsexfil authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>

namespace dnsexfil {

inline constexpr std::string_view kVersion = "dnsexfil 0.1.0";

/// FNV-1a 64-bit over raw bytes. Stable across platforms and runs; used for
/// score-file text hashes and content addressing.
constexpr std::uint64_t fnv1a64(std::string_view text) noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Keyed text hash: FNV-1a mixed with a seed. Drives split assignment.
constexpr std::uint64_t hash64(std::string_view text, std::uint64_t seed) noexcept {
    return splitmix64(fnv1a64(text) ^ splitmix64(seed));
}

/// Derive an independent sub-seed from (seed, purpose tag, index).
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag,
                                    std::uint64_t index = 0) noexcept {
    return splitmix64(hash64(tag, seed) ^ splitmix64(index));
}

std::string hex64(std::uint64_t value);

/// mt19937_64 with explicit output transforms. The std distributions are
/// implementation-defined; these are not, so seeded runs are byte-stable.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, bound) by rejection; bound > 0.
    std::uint64_t next_below(std::uint64_t bound);

    /// Uniform in [0, 1) with 53 random bits.
    double next_double() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// True with probability p.
    bool bernoulli(double p) { return next_double() < p; }

    /// Standard normal via Box-Muller (no cached spare, keeps replay simple).
    double next_gaussian();

    /// Normal(0, std) truncated to [-2 std, 2 std] by rejection.
    double truncated_normal(double stddev);

    /// Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::span<T> values) {
        for (std::size_t i = values.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(next_below(i));
            std::swap(values[i - 1], values[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

/// Neumaier-compensated accumulator; order-insensitive enough for the
/// reductions used in corpus statistics.
class CompensatedSum {
public:
    void add(double value) noexcept {
        double t = sum_ + value;
        if (std::abs(sum_) >= std::abs(value)) {
            comp_ += (sum_ - t) + value;
        } else {
            comp_ += (value - t) + sum_;
        }
        sum_ = t;
    }
    double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

}  // namespace dnsexfil
