// Copyright (c) 2026 the dnsexfil authors
// SPDX-License-Identifier: Apache-2.0

#include "dnsexfil/common.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace dnsexfil {

std::string hex64(std::uint64_t value) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(value));
    return std::string(buf);
}

std::uint64_t Rng::next_below(std::uint64_t bound) {
    if (bound == 0) {
        throw std::invalid_argument("Rng::next_below: bound must be positive");
    }
    // rejection sampling over the largest multiple of bound
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x = engine_();
    while (x >= limit) {
        x = engine_();
    }
    return x % bound;
}

double Rng::next_gaussian() {
    // Box-Muller; u clamped away from 0 so log stays finite
    double u = next_double();
    if (u <= 0.0) {
        u = 0x1.0p-53;
    }
    const double v = next_double();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
}

double Rng::truncated_normal(double stddev) {
    for (;;) {
        const double z = next_gaussian();
        if (std::abs(z) <= 2.0) {
            return z * stddev;
        }
    }
}

}  // namespace dnsexfil
