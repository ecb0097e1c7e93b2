// pairkit: exact-arithmetic bilinear pairings on elliptic curves
// Copyright 2026 The pairkit Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <gmpxx.h>

namespace pairkit {

// Deterministic splittable random stream. All randomness in the library flows
// from one user-supplied seed; named children give independent, reproducible
// streams per task ("weil.shift", "hash.g2", ...).
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    // Child stream derived from this stream's seed and the label only; the
    // parent's draw position does not affect the child.
    Rng split(std::string_view label) const;

    std::uint64_t u64();

    // Uniform integer in [0, bound); bound must be positive.
    mpz_class below(const mpz_class& bound);

    std::uint64_t seed() const noexcept { return seed_; }

private:
    std::uint64_t seed_;
    std::mt19937_64 gen_;
};

} // namespace pairkit
