// pairkit: exact-arithmetic bilinear pairings on elliptic curves
// Copyright 2026 The pairkit Authors.
// SPDX-License-Identifier: Apache-2.0
#include "pairkit/rng.hpp"

#include "pairkit/errors.hpp"
#include "pairkit/integer.hpp"

namespace pairkit {

Rng::Rng(std::uint64_t seed) : seed_(seed), gen_(seed) {}

Rng Rng::split(std::string_view label) const {
    std::uint64_t h = 0xcbf29ce484222325ULL; // FNV-1a over the label
    for (unsigned char c : label) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return Rng(mix64(seed_ ^ h));
}

std::uint64_t Rng::u64() {
    return gen_();
}

mpz_class Rng::below(const mpz_class& bound) {
    if (bound <= 0)
        fail(Errc::InvalidParameters, "Rng::below needs a positive bound");
    const std::size_t bits = bit_length(bound - 1);
    const std::size_t words = (bits + 63) / 64;
    while (true) {
        mpz_class x = 0;
        for (std::size_t i = 0; i < words; ++i) {
            x <<= 64;
            x += mpz_class(gen_());
        }
        if (bits > 0)
            mpz_tdiv_r_2exp(x.get_mpz_t(), x.get_mpz_t(), bits);
        if (x < bound)
            return x;
    }
}

} // namespace pairkit
