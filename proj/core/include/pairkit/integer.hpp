// pairkit: exact-arithmetic bilinear pairings on elliptic curves
// Copyright 2026 The pairkit Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <gmpxx.h>

namespace pairkit {

// Miller-Rabin primality test. Deterministic for n below 3.317e24 (the twelve
// prime bases 2..37); above that, 64 rounds with the first 64 primes as bases,
// so results stay reproducible across runs.
bool is_prime(const mpz_class& n);

mpz_class pow_mod(const mpz_class& base, const mpz_class& exp, const mpz_class& mod);

// Floor square root.
mpz_class isqrt(const mpz_class& n);

// Number of bits in |n|; bit_length(0) == 0.
std::size_t bit_length(const mpz_class& n);

// a / b when b divides a exactly; throws DivisibilityViolation otherwise.
mpz_class exact_div(const mpz_class& a, const mpz_class& b);

// Non-negative remainder in [0, m).
mpz_class mod_floor(const mpz_class& a, const mpz_class& m);

// splitmix64 finalizer, used to derive child RNG streams.
std::uint64_t mix64(std::uint64_t x) noexcept;

} // namespace pairkit
