// pairkit: exact-arithmetic bilinear pairings on elliptic curves
// Copyright 2026 The pairkit Authors.
// SPDX-License-Identifier: Apache-2.0
#include "pairkit/integer.hpp"

#include <array>

#include "pairkit/errors.hpp"

namespace pairkit {

namespace {

// First 64 primes; doubles as the trial-division sieve and the Miller-Rabin
// base list for large inputs.
constexpr std::array<unsigned, 64> kSmallPrimes = {
    2,   3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,  41,  43,  47,  53,
    59,  61,  67,  71,  73,  79,  83,  89,  97,  101, 103, 107, 109, 113, 127, 131,
    137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191, 193, 197, 199, 211, 223,
    227, 229, 233, 239, 241, 251, 257, 263, 269, 271, 277, 281, 283, 293, 307, 311};

bool witness_composite(const mpz_class& n, const mpz_class& a, const mpz_class& d, unsigned long s) {
    mpz_class x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1)
        return false;
    for (unsigned long i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n - 1)
            return false;
    }
    return true;
}

} // namespace

bool is_prime(const mpz_class& n) {
    if (n < 2)
        return false;
    for (unsigned p : kSmallPrimes) {
        if (n == p)
            return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p))
            return false;
    }

    mpz_class d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

    // Sorenson & Webster: the first twelve prime bases decide primality below
    // 3317044064679887385961981.
    static const mpz_class kDeterministicBound("3317044064679887385961981");
    std::size_t bases = n < kDeterministicBound ? 12 : kSmallPrimes.size();
    for (std::size_t i = 0; i < bases; ++i) {
        if (witness_composite(n, mpz_class(kSmallPrimes[i]), d, s))
            return false;
    }
    return true;
}

mpz_class pow_mod(const mpz_class& base, const mpz_class& exp, const mpz_class& mod) {
    mpz_class out;
    if (exp < 0) {
        mpz_class inv;
        if (mpz_invert(inv.get_mpz_t(), base.get_mpz_t(), mod.get_mpz_t()) == 0)
            fail(Errc::DivisionByZero, "base not invertible modulo " + mod.get_str());
        mpz_class e = -exp;
        mpz_powm(out.get_mpz_t(), inv.get_mpz_t(), e.get_mpz_t(), mod.get_mpz_t());
        return out;
    }
    mpz_powm(out.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
    return out;
}

mpz_class isqrt(const mpz_class& n) {
    mpz_class out;
    mpz_sqrt(out.get_mpz_t(), n.get_mpz_t());
    return out;
}

std::size_t bit_length(const mpz_class& n) {
    if (n == 0)
        return 0;
    return mpz_sizeinbase(n.get_mpz_t(), 2);
}

mpz_class exact_div(const mpz_class& a, const mpz_class& b) {
    if (b == 0)
        fail(Errc::DivisionByZero, "exact_div by zero");
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
        fail(Errc::DivisibilityViolation, b.get_str() + " does not divide " + a.get_str());
    mpz_class out;
    mpz_divexact(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

mpz_class mod_floor(const mpz_class& a, const mpz_class& m) {
    mpz_class out;
    mpz_fdiv_r(out.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return out;
}

std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace pairkit
