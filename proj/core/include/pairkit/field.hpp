// pairkit: exact-arithmetic bilinear pairings on elliptic curves
// Copyright 2026 The pairkit Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>
#include <gmpxx.h>

#include "pairkit/rng.hpp"

namespace pairkit {

class Field;
class FieldElement;
using FieldPtr = std::shared_ptr<const Field>;

// F_{p^k}, characteristic >= 5, represented as F_p[X]/(m) with m monic
// irreducible of degree k. Coefficient vectors are constant-term first and
// always reduced to [0, p). k = 1 gives the prime field itself (modulus X).
class Field : public std::enable_shared_from_this<Field> {
public:
    // Deterministic modulus: the first monic irreducible of degree k in the
    // fixed enumeration order (lower coefficients as base-p digits of a
    // counter).
    static FieldPtr make(const mpz_class& p, unsigned k);

    // Explicit modulus, constant-term first with k+1 coefficients; must be
    // monic and irreducible.
    static FieldPtr make(const mpz_class& p, std::vector<mpz_class> modulus);

    const mpz_class& p() const noexcept { return p_; }
    unsigned k() const noexcept { return k_; }
    const std::vector<mpz_class>& modulus() const noexcept { return modulus_; }
    const mpz_class& order() const noexcept { return order_; }
    const mpz_class& unit_order() const noexcept { return unit_order_; } // p^k - 1

    FieldElement zero() const;
    FieldElement one() const;
    // Embedding of an integer residue (constant polynomial).
    FieldElement from_int(const mpz_class& n) const;
    FieldElement element(std::vector<mpz_class> coeffs) const;
    // index written in base p gives the coefficients; the fixed enumeration
    // order used by deterministic searches (non-residues, twist constants).
    FieldElement element_at(const mpz_class& index) const;
    FieldElement random(Rng& rng) const;
    // First quadratic non-residue in enumeration order; cached after the
    // first call (not thread-safe).
    FieldElement nonresidue() const;

    bool operator==(const Field& other) const noexcept;
    bool operator!=(const Field& other) const noexcept { return !(*this == other); }

    std::string describe() const; // "F_7", "F_7^2 mod [1, 0, 1]"

private:
    Field(mpz_class p, unsigned k, std::vector<mpz_class> modulus);

    friend class FieldElement;

    mpz_class p_;
    unsigned k_;
    std::vector<mpz_class> modulus_;
    mpz_class order_;
    mpz_class unit_order_;
    mutable std::vector<mpz_class> nonresidue_; // empty until first use
};

class FieldElement {
public:
    FieldElement() = default; // empty element; usable only after assignment

    const FieldPtr& field() const noexcept { return field_; }
    const std::vector<mpz_class>& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const noexcept;
    bool is_one() const noexcept;
    // The constant coefficient; element must lie in the prime subfield.
    const mpz_class& to_int() const;
    bool in_prime_subfield() const noexcept;

    FieldElement operator-() const;
    FieldElement operator+(const FieldElement& rhs) const;
    FieldElement operator-(const FieldElement& rhs) const;
    FieldElement operator*(const FieldElement& rhs) const;
    FieldElement operator/(const FieldElement& rhs) const;
    FieldElement& operator+=(const FieldElement& rhs) { return *this = *this + rhs; }
    FieldElement& operator-=(const FieldElement& rhs) { return *this = *this - rhs; }
    FieldElement& operator*=(const FieldElement& rhs) { return *this = *this * rhs; }
    FieldElement& operator/=(const FieldElement& rhs) { return *this = *this / rhs; }

    FieldElement inverse() const;

    bool operator==(const FieldElement& rhs) const;
    bool operator!=(const FieldElement& rhs) const { return !(*this == rhs); }

    // Coefficient-wise lexicographic order (constant term first); total order
    // used for canonical square roots and point ordering.
    bool lex_less(const FieldElement& rhs) const;

    std::string str() const; // "[c0, c1, ...]", or "c0" for prime fields

private:
    friend class Field;
    FieldElement(FieldPtr field, std::vector<mpz_class> coeffs)
        : field_(std::move(field)), coeffs_(std::move(coeffs)) {}

    void check_same_field(const FieldElement& rhs) const;

    FieldPtr field_;
    std::vector<mpz_class> coeffs_;
};

// x^e, with negative e meaning the power of the inverse.
FieldElement pow(const FieldElement& x, const mpz_class& e);

// Canonical square root: the lexicographically smaller of the two roots.
// nullopt when x is a non-residue.
std::optional<FieldElement> sqrt(const FieldElement& x);

// Whether x is an n-th power residue: x^((#F - 1)/gcd(n, #F - 1)) == 1.
// Throws ZeroInput on x = 0.
bool residue_class(const FieldElement& x, unsigned n);

// Smallest d <= bound with x^d = 1, or nullopt.
std::optional<mpz_class> unity_order(const FieldElement& x, const mpz_class& bound);

} // namespace pairkit
