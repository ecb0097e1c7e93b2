// pairkit: exact-arithmetic bilinear pairings on elliptic curves
// Copyright 2026 The pairkit Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <utility>
#include <vector>

#include "pairkit/field.hpp"
#include "pairkit/rng.hpp"

namespace pairkit {

// Dense univariate polynomials with FieldElement coefficients, constant-term
// first. Small degrees only (line intersection cubics, root extraction), so
// everything is schoolbook.
class FPoly {
public:
    explicit FPoly(FieldPtr field) : field_(std::move(field)) {}
    FPoly(FieldPtr field, std::vector<FieldElement> coeffs)
        : field_(std::move(field)), c_(std::move(coeffs)) {
        trim();
    }

    static FPoly x(const FieldPtr& field);
    static FPoly constant(const FieldElement& value);

    const FieldPtr& field() const noexcept { return field_; }
    const std::vector<FieldElement>& coeffs() const noexcept { return c_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    const FieldElement& leading() const { return c_.back(); }

    FieldElement eval(const FieldElement& at) const;

    FPoly operator+(const FPoly& rhs) const;
    FPoly operator-(const FPoly& rhs) const;
    FPoly operator*(const FPoly& rhs) const;
    FPoly times(const FieldElement& scalar) const;

    // Remainder modulo a nonzero divisor.
    FPoly rem(const FPoly& divisor) const;
    // Exact division; remainder must vanish.
    FPoly quotient(const FPoly& divisor) const;

    FPoly monic() const;

    void trim();

private:
    FieldPtr field_;
    std::vector<FieldElement> c_;
};

FPoly gcd(FPoly a, FPoly b);
FPoly pow_mod(FPoly base, const mpz_class& e, const FPoly& modulus);

// All roots of f in its coefficient field, with multiplicity, sorted
// lexicographically. fully_split reports whether f factors into linear terms
// times a constant over the field.
struct RootList {
    std::vector<std::pair<FieldElement, unsigned>> roots;
    bool fully_split = false;
};
RootList roots_of(const FPoly& f, Rng& rng);

// Solutions of x^n = value for n in {2, 3, 4}; empty when none exist.
std::vector<FieldElement> nth_roots(const FieldElement& value, unsigned n, Rng& rng);

} // namespace pairkit
