// pairkit: exact-arithmetic bilinear pairings on elliptic curves
// Copyright 2026 The pairkit Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include <gmpxx.h>

#include "pairkit/pairing.hpp"
#include "pairkit/rng.hpp"

namespace pairkit {

using IntMatrix = std::vector<std::vector<mpz_class>>;

// The lattice of integer polynomials t (coefficient vectors, constant term
// first) with t(y) = 0 mod r, cut to the given dimension. Basis rows are
// r*e0 and e_i - (y^i mod r)*e0; the determinant is r up to sign, and every
// integer row combination keeps r | t(y).
struct RootLattice {
    IntMatrix basis;
    mpz_class r;
    mpz_class y;
};

// dim is phi(k) for the intended root order k. y must be invertible mod r
// (NotRootOfUnity otherwise); r must exceed 1 and dim must be positive.
RootLattice build_lattice(const mpz_class& r, const mpz_class& y, unsigned dim);

// LLL reduction with delta = 99/100 over exact rational Gram-Schmidt data.
// The basis must be square, of dimension at most 8, and full-rank
// (RankDeficient otherwise).
IntMatrix lll_reduce(const IntMatrix& basis);

// Whether the basis is size-reduced and satisfies the Lovasz condition with
// delta = 99/100; post-hoc certificate for lll_reduce results.
bool lovasz_holds(const IntMatrix& basis);

// The canonical shortest row of the LLL-reduced basis: among rows of minimal
// euclidean norm, each normalized so its first nonzero entry is positive,
// the lexicographically smallest one.
std::vector<mpz_class> shortest_vector(const IntMatrix& basis);

// A polynomial curve family: for integer x0 with p(x0) and r(x0) prime there
// is a curve over F_p(x0) with trace u(x0) and a subgroup of order r(x0) of
// embedding degree k. Coefficient vectors are constant term first.
struct CurveFamily {
    unsigned k = 0;
    std::vector<mpz_class> p_poly;
    std::vector<mpz_class> u_poly;
    std::vector<mpz_class> r_poly;
};

// The k = 10 family with p = 25x^4 + 25x^3 + 25x^2 + 10x + 3,
// u = 10x^2 + 5x + 3, r = 25x^4 + 25x^3 + 15x^2 + 5x + 1.
CurveFamily freeman_family();

struct FamilyInstance {
    mpz_class x0;
    ContextPtr context;
};

// Instantiates the family at the integer x0 of smallest absolute value in
// [-max_abs_x, max_abs_x] (0, 1, -1, 2, ...) with p(x0) and r(x0) both
// prime and r(x0) | p(x0) + 1 - u(x0). The curve with the prescribed order
// is found by seeded random coefficient search: a candidate is accepted
// when the order annihilates a random point whose order is divisible by
// r(x0) (the order is then the unique multiple of r(x0) in the Hasse
// window) and the quadratic twist annihilates a point of its own order.
// NoInstanceInRange when no x0 qualifies; CurveSearchFailed when the window
// contains competing multiples of r or the search budget is exhausted.
FamilyInstance family_instantiate(const CurveFamily& family, const mpz_class& max_abs_x,
                                  Rng& rng);

} // namespace pairkit
