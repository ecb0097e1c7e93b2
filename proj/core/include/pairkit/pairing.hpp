// pairkit: exact-arithmetic bilinear pairings on elliptic curves
// Copyright 2026 The pairkit Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pairkit/curve.hpp"
#include "pairkit/miller.hpp"
#include "pairkit/rng.hpp"

namespace pairkit {

class PairingContext;
using ContextPtr = std::shared_ptr<const PairingContext>;

// A pairing output: the value, whether it has been reduced to an r-th root
// of unity, and loop metadata for reporting.
struct PairingValue {
    FieldElement value;
    bool reduced = false;
    std::size_t loop_bits = 0;     // bit length of the largest Miller parameter
    std::size_t miller_calls = 0;  // number of Miller evaluations performed
};

// A pairing value together with the exponent relating it to the reduced
// Tate pairing of the same arguments. The exact relation (and orientation)
// is documented at the producing operation; r | tate_exponent flags a
// degenerate instance in every case.
struct PoweredPairing {
    PairingValue pairing;
    mpz_class tate_exponent;
};

// Shared immutable setting for all pairings on one curve. Two modes:
//
// Structured contexts carry a prime base field F_q, the embedding degree k
// of r (minimal with r | q^k - 1, k >= 2), the extension curve over
// F_{q^k}, and eigenspace generators: g1 with Frobenius eigenvalue 1 and
// g2 with eigenvalue q (trace zero). These support the full pairing zoo.
//
// Torsion contexts carry a single curve over a field L with E[r] fully
// rational and enumerable. They support Weil and Tate pairings, which need
// no eigenstructure; the eigenvalue-based pairings refuse them.
//
// All pairing arguments live on ext(); base-field points are lifted with
// lift(). Points of E[r] are enumerated and the group structure of E(L)
// is computed whenever L is small enough to enumerate.
class PairingContext {
public:
    static ContextPtr make(const CurvePtr& base, const mpz_class& r, unsigned k, Rng& rng);
    static ContextPtr make_torsion(const CurvePtr& curve, const mpz_class& r);

    bool structured() const noexcept { return structured_; }
    const CurvePtr& base() const noexcept { return base_; }
    const CurvePtr& ext() const noexcept { return ext_; }
    const mpz_class& q() const noexcept { return q_; }
    const mpz_class& p() const noexcept { return p_; }
    unsigned k() const noexcept { return k_; }
    const mpz_class& r() const noexcept { return r_; }
    const mpz_class& order_base() const noexcept { return order_base_; }
    const mpz_class& order_ext() const noexcept { return order_ext_; }
    const mpz_class& trace_of_frobenius() const noexcept { return t_; }
    mpz_class T() const { return t_ - 1; }
    const mpz_class& h1() const noexcept { return h1_; }
    const mpz_class& h2() const noexcept { return h2_; }
    const Point& g1() const noexcept { return g1_; }
    const Point& g2() const noexcept { return g2_; }
    const Point& g1_base() const noexcept { return g1_base_; }
    // Largest degree d | k for which the curve has a twist of degree d
    // (short form, characteristic >= 5); empty when none qualifies.
    std::optional<unsigned> twist_degree() const noexcept { return twist_d_; }
    // E(L) as Z/r1 x Z/r2 with r1 | r2; set when L is enumerable.
    const std::optional<std::pair<mpz_class, mpz_class>>& structure() const noexcept {
        return structure_;
    }
    // E[r] on ext(), infinity first; empty when L is not enumerable.
    const std::vector<Point>& torsion_points() const noexcept { return torsion_points_; }
    // All of E(L), infinity first; empty when L is not enumerable.
    const std::vector<Point>& all_points() const noexcept { return all_points_; }

    Point lift(const Point& base_point) const;
    Point frobenius_map(const Point& pt, unsigned i = 1) const;
    Point trace_map(const Point& pt) const;
    bool is_torsion(const Point& pt) const;
    bool in_g1(const Point& pt) const;
    bool in_g2(const Point& pt) const;

    // (#L - 1)/r, the reduction exponent onto r-th roots of unity.
    const mpz_class& reduction_exponent() const noexcept { return reduction_exponent_; }
    FieldElement reduce(const FieldElement& v) const { return pow(v, reduction_exponent_); }

    std::string describe() const;

private:
    PairingContext() = default;

    bool structured_ = false;
    CurvePtr base_, ext_;
    mpz_class q_, p_, r_, order_base_, order_ext_, t_, h1_, h2_, reduction_exponent_;
    unsigned k_ = 1;
    Point g1_, g2_, g1_base_;
    std::optional<unsigned> twist_d_;
    std::optional<std::pair<mpz_class, mpz_class>> structure_;
    std::vector<Point> torsion_points_;
    std::vector<Point> all_points_;
};

// The Weil pairing on E[r] x E[r], an r-th root of unity, by one of three
// equivalent definitions.
//
// Definition 1 translates the function g with divisor
// sum_{R in E[r]} ([P0 + R] - [R]), r P0 = P, by Q and takes the constant
// ratio. It needs E[r] and an r-division point of P inside ext(), so it is
// feasible only on enumerable contexts (Def1Infeasible otherwise).
//
// Definition 2 is (-1)^r f_P(Q) / f_Q(P) with monic Miller functions,
// completed to 1 when P = Q or either argument is infinity. Support
// collisions are resolved exactly: first by rebuilding the chain around the
// colliding values, then by evaluating the factored function through its
// leading values.
//
// Definition 3 is f_{D_P}(D_Q) / f_{D_Q}(D_P) on randomized equivalent
// divisors with disjoint supports; no sign factor appears.
PairingValue weil(const ContextPtr& ctx, const Point& P, const Point& Q, int definition,
                  Rng& rng);

// The Tate pairing of P in E[r] and Q in E(L). Definition 1 evaluates
// f_{D_P} at D_Q on randomized representatives; definition 2 evaluates
// f_P(Q) directly, replacing Q by Q + rR when P = Q or on a support
// collision (which moves the value within its coset of r-th powers).
// Unreduced values are coset representatives modulo r-th powers; reduced
// values are exact r-th roots of unity and definition-independent.
PairingValue tate(const ContextPtr& ctx, const Point& P, const Point& Q, int definition,
                  bool reduced, Rng& rng);

// The map E(L)/rE(L) -> E[r], Q -> (r2/r) Q, valid when the group
// structure is known and gcd(r2/r1, r) = 1 (NotInjective otherwise).
Point torsion_representative(const ContextPtr& ctx, const Point& Q);

// The ate family. Untwisted: base point Q in G2, evaluation at P in G1;
// i = 1 uses lambda = T (the classic ate pairing), i >= 2 uses
// lambda = T^i mod r. Twisted: base point P in G1, evaluation at Q in G2,
// with lambda = T^e for i = 1 and T^{ei} mod r for i >= 2, where e = k/d
// for the stored twist degree d (MissingTwist when absent).
// DegeneratePairing is raised when r^2 | T^{jk'} - 1 for the effective
// power j and k' = k/gcd(k, j).
PairingValue ate_family(const ContextPtr& ctx, const Point& P, const Point& Q, unsigned i,
                        bool twisted, bool reduced);

// The R-ate pairing for a decomposition t1 = t0*l1 + l0 (BadDecomposition
// otherwise): f_{l1, t0 Q}(P) * f_{l0, Q}(P) * l_{t0 l1 Q, l0 Q}(P) /
// v_{t1 Q}(P), with base Q in G2 evaluated at P in G1. The returned
// exponent M satisfies reduced value = reduced_tate(Q, P)^M; the pairing
// is non-degenerate iff r does not divide M. t0 and t1 must be congruent
// to powers of q modulo r.
PoweredPairing r_ate(const ContextPtr& ctx, const Point& P, const Point& Q,
                     const mpz_class& t0, const mpz_class& t1, const mpz_class& l0,
                     const mpz_class& l1, bool reduced);

enum class HessMode { Generic, Vercauteren, Twisted };

// The Hess pairing for an integer polynomial t (coefficients constant
// first) and a k-th root of unity y mod r with r | t(y): evaluates the
// function with divisor sum_i t_i ([y^i Q] - [O]) at P via the
// product-of-Miller-functions decomposition. Generic mode uses explicit
// multiples R_i = (y^i mod r) Q; Vercauteren mode requires y = q, shares
// one multi-target Miller pass for all f_{t_i, Q} and applies Frobenius
// powers; Twisted mode swaps the roles of P and Q and requires y^d = 1
// mod r for the stored twist degree d.
//
// The reduced value satisfies value = reduced_tate(Q, P)^E with
// E = t(y)/r - sum_i t_i f_tate_exponent(y^i) mod r (P and Q swapped in
// twisted mode, with the analogous exponent over d and q^e); the pairing
// is non-degenerate iff r does not divide E. The returned exponent is
// N = nondegeneracy_exponent(t, y, q, k, r); the classical relation
// value^{k q^{k-1}} = reduced_tate(Q, P)^N is exact when every monomial
// of t with r-indivisible coefficient sits at i = 0 or has y^i = q mod r
// (with y = q this means deg t <= 1, covering the constant polynomial r
// and Y - T); for other monomials the classical per-power reduction
// k q^{k-1} f_tate_exponent(y^i) = (y^{ik} - 1)/r mod r fails, so E is
// the relation to rely on.
PoweredPairing hess(const ContextPtr& ctx, const Point& P, const Point& Q,
                    const std::vector<mpz_class>& t, const mpz_class& y, HessMode mode,
                    bool reduced);

// N = (k q^{k-1} t(y) - (t(y^k) - t(1))) / r, the classical non-degeneracy
// certificate for the Hess pairing; see hess for its exact validity
// domain. Exact integer; DivisibilityViolation when r does not divide
// t(y) or the numerator.
mpz_class nondegeneracy_exponent(const std::vector<mpz_class>& t, const mpz_class& y,
                                 const mpz_class& q, unsigned k, const mpz_class& r);

// The exponent M mod r with reduced(f_{m, Q}(P)) = reduced_tate(Q, P)^M
// for Q in G2, P in G1, where m must be congruent to a power of q mod r.
mpz_class f_tate_exponent(const ContextPtr& ctx, const mpz_class& m);

// Reduced Tate pairing computed with all vertical lines omitted
// (denominator elimination). Requires an r > 0 pure addition chain, P with
// base-field coordinates and x(Q) in the base field, so that every omitted
// factor dies under the final exponentiation; the result equals the full
// reduced computation exactly.
PairingValue tate_bkls(const ContextPtr& ctx, const Point& P, const Point& Q);

} // namespace pairkit
