// pairkit: exact-arithmetic bilinear pairings on elliptic curves
// Copyright 2026 The pairkit Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

#include "pairkit/errors.hpp"
#include "pairkit/function.hpp"
#include "pairkit/rng.hpp"

namespace pairkit {

// One entry of an addition-negation chain. Init contributes the value 1,
// Add the sum of two earlier entries, Neg the negation of one.
struct ChainStep {
    enum class Kind { Init, Add, Neg };
    Kind kind = Kind::Init;
    std::size_t j = 0;
    std::size_t k = 0;
};

// An addition-negation chain over the integers, with designated targets.
// Entry 0 is always Init with value 1; every later entry references
// earlier ones only.
class Chain {
public:
    // Left-to-right double-and-add chain for one target.
    static Chain single(const mpz_class& n);
    // Like single, but no entry takes a forbidden value. Fails with
    // UnreachableTarget when the target or a mandatory entry is forbidden
    // or no detour stays clear.
    static Chain avoiding(const mpz_class& n, const std::vector<mpz_class>& forbidden);
    // One chain containing all targets, sharing entries by value.
    static Chain multi(const std::vector<mpz_class>& targets);

    const std::vector<ChainStep>& steps() const noexcept { return steps_; }
    const std::vector<mpz_class>& values() const noexcept { return values_; }
    const std::vector<std::size_t>& targets() const noexcept { return targets_; }
    const mpz_class& value_of(std::size_t idx) const { return values_.at(idx); }
    std::size_t target_index(std::size_t which = 0) const { return targets_.at(which); }

    // Structural consistency (InvalidParameters on violation).
    void validate() const;

private:
    std::size_t push(ChainStep step, mpz_class value);

    std::vector<ChainStep> steps_;
    std::vector<mpz_class> values_;
    std::vector<std::size_t> targets_;
};

// A support collision inside a Miller evaluation: a line of the chain entry
// with the given value vanished at an evaluation point.
class CollisionError : public Error {
public:
    CollisionError(mpz_class chain_value, Point at);

    const mpz_class& chain_value() const noexcept { return chain_value_; }
    const Point& at() const noexcept { return at_; }

private:
    mpz_class chain_value_;
    Point at_;
};

// One term of an evaluation divisor; points must be affine.
struct EvalTerm {
    Point at;
    mpz_class mult;
};

// Factored Miller evaluation: for each chain target index t with value v,
// the function f_{v,P} with divisor v[P] - [vP] - (v-1)[O] as an exact
// product of lines, together with vP.
struct MillerFactored {
    std::vector<LineProduct> functions;
    std::vector<Point> points;
};
MillerFactored miller_factored(const CurvePtr& curve, const Chain& chain, const Point& p);

// Evaluation options. omit_verticals drops every vertical-line factor
// (denominator elimination); the caller must guarantee those factors die
// under its final exponentiation. Only negation-free chains qualify,
// since a negation inverts the running value (InvalidParameters).
struct MillerOptions {
    bool omit_verticals = false;
};

// Evaluated Miller: f_{v,P}(D) for each target, where D is given by terms.
// All line values are accumulated separately for the numerator and the
// denominator of f and for the positive and negative parts of D; a single
// division at the end yields the exact value. Vanishing line values raise
// CollisionError with the chain value that produced them.
std::vector<FieldElement> miller_evaluated(const CurvePtr& curve, const Chain& chain,
                                           const Point& p, const std::vector<EvalTerm>& divisor);
std::vector<FieldElement> miller_evaluated(const CurvePtr& curve, const Chain& chain,
                                           const Point& p, const std::vector<EvalTerm>& divisor,
                                           const MillerOptions& options);

// f_{n,P}(D) with a plain chain.
FieldElement miller_value(const CurvePtr& curve, const mpz_class& n, const Point& p,
                          const std::vector<EvalTerm>& divisor);

// f_{n,P}(D), rebuilding the chain around collisions: every collision value
// is added to the forbidden set and the chain is rebuilt, up to max_retries
// times. UnreachableTarget propagates when no chain can dodge the support.
FieldElement miller_avoiding(const CurvePtr& curve, const mpz_class& n, const Point& p,
                             const std::vector<EvalTerm>& divisor, int max_retries = 64);

// Collision handling strategies for f_{n,P}(D).
//
// ShiftDivisor replaces D by the equivalent divisor translated by a random
// point S (degree-zero D required): the value changes only within the
// equivalence used by divisor-based pairings.
// ShiftByNR replaces the single point Q of D = [Q] by Q + nR for random R:
// f_{n,Q+nR} differs from f_{n,Q} multiplicatively by values that the
// caller's reduction kills.
// AvoidChain rebuilds the chain around the colliding multiples; the value
// of f_{n,P}(D) itself is unchanged.
enum class AvoidanceStrategy { ShiftDivisor, ShiftByNR, AvoidChain };

FieldElement miller_with_avoidance(const CurvePtr& curve, const mpz_class& n, const Point& p,
                                   const std::vector<EvalTerm>& divisor,
                                   AvoidanceStrategy strategy, Rng& rng, int max_retries = 64);

} // namespace pairkit
