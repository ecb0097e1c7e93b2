// pairkit: exact-arithmetic bilinear pairings on elliptic curves
// Copyright 2026 The pairkit Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pairkit/curve.hpp"

namespace pairkit {

// Formal Z-linear combination of points, the point at infinity included.
class Divisor {
public:
    explicit Divisor(CurvePtr curve) : curve_(std::move(curve)) {}

    static Divisor of_point(const CurvePtr& curve, const Point& p, const mpz_class& n = 1);

    const CurvePtr& curve() const noexcept { return curve_; }
    const std::map<Point, mpz_class, PointLess>& terms() const noexcept { return terms_; }

    void add_point(const Point& p, const mpz_class& n);
    mpz_class coeff(const Point& p) const;

    Divisor operator+(const Divisor& rhs) const;
    Divisor operator-(const Divisor& rhs) const;
    Divisor operator*(const mpz_class& n) const;
    Divisor operator-() const { return *this * mpz_class(-1); }

    bool operator==(const Divisor& rhs) const { return terms_ == rhs.terms_; }
    bool operator!=(const Divisor& rhs) const { return !(*this == rhs); }

    bool is_zero() const noexcept { return terms_.empty(); }
    // Sum of the coefficients.
    mpz_class degree() const;
    // Sum of n_P P in the group.
    Point group_sum() const;
    // Degree zero and group sum O.
    bool principal() const;
    // Sum of |n_P| over affine P.
    mpz_class affine_mass() const;

    std::string str() const;

private:
    CurvePtr curve_;
    std::map<Point, mpz_class, PointLess> terms_;
};

// A function on the curve kept in factored form: a product of lines with
// integer exponents. Every line is monic with respect to the uniformizer
// X/Y at infinity, so products stay monic and leading values are exact.
class LineProduct {
public:
    explicit LineProduct(CurvePtr curve) : curve_(std::move(curve)) {}

    const CurvePtr& curve() const noexcept { return curve_; }
    const std::vector<std::pair<Line, mpz_class>>& factors() const noexcept { return factors_; }

    void mul_line(const Line& line, const mpz_class& e = 1);
    void mul(const LineProduct& other);
    void div(const LineProduct& other);
    // Raise the whole product to the e-th power.
    void pow_in_place(const mpz_class& e);

    // Order of vanishing at any point, infinity included.
    mpz_class ord_at(const Point& p) const;
    // Leading coefficient of the expansion at p in the canonical uniformizer:
    // X - x_P off the ramification locus, Y - y_P on it, X/Y at infinity.
    FieldElement leading_value_at(const Point& p) const;
    // Plain value at an affine point; fails on poles (DivisionByZero).
    FieldElement evaluate(const Point& p) const;
    // prod f(P)^{n_P}; the supports must be disjoint (SupportCollision).
    // At infinity the value is the leading coefficient, which requires
    // ord 0 there.
    FieldElement evaluate(const Divisor& d) const;

    // The principal divisor of the product. All line zeros must be rational
    // (NonRationalSupport otherwise).
    Divisor divisor(Rng& rng) const;

    std::string str() const;

private:
    CurvePtr curve_;
    std::vector<std::pair<Line, mpz_class>> factors_;
};

// Tame symbol <f, g>_P = (-1)^{ab} lead(f)^b / lead(g)^a with a = ord_P f,
// b = ord_P g.
FieldElement tame_symbol(const LineProduct& f, const LineProduct& g, const Point& p);

// prod over the union of supports of the tame symbols; equals 1 by Weil
// reciprocity.
FieldElement weil_reciprocity_product(const LineProduct& f, const LineProduct& g, Rng& rng);

// A function with the given principal divisor, built from chords and
// verticals by mass reduction. NotPrincipal when none exists.
LineProduct function_from_divisor(const CurvePtr& curve, const Divisor& d);

} // namespace pairkit
