// pairkit: exact-arithmetic bilinear pairings on elliptic curves
// Copyright 2026 The pairkit Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pairkit/field.hpp"
#include "pairkit/rng.hpp"

namespace pairkit {

class Curve;
using CurvePtr = std::shared_ptr<const Curve>;

// Affine point or the point at infinity. Points do not hold a curve pointer;
// curve operations validate membership where it matters.
class Point {
public:
    Point() = default;

    static Point infinity() { return Point(); }
    static Point affine(FieldElement x, FieldElement y);

    bool is_infinity() const noexcept { return infinity_; }
    const FieldElement& x() const;
    const FieldElement& y() const;

    bool operator==(const Point& rhs) const;
    bool operator!=(const Point& rhs) const { return !(*this == rhs); }

    std::string str() const;

private:
    bool infinity_ = true;
    FieldElement x_;
    FieldElement y_;
};

// Strict weak order: infinity first, then lexicographic on (x, y).
struct PointLess {
    bool operator()(const Point& a, const Point& b) const;
};

// A line in the function field of a curve: the constant 1, a vertical
// X - x0, or a chord/tangent (Y - y0) - lambda (X - x0).
class Line {
public:
    enum class Kind { One, Vertical, Chord };

    static Line one(FieldPtr field);
    static Line vertical(FieldElement x0);
    static Line chord(FieldElement lambda, FieldElement x0, FieldElement y0);

    Kind kind() const noexcept { return kind_; }
    const FieldPtr& field() const noexcept { return field_; }
    const FieldElement& lambda() const;
    const FieldElement& x0() const;
    const FieldElement& y0() const;

    // Value at an affine point (not necessarily on a curve).
    FieldElement eval(const Point& at) const;

    std::string str() const;

private:
    Line(Kind kind, FieldPtr field) : kind_(kind), field_(std::move(field)) {}

    Kind kind_;
    FieldPtr field_;
    FieldElement lambda_;
    FieldElement x0_;
    FieldElement y0_;
};

// Group-law result together with the two lines used: ell vanishes on
// {P, Q, -(P+Q)}, vee on {P+Q, -(P+Q)}. Unused slots are the constant 1.
struct AddResult {
    Point sum;
    Line ell;
    Line vee;
};

// Long Weierstrass curve Y^2 + a1 XY + a3 Y = X^3 + a2 X^2 + a4 X + a6
// over a finite field of characteristic >= 5.
class Curve : public std::enable_shared_from_this<Curve> {
public:
    static CurvePtr make(FieldPtr field, FieldElement a1, FieldElement a2, FieldElement a3,
                         FieldElement a4, FieldElement a6,
                         std::optional<mpz_class> order = std::nullopt);
    static CurvePtr make_short(const FieldPtr& field, const FieldElement& a4,
                               const FieldElement& a6,
                               std::optional<mpz_class> order = std::nullopt);

    // Same equation with a (different) group order annotation.
    CurvePtr with_order(mpz_class order) const;
    // Same equation read over a larger field with the same characteristic.
    // The order annotation does not carry over.
    CurvePtr base_change(const FieldPtr& target) const;

    const FieldPtr& field() const noexcept { return field_; }
    const FieldElement& a1() const noexcept { return a1_; }
    const FieldElement& a2() const noexcept { return a2_; }
    const FieldElement& a3() const noexcept { return a3_; }
    const FieldElement& a4() const noexcept { return a4_; }
    const FieldElement& a6() const noexcept { return a6_; }
    const std::optional<mpz_class>& order() const noexcept { return order_; }
    const FieldElement& discriminant() const noexcept { return disc_; }
    bool short_form() const;

    bool same_equation(const Curve& other) const;

    bool contains(const Point& p) const;
    // Validated affine point constructor.
    Point point(const FieldElement& x, const FieldElement& y) const;
    // Reads a point with prime-subfield coordinates on the corresponding
    // base-changed curve.
    Point lift_to(const Point& p, const CurvePtr& target) const;

    Point neg(const Point& p) const;
    AddResult add(const Point& p, const Point& q) const;
    Point add_points(const Point& p, const Point& q) const;
    Point sub_points(const Point& p, const Point& q) const;
    Point mul(const mpz_class& n, const Point& p) const;

    // X^3 + a2 X^2 + a4 X + a6 and a1 X + a3.
    FieldElement rhs_at(const FieldElement& x) const;
    FieldElement h_at(const FieldElement& x) const;
    // The y-coordinates over x, canonically ordered; size 0, 1, or 2.
    std::vector<FieldElement> ys_at(const FieldElement& x) const;

    // 2Y + a1 X + a3 = 0, i.e. p is fixed by the hyperelliptic involution.
    // True at infinity.
    bool is_ramified(const Point& p) const;
    // 3x^2 + 2 a2 x + a4 - a1 y, the numerator of the tangent slope.
    FieldElement tangent_numerator(const Point& p) const;

    // All rational points, infinity first. Requires field order <= 2^20.
    std::vector<Point> enumerate_points() const;
    mpz_class count_points() const;

    // Coordinate-wise q^i-power Frobenius; requires coefficients fixed by it.
    Point frobenius(const Point& p, const mpz_class& q, unsigned i = 1) const;
    // Sum of frobenius(p, q, i) for 0 <= i < k.
    Point trace(const Point& p, const mpz_class& q, unsigned k) const;

    std::string describe() const;

private:
    Curve(FieldPtr field, FieldElement a1, FieldElement a2, FieldElement a3, FieldElement a4,
          FieldElement a6, std::optional<mpz_class> order);

    FieldPtr field_;
    FieldElement a1_, a2_, a3_, a4_, a6_;
    FieldElement disc_;
    std::optional<mpz_class> order_;
};

// Uniform random rational point; canonical y choice is not guaranteed.
Point random_point(const CurvePtr& curve, Rng& rng);

// Uniform random point of curve (defined over the prime subfield, read over
// a big field L) whose coordinates lie in the subfield of the given order.
Point random_point_over_subfield(const CurvePtr& curve, const mpz_class& sub_order, Rng& rng);

// Trace of the q^j-power Frobenius from the trace t of the q-power one:
// t_0 = 2, t_1 = t, t_{j+1} = t t_j - q t_{j-1}.
mpz_class trace_power(const mpz_class& t, const mpz_class& q, unsigned j);

// Degree-d twist E' of a short-form curve E/F_q together with the
// isomorphism psi: E' -> E, (x, y) |-> (sx x, sy y) defined over ext.
struct Twist {
    CurvePtr source;      // E' over the base field
    CurvePtr source_ext;  // E' read over ext
    CurvePtr target;      // E read over ext
    unsigned d = 0;       // twist degree
    unsigned e = 0;       // k / d
    unsigned class_index = 0;
    FieldElement D;       // twisting constant in the base field
    FieldElement sx;      // scale factors in ext
    FieldElement sy;
    mpz_class order_e;    // #E'(F_{q^e})
    mpz_class trace_e;

    Point apply(const Point& p) const;
    Point apply_inverse(const Point& p) const;
};

// base must carry its group order and be in short form over a prime field.
// d must divide the extension degree of ext over the base field. class_index
// selects among the distinct twist classes of degree d in a deterministic
// enumeration order.
Twist make_twist(const CurvePtr& base, const FieldPtr& ext, unsigned d, unsigned class_index,
                 Rng& rng);

// Non-rational endomorphism phi: E -> E over ext for the two standard
// families Y^2 = X^3 + a4 X (p = 3 mod 4) and Y^2 = X^3 + a6 (p = 2 mod 3).
struct Distortion {
    CurvePtr target;  // E read over ext
    FieldElement sx;  // phi(x, y) = (sx x, sy y)
    FieldElement sy;
    int family = 0;   // 1: (-x, iy), 2: (zeta3 x, y)

    Point apply(const Point& p) const;
};

Distortion make_distortion(const CurvePtr& base, const FieldPtr& ext);

// Try-and-increment hashing to the subgroup cut out by the cofactor:
// returns cofactor * H(msg, counter) for the first counter giving a curve
// point with nonzero image.
Point hash_to_subgroup(const CurvePtr& curve, const mpz_class& cofactor, std::string_view msg,
                       std::string_view domain = "pairkit-h2c-g1");

// Hashing into the trace-zero subgroup of E over an extension: maps the
// cofactor2-multiple S of a hashed point to k S - Tr(S).
Point hash_to_trace_zero(const CurvePtr& ext_curve, const mpz_class& q, unsigned k,
                         const mpz_class& cofactor2, std::string_view msg,
                         std::string_view domain = "pairkit-h2c-g2");

} // namespace pairkit
