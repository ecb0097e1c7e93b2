// pairkit: exact-arithmetic bilinear pairings on elliptic curves
// Copyright 2026 The pairkit Authors.
// SPDX-License-Identifier: Apache-2.0
#include "pairkit/function.hpp"

#include <optional>
#include <set>

#include "pairkit/errors.hpp"
#include "pairkit/polynomial.hpp"

namespace pairkit {

// ---------------------------------------------------------------------------
// Divisor

Divisor Divisor::of_point(const CurvePtr& curve, const Point& p, const mpz_class& n) {
    Divisor d(curve);
    d.add_point(p, n);
    return d;
}

void Divisor::add_point(const Point& p, const mpz_class& n) {
    if (n == 0) return;
    if (!curve_->contains(p)) fail(Errc::NotOnCurve, "divisor term not on the curve");
    auto it = terms_.find(p);
    if (it == terms_.end()) {
        terms_.emplace(p, n);
        return;
    }
    it->second += n;
    if (it->second == 0) terms_.erase(it);
}

mpz_class Divisor::coeff(const Point& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

Divisor Divisor::operator+(const Divisor& rhs) const {
    Divisor out = *this;
    for (const auto& [p, n] : rhs.terms_) out.add_point(p, n);
    return out;
}

Divisor Divisor::operator-(const Divisor& rhs) const {
    Divisor out = *this;
    for (const auto& [p, n] : rhs.terms_) out.add_point(p, -n);
    return out;
}

Divisor Divisor::operator*(const mpz_class& n) const {
    Divisor out(curve_);
    if (n == 0) return out;
    for (const auto& [p, c] : terms_) out.add_point(p, c * n);
    return out;
}

mpz_class Divisor::degree() const {
    mpz_class sum = 0;
    for (const auto& [p, n] : terms_) sum += n;
    return sum;
}

Point Divisor::group_sum() const {
    Point acc = Point::infinity();
    for (const auto& [p, n] : terms_) acc = curve_->add_points(acc, curve_->mul(n, p));
    return acc;
}

bool Divisor::principal() const { return degree() == 0 && group_sum().is_infinity(); }

mpz_class Divisor::affine_mass() const {
    mpz_class sum = 0;
    for (const auto& [p, n] : terms_)
        if (!p.is_infinity()) sum += abs(n);
    return sum;
}

std::string Divisor::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [p, n] : terms_) {
        if (!out.empty()) out += " + ";
        out += n.get_str() + "[" + p.str() + "]";
    }
    return out;
}

// ---------------------------------------------------------------------------
// LineProduct

void LineProduct::mul_line(const Line& line, const mpz_class& e) {
    if (e == 0) return;
    if (line.kind() == Line::Kind::One) return;
    if (!(*line.field() == *curve_->field()))
        fail(Errc::FieldMismatch, "line over a different field than the curve");
    factors_.emplace_back(line, e);
}

void LineProduct::mul(const LineProduct& other) {
    for (const auto& [line, e] : other.factors_) mul_line(line, e);
}

void LineProduct::div(const LineProduct& other) {
    for (const auto& [line, e] : other.factors_) mul_line(line, -e);
}

void LineProduct::pow_in_place(const mpz_class& e) {
    if (e == 0) {
        factors_.clear();
        return;
    }
    for (auto& [line, exp] : factors_) exp *= e;
}

namespace {

// Intersection cubic of a chord with the curve: the monic cubic in X whose
// roots are the x-coordinates of the three intersection points,
// C = (X^3 + a2 X^2 + a4 X + a6) - w (w + a1 X + a3) for w = y0 + l (X - x0).
FPoly intersection_cubic(const Curve& curve, const Line& line) {
    const FieldPtr& F = curve.field();
    const FPoly w(F, {line.y0() - line.lambda() * line.x0(), line.lambda()});
    const FPoly h(F, {curve.a3(), curve.a1()});
    const FPoly g3(F, {curve.a6(), curve.a4(), curve.a2(), F->one()});
    return g3 - w * (w + h);
}

struct LocalData {
    mpz_class ord;
    FieldElement lead;
};

// Order and leading value of one line at a point, in the canonical
// uniformizer of the point.
LocalData line_local_data(const Curve& curve, const Line& line, const Point& p) {
    const FieldPtr& F = curve.field();
    if (p.is_infinity()) {
        switch (line.kind()) {
        case Line::Kind::One:
            return {0, F->one()};
        case Line::Kind::Vertical:
            return {-2, F->one()};
        case Line::Kind::Chord:
            return {-3, F->one()};
        }
    }
    if (line.kind() == Line::Kind::One) return {0, F->one()};

    const FieldElement value = line.eval(p);
    if (!value.is_zero()) return {0, value};

    if (line.kind() == Line::Kind::Vertical) {
        // X - x_P: the uniformizer itself off ramification; at a ramified
        // point X - x_P = u^2 / A (1 + O(u)) with A the tangent numerator.
        if (!curve.is_ramified(p)) return {1, F->one()};
        return {2, curve.tangent_numerator(p).inverse()};
    }

    // Chord through p. At a ramified point the chord is never tangent (the
    // tangent there is vertical), so it has a simple zero with unit leading
    // coefficient in u = Y - y_P.
    if (curve.is_ramified(p)) return {1, F->one()};

    // Off ramification, split the intersection cubic C = (X - x_P)^m h and
    // use l (l o sigma) = -C: ord = m, lead = -h(x_P) / l(sigma P).
    FPoly c = intersection_cubic(curve, line);
    const FPoly lin(F, {-p.x(), F->one()});
    mpz_class m = 0;
    while (c.degree() >= 1 && c.eval(p.x()).is_zero()) {
        c = c.quotient(lin);
        ++m;
    }
    const FieldElement denom = line.eval(curve.neg(p));
    if (m == 0 || denom.is_zero())
        fail(Errc::InvalidParameters, "inconsistent chord vanishing data");
    return {m, -c.eval(p.x()) / denom};
}

} // namespace

mpz_class LineProduct::ord_at(const Point& p) const {
    mpz_class sum = 0;
    for (const auto& [line, e] : factors_) sum += line_local_data(*curve_, line, p).ord * e;
    return sum;
}

FieldElement LineProduct::leading_value_at(const Point& p) const {
    FieldElement acc = curve_->field()->one();
    for (const auto& [line, e] : factors_)
        acc *= pow(line_local_data(*curve_, line, p).lead, e);
    return acc;
}

FieldElement LineProduct::evaluate(const Point& p) const {
    if (p.is_infinity()) fail(Errc::InvalidParameters, "plain evaluation at infinity");
    FieldElement acc = curve_->field()->one();
    for (const auto& [line, e] : factors_) {
        const FieldElement v = line.eval(p);
        if (v.is_zero()) {
            if (e < 0) fail(Errc::DivisionByZero, "evaluation at a pole: " + p.str());
            return curve_->field()->zero();
        }
        acc *= pow(v, e);
    }
    return acc;
}

FieldElement LineProduct::evaluate(const Divisor& d) const {
    FieldElement acc = curve_->field()->one();
    for (const auto& [p, n] : d.terms()) {
        if (ord_at(p) != 0)
            fail(Errc::SupportCollision, "divisor meets the function support at " + p.str());
        const FieldElement v = p.is_infinity() ? leading_value_at(p) : evaluate(p);
        acc *= pow(v, n);
    }
    return acc;
}

Divisor LineProduct::divisor(Rng& rng) const {
    Divisor out(curve_);
    for (const auto& [line, e] : factors_) {
        switch (line.kind()) {
        case Line::Kind::One:
            break;
        case Line::Kind::Vertical: {
            const auto ys = curve_->ys_at(line.x0());
            if (ys.empty())
                fail(Errc::NonRationalSupport, "vertical with irrational support " + line.str());
            if (ys.size() == 1) {
                out.add_point(Point::affine(line.x0(), ys[0]), 2 * e);
            } else {
                out.add_point(Point::affine(line.x0(), ys[0]), e);
                out.add_point(Point::affine(line.x0(), ys[1]), e);
            }
            out.add_point(Point::infinity(), -2 * e);
            break;
        }
        case Line::Kind::Chord: {
            const FPoly c = intersection_cubic(*curve_, line);
            const RootList roots = roots_of(c, rng);
            if (!roots.fully_split)
                fail(Errc::NonRationalSupport, "chord with irrational support " + line.str());
            for (const auto& [x, mult] : roots.roots) {
                const FieldElement y = line.y0() + line.lambda() * (x - line.x0());
                out.add_point(curve_->point(x, y), mpz_class(mult) * e);
            }
            out.add_point(Point::infinity(), -3 * e);
            break;
        }
        }
    }
    return out;
}

std::string LineProduct::str() const {
    if (factors_.empty()) return "1";
    std::string out;
    for (const auto& [line, e] : factors_) {
        if (!out.empty()) out += " * ";
        out += "(" + line.str() + ")^" + e.get_str();
    }
    return out;
}

// ---------------------------------------------------------------------------
// Tame symbols and reciprocity

FieldElement tame_symbol(const LineProduct& f, const LineProduct& g, const Point& p) {
    const mpz_class a = f.ord_at(p);
    const mpz_class b = g.ord_at(p);
    FieldElement out = pow(f.leading_value_at(p), b) / pow(g.leading_value_at(p), a);
    if ((a * b) % 2 != 0) out = -out;
    return out;
}

FieldElement weil_reciprocity_product(const LineProduct& f, const LineProduct& g, Rng& rng) {
    std::set<Point, PointLess> support;
    const Divisor df = f.divisor(rng);
    const Divisor dg = g.divisor(rng);
    for (const auto& [p, n] : df.terms()) support.insert(p);
    for (const auto& [p, n] : dg.terms()) support.insert(p);
    support.insert(Point::infinity());
    FieldElement acc = f.curve()->field()->one();
    for (const Point& p : support) acc *= tame_symbol(f, g, p);
    return acc;
}

// ---------------------------------------------------------------------------
// Principal divisors

LineProduct function_from_divisor(const CurvePtr& curve, const Divisor& d) {
    if (d.degree() != 0) fail(Errc::NotPrincipal, "divisor has nonzero degree");
    if (!d.group_sum().is_infinity()) fail(Errc::NotPrincipal, "divisor has nonzero group sum");

    LineProduct result(curve);
    Divisor rest = d;

    auto pick_two = [&](bool positive) -> std::optional<std::pair<Point, Point>> {
        std::optional<Point> first;
        for (const auto& [p, n] : rest.terms()) {
            if (p.is_infinity()) continue;
            const mpz_class want = positive ? n : -n;
            if (want <= 0) continue;
            if (want >= 2) return std::make_pair(p, p);
            if (first) return std::make_pair(*first, p);
            first = p;
        }
        return std::nullopt;
    };

    while (rest.affine_mass() > 0) {
        bool positive = true;
        auto pair = pick_two(true);
        if (!pair) {
            positive = false;
            pair = pick_two(false);
        }
        if (!pair)
            fail(Errc::NotPrincipal, "reduction stalled on a non-principal divisor");
        const auto& [p, q] = *pair;
        const mpz_class sign = positive ? 1 : -1;

        const AddResult res = curve->add(p, q);
        Divisor step(curve);
        if (res.sum.is_infinity()) {
            // q = -p: the line is the vertical through p. For 2-torsion the
            // two slots coincide and the map arithmetic doubles the entry.
            step.add_point(p, 1);
            step.add_point(q, 1);
            step.add_point(Point::infinity(), -2);
            result.mul_line(res.ell, sign);
        } else {
            // div(l / v) = [p] + [q] - [p + q] - [O].
            step.add_point(p, 1);
            step.add_point(q, 1);
            step.add_point(res.sum, -1);
            step.add_point(Point::infinity(), -1);
            result.mul_line(res.ell, sign);
            result.mul_line(res.vee, -sign);
        }
        rest = positive ? rest - step : rest + step;
    }
    if (!rest.is_zero())
        fail(Errc::NotPrincipal, "reduction left a nonzero divisor at infinity");
    return result;
}

} // namespace pairkit
