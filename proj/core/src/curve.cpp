// pairkit: exact-arithmetic bilinear pairings on elliptic curves
// Copyright 2026 The pairkit Authors.
// SPDX-License-Identifier: Apache-2.0
#include "pairkit/curve.hpp"

#include <algorithm>
#include <array>
#include <cstring>

#include <openssl/evp.h>

#include "pairkit/errors.hpp"
#include "pairkit/integer.hpp"
#include "pairkit/polynomial.hpp"

namespace pairkit {

namespace {

bool same_field(const FieldPtr& a, const FieldPtr& b) {
    return a == b || *a == *b;
}

void require_same_field(const FieldPtr& a, const FieldPtr& b, const char* what) {
    if (!same_field(a, b)) fail(Errc::FieldMismatch, what);
}

} // namespace

// ---------------------------------------------------------------------------
// Point

Point Point::affine(FieldElement x, FieldElement y) {
    require_same_field(x.field(), y.field(), "point coordinates from different fields");
    Point p;
    p.infinity_ = false;
    p.x_ = std::move(x);
    p.y_ = std::move(y);
    return p;
}

const FieldElement& Point::x() const {
    if (infinity_) fail(Errc::InvalidParameters, "coordinate of the point at infinity");
    return x_;
}

const FieldElement& Point::y() const {
    if (infinity_) fail(Errc::InvalidParameters, "coordinate of the point at infinity");
    return y_;
}

bool Point::operator==(const Point& rhs) const {
    if (infinity_ || rhs.infinity_) return infinity_ == rhs.infinity_;
    return x_ == rhs.x_ && y_ == rhs.y_;
}

std::string Point::str() const {
    if (infinity_) return "O";
    return "(" + x_.str() + ", " + y_.str() + ")";
}

bool PointLess::operator()(const Point& a, const Point& b) const {
    if (a.is_infinity() || b.is_infinity()) return a.is_infinity() && !b.is_infinity();
    if (a.x().lex_less(b.x())) return true;
    if (b.x().lex_less(a.x())) return false;
    return a.y().lex_less(b.y());
}

// ---------------------------------------------------------------------------
// Line

Line Line::one(FieldPtr field) { return Line(Kind::One, std::move(field)); }

Line Line::vertical(FieldElement x0) {
    Line l(Kind::Vertical, x0.field());
    l.x0_ = std::move(x0);
    return l;
}

Line Line::chord(FieldElement lambda, FieldElement x0, FieldElement y0) {
    require_same_field(lambda.field(), x0.field(), "line data from different fields");
    require_same_field(lambda.field(), y0.field(), "line data from different fields");
    Line l(Kind::Chord, lambda.field());
    l.lambda_ = std::move(lambda);
    l.x0_ = std::move(x0);
    l.y0_ = std::move(y0);
    return l;
}

const FieldElement& Line::lambda() const {
    if (kind_ != Kind::Chord) fail(Errc::InvalidParameters, "line has no slope");
    return lambda_;
}

const FieldElement& Line::x0() const {
    if (kind_ == Kind::One) fail(Errc::InvalidParameters, "constant line has no base point");
    return x0_;
}

const FieldElement& Line::y0() const {
    if (kind_ != Kind::Chord) fail(Errc::InvalidParameters, "line has no base point ordinate");
    return y0_;
}

FieldElement Line::eval(const Point& at) const {
    if (at.is_infinity()) fail(Errc::InvalidParameters, "line evaluation at infinity");
    switch (kind_) {
    case Kind::One:
        return field_->one();
    case Kind::Vertical:
        return at.x() - x0_;
    case Kind::Chord:
        return (at.y() - y0_) - lambda_ * (at.x() - x0_);
    }
    fail(Errc::InvalidParameters, "corrupt line kind");
}

std::string Line::str() const {
    switch (kind_) {
    case Kind::One:
        return "1";
    case Kind::Vertical:
        return "x - (" + x0_.str() + ")";
    case Kind::Chord:
        return "(y - (" + y0_.str() + ")) - (" + lambda_.str() + ")(x - (" + x0_.str() + "))";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Curve

Curve::Curve(FieldPtr field, FieldElement a1, FieldElement a2, FieldElement a3, FieldElement a4,
             FieldElement a6, std::optional<mpz_class> order)
    : field_(std::move(field)),
      a1_(std::move(a1)),
      a2_(std::move(a2)),
      a3_(std::move(a3)),
      a4_(std::move(a4)),
      a6_(std::move(a6)),
      disc_(field_->zero()),
      order_(std::move(order)) {
    const FieldElement b2 = a1_ * a1_ + field_->from_int(4) * a2_;
    const FieldElement b4 = field_->from_int(2) * a4_ + a1_ * a3_;
    const FieldElement b6 = a3_ * a3_ + field_->from_int(4) * a6_;
    const FieldElement b8 = a1_ * a1_ * a6_ + field_->from_int(4) * a2_ * a6_ - a1_ * a3_ * a4_ +
                            a2_ * a3_ * a3_ - a4_ * a4_;
    disc_ = -(b2 * b2 * b8) - field_->from_int(8) * b4 * b4 * b4 -
            field_->from_int(27) * b6 * b6 + field_->from_int(9) * b2 * b4 * b6;
}

CurvePtr Curve::make(FieldPtr field, FieldElement a1, FieldElement a2, FieldElement a3,
                     FieldElement a4, FieldElement a6, std::optional<mpz_class> order) {
    for (const FieldElement* c : {&a1, &a2, &a3, &a4, &a6})
        require_same_field(c->field(), field, "curve coefficient from a different field");
    auto curve = CurvePtr(new Curve(std::move(field), std::move(a1), std::move(a2), std::move(a3),
                                    std::move(a4), std::move(a6), std::move(order)));
    if (curve->disc_.is_zero()) fail(Errc::SingularCurve, "discriminant vanishes");
    return curve;
}

CurvePtr Curve::make_short(const FieldPtr& field, const FieldElement& a4, const FieldElement& a6,
                           std::optional<mpz_class> order) {
    return make(field, field->zero(), field->zero(), field->zero(), a4, a6, std::move(order));
}

CurvePtr Curve::with_order(mpz_class order) const {
    return make(field_, a1_, a2_, a3_, a4_, a6_, std::move(order));
}

CurvePtr Curve::base_change(const FieldPtr& target) const {
    if (target == field_) return shared_from_this();
    if (target->p() != field_->p())
        fail(Errc::FieldMismatch, "base change across different characteristics");
    std::vector<FieldElement> lifted;
    for (const FieldElement* c : {&a1_, &a2_, &a3_, &a4_, &a6_}) {
        if (!c->is_zero() && !c->in_prime_subfield())
            fail(Errc::UnsupportedShape, "base change needs prime-subfield coefficients");
        lifted.push_back(target->from_int(c->is_zero() ? mpz_class(0) : c->to_int()));
    }
    return make(target, lifted[0], lifted[1], lifted[2], lifted[3], lifted[4]);
}

bool Curve::short_form() const { return a1_.is_zero() && a2_.is_zero() && a3_.is_zero(); }

bool Curve::same_equation(const Curve& other) const {
    return same_field(field_, other.field_) && a1_ == other.a1_ && a2_ == other.a2_ &&
           a3_ == other.a3_ && a4_ == other.a4_ && a6_ == other.a6_;
}

FieldElement Curve::rhs_at(const FieldElement& x) const {
    return ((x + a2_) * x + a4_) * x + a6_;
}

FieldElement Curve::h_at(const FieldElement& x) const { return a1_ * x + a3_; }

bool Curve::contains(const Point& p) const {
    if (p.is_infinity()) return true;
    if (!same_field(p.x().field(), field_)) return false;
    return p.y() * p.y() + h_at(p.x()) * p.y() == rhs_at(p.x());
}

Point Curve::point(const FieldElement& x, const FieldElement& y) const {
    require_same_field(x.field(), field_, "point coordinate from a different field");
    Point p = Point::affine(x, y);
    if (!contains(p)) fail(Errc::NotOnCurve, "point fails the curve equation: " + p.str());
    return p;
}

Point Curve::lift_to(const Point& p, const CurvePtr& target) const {
    if (p.is_infinity()) return p;
    if (!contains(p)) fail(Errc::NotOnCurve, "lift of a point not on the curve");
    if (!p.x().in_prime_subfield() || !p.y().in_prime_subfield())
        fail(Errc::FieldMismatch, "lift needs prime-subfield coordinates");
    return target->point(target->field()->from_int(p.x().to_int()),
                         target->field()->from_int(p.y().to_int()));
}

Point Curve::neg(const Point& p) const {
    if (p.is_infinity()) return p;
    return Point::affine(p.x(), -p.y() - h_at(p.x()));
}

AddResult Curve::add(const Point& p, const Point& q) const {
    if (p.is_infinity()) return {q, Line::one(field_), Line::one(field_)};
    if (q.is_infinity()) return {p, Line::one(field_), Line::one(field_)};
    if (q == neg(p)) return {Point::infinity(), Line::vertical(p.x()), Line::one(field_)};

    FieldElement lambda = field_->zero();
    if (p == q) {
        // The q == neg(p) test above has already excluded 2 y + a1 x + a3 = 0.
        lambda = tangent_numerator(p) / (field_->from_int(2) * p.y() + h_at(p.x()));
    } else {
        lambda = (q.y() - p.y()) / (q.x() - p.x());
    }
    const FieldElement x3 = lambda * lambda + a1_ * lambda - a2_ - p.x() - q.x();
    const FieldElement y_line = p.y() + lambda * (x3 - p.x());
    const Point sum = Point::affine(x3, -y_line - h_at(x3));
    return {sum, Line::chord(lambda, p.x(), p.y()), Line::vertical(x3)};
}

Point Curve::add_points(const Point& p, const Point& q) const { return add(p, q).sum; }

Point Curve::sub_points(const Point& p, const Point& q) const { return add(p, neg(q)).sum; }

Point Curve::mul(const mpz_class& n, const Point& p) const {
    if (n < 0) return mul(-n, neg(p));
    Point acc = Point::infinity();
    const std::size_t bits = bit_length(n);
    for (std::size_t i = bits; i-- > 0;) {
        acc = add_points(acc, acc);
        if (mpz_tstbit(n.get_mpz_t(), i)) acc = add_points(acc, p);
    }
    return acc;
}

std::vector<FieldElement> Curve::ys_at(const FieldElement& x) const {
    // Complete the square: (y + h/2)^2 = rhs + h^2/4. The inversion of 2 is
    // skipped when h = 0, the hot path during enumeration.
    const FieldElement h = h_at(x);
    FieldElement shift = h;
    if (!h.is_zero())
        shift = h * field_->from_int(2).inverse();
    const FieldElement s2 = rhs_at(x) + shift * shift;
    std::vector<FieldElement> out;
    if (s2.is_zero()) {
        out.push_back(-shift);
        return out;
    }
    auto s = sqrt(s2);
    if (!s) return out;
    out.push_back(-shift + *s);
    out.push_back(-shift - *s);
    if (out[1].lex_less(out[0])) std::swap(out[0], out[1]);
    return out;
}

bool Curve::is_ramified(const Point& p) const {
    if (p.is_infinity()) return true;
    return (field_->from_int(2) * p.y() + h_at(p.x())).is_zero();
}

FieldElement Curve::tangent_numerator(const Point& p) const {
    const FieldElement& x = p.x();
    return field_->from_int(3) * x * x + field_->from_int(2) * a2_ * x + a4_ - a1_ * p.y();
}

std::vector<Point> Curve::enumerate_points() const {
    if (field_->order() > (mpz_class(1) << 20))
        fail(Errc::FieldTooLarge, "point enumeration beyond 2^20 field elements");
    std::vector<Point> out;
    out.push_back(Point::infinity());
    for (mpz_class i = 0; i < field_->order(); ++i) {
        const FieldElement x = field_->element_at(i);
        for (const FieldElement& y : ys_at(x)) out.push_back(Point::affine(x, y));
    }
    return out;
}

mpz_class Curve::count_points() const { return mpz_class(enumerate_points().size()); }

Point Curve::frobenius(const Point& p, const mpz_class& q, unsigned i) const {
    if (p.is_infinity()) return p;
    mpz_class e;
    mpz_pow_ui(e.get_mpz_t(), q.get_mpz_t(), i);
    return point(pow(p.x(), e), pow(p.y(), e));
}

Point Curve::trace(const Point& p, const mpz_class& q, unsigned k) const {
    Point acc = Point::infinity();
    for (unsigned i = 0; i < k; ++i) acc = add_points(acc, frobenius(p, q, i));
    return acc;
}

std::string Curve::describe() const {
    std::string s = "y^2";
    if (!a1_.is_zero()) s += " + (" + a1_.str() + ")xy";
    if (!a3_.is_zero()) s += " + (" + a3_.str() + ")y";
    s += " = x^3";
    if (!a2_.is_zero()) s += " + (" + a2_.str() + ")x^2";
    if (!a4_.is_zero()) s += " + (" + a4_.str() + ")x";
    if (!a6_.is_zero()) s += " + (" + a6_.str() + ")";
    s += " over " + field_->describe();
    if (order_) s += ", order " + order_->get_str();
    return s;
}

// ---------------------------------------------------------------------------
// Random points

Point random_point(const CurvePtr& curve, Rng& rng) {
    const FieldPtr& F = curve->field();
    for (int tries = 0; tries < 1024; ++tries) {
        const FieldElement x = F->random(rng);
        auto ys = curve->ys_at(x);
        if (ys.empty()) continue;
        return Point::affine(x, ys[rng.u64() % ys.size()]);
    }
    fail(Errc::RandomizationExhausted, "no affine point found by random sampling");
}

Point random_point_over_subfield(const CurvePtr& curve, const mpz_class& sub_order, Rng& rng) {
    const FieldPtr& F = curve->field();
    const mpz_class& m = F->order();
    if (sub_order < 2 || (m - 1) % (sub_order - 1) != 0)
        fail(Errc::InvalidParameters, "not the order of a subfield");
    const mpz_class norm_exp = (m - 1) / (sub_order - 1);
    const mpz_class chi_exp = (sub_order - 1) / 2;
    const FieldElement half = F->from_int(2).inverse();
    for (int tries = 0; tries < 1024; ++tries) {
        // The norm map onto the subfield gives a uniform nonzero x there;
        // zero gets a fixed small weight so curves whose only affine points
        // sit over x = 0 stay reachable.
        FieldElement x = F->zero();
        if (rng.u64() % 64 != 0) {
            const FieldElement gamma = F->random(rng);
            if (gamma.is_zero()) continue;
            x = pow(gamma, norm_exp);
        }
        const FieldElement shift = curve->h_at(x) * half;
        const FieldElement s2 = curve->rhs_at(x) + shift * shift;
        if (s2.is_zero()) return curve->point(x, -shift);
        if (!pow(s2, chi_exp).is_one()) continue; // not a square in the subfield
        const FieldElement s = *sqrt(s2);
        return curve->point(x, (rng.u64() & 1) ? (-shift + s) : (-shift - s));
    }
    fail(Errc::RandomizationExhausted, "no subfield point found by random sampling");
}

mpz_class trace_power(const mpz_class& t, const mpz_class& q, unsigned j) {
    if (j == 0) return 2;
    mpz_class prev = 2;
    mpz_class cur = t;
    for (unsigned i = 1; i < j; ++i) {
        mpz_class next = t * cur - q * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

// ---------------------------------------------------------------------------
// Twists

Point Twist::apply(const Point& p) const {
    if (p.is_infinity()) return p;
    Point q = p;
    if (!same_field(p.x().field(), source_ext->field())) q = source->lift_to(p, source_ext);
    return target->point(sx * q.x(), sy * q.y());
}

Point Twist::apply_inverse(const Point& p) const {
    if (p.is_infinity()) return p;
    return source_ext->point(p.x() / sx, p.y() / sy);
}

Twist make_twist(const CurvePtr& base, const FieldPtr& ext, unsigned d, unsigned class_index,
                 Rng& rng) {
    const FieldPtr& Fq = base->field();
    if (Fq->k() != 1) fail(Errc::InvalidParameters, "twists require a prime base field");
    if (ext->p() != Fq->p()) fail(Errc::FieldMismatch, "extension has a different characteristic");
    const unsigned k = ext->k();
    if (d == 0 || k % d != 0)
        fail(Errc::InvalidParameters, "twist degree must divide the extension degree");
    if (!base->order()) fail(Errc::InvalidParameters, "base curve needs its group order");
    if (!base->short_form()) fail(Errc::UnsupportedCurve, "twists require short Weierstrass form");

    const mpz_class& q = Fq->p();
    switch (d) {
    case 2:
        break;
    case 4:
        if (!base->a6().is_zero() || base->a4().is_zero())
            fail(Errc::UnsupportedCurve, "quartic twists need y^2 = x^3 + a4 x");
        if (q % 4 != 1) fail(Errc::BadResidueStructure, "quartic twists need q = 1 mod 4");
        break;
    case 3:
    case 6:
        if (!base->a4().is_zero() || base->a6().is_zero())
            fail(Errc::UnsupportedCurve, "cubic and sextic twists need y^2 = x^3 + a6");
        if (q % 3 != 1) fail(Errc::BadResidueStructure, "cubic and sextic twists need q = 1 mod 3");
        break;
    default:
        fail(Errc::InvalidParameters, "twist degree must be one of 2, 3, 4, 6");
    }

    const unsigned nclasses = (d == 2) ? 1 : 2;
    if (class_index >= nclasses) fail(Errc::InvalidParameters, "twist class index out of range");

    auto admissible = [&](const FieldElement& c) {
        const bool sq = residue_class(c, 2);
        switch (d) {
        case 2:
        case 4:
            return !sq;
        case 3:
            return sq && !residue_class(c, 3);
        default:
            return !sq && !residue_class(c, 3);
        }
    };

    // First constant of each character class, in enumeration order.
    FieldElement D = Fq->zero();
    bool found = false;
    std::vector<FieldElement> seen;
    const mpz_class chi_exp = (q - 1) / d;
    for (mpz_class i = 1; i < q && !found; ++i) {
        const FieldElement cand = Fq->element_at(i);
        if (!admissible(cand)) continue;
        const FieldElement chi = pow(cand, chi_exp);
        std::size_t idx = seen.size();
        for (std::size_t j = 0; j < seen.size(); ++j)
            if (seen[j] == chi) { idx = j; break; }
        if (idx == seen.size()) seen.push_back(chi);
        if (idx == class_index) {
            D = cand;
            found = true;
        }
    }
    if (!found) fail(Errc::MissingTwist, "no twisting constant of the requested class");

    CurvePtr Eprime;
    switch (d) {
    case 2:
        Eprime = Curve::make_short(Fq, D * D * base->a4(), D * D * D * base->a6());
        break;
    case 4:
        Eprime = Curve::make_short(Fq, D * base->a4(), Fq->zero());
        break;
    default:
        Eprime = Curve::make_short(Fq, Fq->zero(), D * base->a6());
        break;
    }
    CurvePtr Eprime_ext = Eprime->base_change(ext);

    // Trace of E' over F_q first. The candidate traces follow from
    // t^2 - 4q = disc of E being a square times -1 or -3; the right one
    // is settled by exact counting (small q) or annihilation sampling.
    const unsigned e = k / d;
    const mpz_class t = q + 1 - *base->order();

    std::vector<mpz_class> candidates;
    if (d == 2) {
        candidates.push_back(-t);
    } else if (d == 4) {
        const mpz_class g2 = 4 * q - t * t;
        const mpz_class g = isqrt(g2);
        if (g * g != g2) fail(Errc::BadResidueStructure, "4q - t^2 is not a square");
        candidates = {g, -g};
    } else {
        const mpz_class f2 = 4 * q - t * t;
        if (f2 % 3 != 0) fail(Errc::BadResidueStructure, "4q - t^2 is not 3 f^2");
        const mpz_class f = isqrt(f2 / 3);
        if (3 * f * f != f2) fail(Errc::BadResidueStructure, "4q - t^2 is not 3 f^2");
        const mpz_class halves[4] = {t + 3 * f, t - 3 * f, -t + 3 * f, -t - 3 * f};
        for (const mpz_class& h : halves)
            if (h % 2 == 0) candidates.push_back(h / 2);
        candidates.push_back(t);
        candidates.push_back(-t);
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    mpz_class t1;
    if (q <= (mpz_class(1) << 20)) {
        t1 = q + 1 - Eprime->count_points();
        if (std::find(candidates.begin(), candidates.end(), t1) == candidates.end())
            fail(Errc::CurveSearchFailed, "counted twist trace misses the candidate list");
    } else {
        std::vector<mpz_class> alive = candidates;
        for (int round = 0; round < 48 && alive.size() > 1; ++round) {
            const Point r = random_point(Eprime, rng);
            std::vector<mpz_class> next;
            for (const mpz_class& tc : alive)
                if (Eprime->mul(q + 1 - tc, r).is_infinity()) next.push_back(tc);
            alive = std::move(next);
            if (alive.empty())
                fail(Errc::CurveSearchFailed,
                     "no candidate twist order annihilates sampled points");
        }
        if (alive.size() != 1)
            fail(Errc::CurveSearchFailed, "ambiguous twist order at this field size");
        t1 = alive[0];
    }

    mpz_class Qe;
    mpz_pow_ui(Qe.get_mpz_t(), q.get_mpz_t(), e);

    Twist tw;
    tw.source = Eprime->with_order(q + 1 - t1);
    tw.source_ext = Eprime_ext;
    tw.target = base->base_change(ext);
    tw.d = d;
    tw.e = e;
    tw.class_index = class_index;
    tw.D = D;
    tw.trace_e = trace_power(t1, q, e);
    tw.order_e = Qe + 1 - tw.trace_e;

    // Scale factors of psi in ext, from the inverse twisting constant.
    const FieldElement inv = ext->from_int(D.to_int()).inverse();
    switch (d) {
    case 2: {
        tw.sx = inv;
        auto sy = sqrt(inv * inv * inv);
        if (!sy) fail(Errc::MissingTwist, "no square root for the quadratic scale");
        tw.sy = *sy;
        break;
    }
    case 4: {
        auto sx = sqrt(inv);
        if (!sx) fail(Errc::MissingTwist, "no square root for the quartic scale");
        tw.sx = *sx;
        auto sy = sqrt(tw.sx * tw.sx * tw.sx);
        if (!sy) fail(Errc::MissingTwist, "no square root for the quartic ordinate scale");
        tw.sy = *sy;
        break;
    }
    default: {
        auto cbrts = nth_roots(inv, 3, rng);
        if (cbrts.empty()) fail(Errc::MissingTwist, "no cube root for the twist scale");
        tw.sx = cbrts[0];
        auto sy = sqrt(inv);
        if (!sy) fail(Errc::MissingTwist, "no square root for the twist ordinate scale");
        tw.sy = *sy;
        break;
    }
    }

    // The claimed order must annihilate subfield samples, and psi must send
    // them onto the target curve.
    for (int i = 0; i < 2; ++i) {
        const Point s = random_point_over_subfield(Eprime_ext, Qe, rng);
        if (!Eprime_ext->mul(tw.order_e, s).is_infinity())
            fail(Errc::CurveSearchFailed, "twist order fails on a sampled point");
        tw.apply(s);
    }
    return tw;
}

// ---------------------------------------------------------------------------
// Distortion maps

Point Distortion::apply(const Point& p) const {
    if (p.is_infinity()) return p;
    Point q = p;
    if (!same_field(p.x().field(), target->field())) {
        if (!p.x().in_prime_subfield() || !p.y().in_prime_subfield())
            fail(Errc::FieldMismatch, "distortion input in an unrelated field");
        q = Point::affine(target->field()->from_int(p.x().to_int()),
                          target->field()->from_int(p.y().to_int()));
    }
    return target->point(sx * q.x(), sy * q.y());
}

Distortion make_distortion(const CurvePtr& base, const FieldPtr& ext) {
    const FieldPtr& Fq = base->field();
    if (Fq->k() != 1) fail(Errc::InvalidParameters, "distortion maps need a prime base field");
    if (ext->p() != Fq->p()) fail(Errc::FieldMismatch, "extension has a different characteristic");
    if (ext->k() % 2 != 0)
        fail(Errc::InvalidParameters, "distortion maps need an even-degree extension");
    if (!base->short_form()) fail(Errc::UnsupportedCurve, "distortion maps need short form");

    const mpz_class& p = Fq->p();
    Distortion dist;
    dist.target = base->base_change(ext);
    if (base->a6().is_zero() && !base->a4().is_zero() && p % 4 == 3) {
        auto i = sqrt(ext->from_int(-1));
        if (!i) fail(Errc::BadResidueStructure, "-1 has no square root in the extension");
        dist.sx = ext->from_int(-1);
        dist.sy = *i;
        dist.family = 1;
    } else if (base->a4().is_zero() && !base->a6().is_zero() && p % 3 == 2) {
        auto s = sqrt(ext->from_int(-3));
        if (!s) fail(Errc::BadResidueStructure, "-3 has no square root in the extension");
        const FieldElement zeta = (ext->from_int(-1) + *s) * ext->from_int(2).inverse();
        if (!(zeta * zeta + zeta + ext->one()).is_zero())
            fail(Errc::BadResidueStructure, "cube root of unity construction failed");
        dist.sx = zeta;
        dist.sy = ext->one();
        dist.family = 2;
    } else {
        fail(Errc::UnsupportedCurve, "no distortion family for this curve");
    }
    return dist;
}

// ---------------------------------------------------------------------------
// Hashing

namespace {

std::array<std::uint8_t, 32> sha256_bytes(const std::vector<std::uint8_t>& data) {
    std::array<std::uint8_t, 32> out{};
    unsigned int outlen = 0;
    if (EVP_Digest(data.data(), data.size(), out.data(), &outlen, EVP_sha256(), nullptr) != 1 ||
        outlen != 32)
        fail(Errc::HashFailure, "SHA-256 digest failed");
    return out;
}

void push_u32(std::vector<std::uint8_t>& buf, std::uint32_t v) {
    buf.push_back(static_cast<std::uint8_t>(v >> 24));
    buf.push_back(static_cast<std::uint8_t>(v >> 16));
    buf.push_back(static_cast<std::uint8_t>(v >> 8));
    buf.push_back(static_cast<std::uint8_t>(v));
}

FieldElement hash_to_x(const FieldPtr& F, std::string_view domain, std::string_view msg,
                       std::uint32_t counter) {
    std::vector<mpz_class> coeffs;
    coeffs.reserve(F->k());
    for (unsigned j = 0; j < F->k(); ++j) {
        std::vector<std::uint8_t> buf(domain.begin(), domain.end());
        buf.push_back(0);
        push_u32(buf, static_cast<std::uint32_t>(msg.size()));
        buf.insert(buf.end(), msg.begin(), msg.end());
        push_u32(buf, counter);
        push_u32(buf, j);
        const auto digest = sha256_bytes(buf);
        mpz_class v;
        mpz_import(v.get_mpz_t(), digest.size(), 1, 1, 1, 0, digest.data());
        coeffs.push_back(v % F->p());
    }
    return F->element(std::move(coeffs));
}

} // namespace

Point hash_to_subgroup(const CurvePtr& curve, const mpz_class& cofactor, std::string_view msg,
                       std::string_view domain) {
    for (std::uint32_t counter = 0; counter < 256; ++counter) {
        const FieldElement x = hash_to_x(curve->field(), domain, msg, counter);
        auto ys = curve->ys_at(x);
        if (ys.empty()) continue;
        const Point p = curve->mul(cofactor, Point::affine(x, ys[0]));
        if (!p.is_infinity()) return p;
    }
    fail(Errc::HashFailure, "no usable curve point within the counter budget");
}

Point hash_to_trace_zero(const CurvePtr& ext_curve, const mpz_class& q, unsigned k,
                         const mpz_class& cofactor2, std::string_view msg,
                         std::string_view domain) {
    for (std::uint32_t counter = 0; counter < 256; ++counter) {
        const FieldElement x = hash_to_x(ext_curve->field(), domain, msg, counter);
        auto ys = ext_curve->ys_at(x);
        if (ys.empty()) continue;
        const Point s = ext_curve->mul(cofactor2, Point::affine(x, ys[0]));
        if (s.is_infinity()) continue;
        const Point t =
            ext_curve->sub_points(ext_curve->mul(k, s), ext_curve->trace(s, q, k));
        if (!t.is_infinity()) return t;
    }
    fail(Errc::HashFailure, "no usable trace-zero point within the counter budget");
}

} // namespace pairkit
