// pairkit: exact-arithmetic bilinear pairings on elliptic curves
// Copyright 2026 The pairkit Authors.
// SPDX-License-Identifier: Apache-2.0
#include "pairkit/polynomial.hpp"

#include <algorithm>

#include "pairkit/errors.hpp"
#include "pairkit/integer.hpp"

namespace pairkit {

FPoly FPoly::x(const FieldPtr& field) {
    return FPoly(field, {field->zero(), field->one()});
}

FPoly FPoly::constant(const FieldElement& value) {
    return FPoly(value.field(), {value});
}

void FPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FieldElement FPoly::eval(const FieldElement& at) const {
    FieldElement acc = field_->zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

FPoly FPoly::operator+(const FPoly& rhs) const {
    std::vector<FieldElement> out;
    const std::size_t n = std::max(c_.size(), rhs.c_.size());
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        FieldElement v = field_->zero();
        if (i < c_.size()) v = v + c_[i];
        if (i < rhs.c_.size()) v = v + rhs.c_[i];
        out.push_back(v);
    }
    return FPoly(field_, std::move(out));
}

FPoly FPoly::operator-(const FPoly& rhs) const {
    std::vector<FieldElement> out;
    const std::size_t n = std::max(c_.size(), rhs.c_.size());
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        FieldElement v = field_->zero();
        if (i < c_.size()) v = v + c_[i];
        if (i < rhs.c_.size()) v = v - rhs.c_[i];
        out.push_back(v);
    }
    return FPoly(field_, std::move(out));
}

FPoly FPoly::operator*(const FPoly& rhs) const {
    if (is_zero() || rhs.is_zero()) return FPoly(field_);
    std::vector<FieldElement> out(c_.size() + rhs.c_.size() - 1, field_->zero());
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < rhs.c_.size(); ++j)
            out[i + j] = out[i + j] + c_[i] * rhs.c_[j];
    return FPoly(field_, std::move(out));
}

FPoly FPoly::times(const FieldElement& scalar) const {
    std::vector<FieldElement> out;
    out.reserve(c_.size());
    for (const auto& v : c_) out.push_back(v * scalar);
    return FPoly(field_, std::move(out));
}

FPoly FPoly::rem(const FPoly& divisor) const {
    if (divisor.is_zero()) fail(Errc::DivisionByZero, "polynomial division by zero");
    FPoly r = *this;
    const FieldElement lead_inv = divisor.leading().inverse();
    while (!r.is_zero() && r.degree() >= divisor.degree()) {
        const FieldElement q = r.leading() * lead_inv;
        const std::size_t shift = static_cast<std::size_t>(r.degree() - divisor.degree());
        for (std::size_t i = 0; i < divisor.c_.size(); ++i)
            r.c_[i + shift] = r.c_[i + shift] - q * divisor.c_[i];
        r.trim();
    }
    return r;
}

FPoly FPoly::quotient(const FPoly& divisor) const {
    if (divisor.is_zero()) fail(Errc::DivisionByZero, "polynomial division by zero");
    FPoly r = *this;
    if (r.is_zero()) return FPoly(field_);
    if (r.degree() < divisor.degree())
        fail(Errc::DivisibilityViolation, "quotient of lower-degree polynomial");
    std::vector<FieldElement> q(static_cast<std::size_t>(r.degree() - divisor.degree()) + 1,
                                field_->zero());
    const FieldElement lead_inv = divisor.leading().inverse();
    while (!r.is_zero() && r.degree() >= divisor.degree()) {
        const FieldElement coef = r.leading() * lead_inv;
        const std::size_t shift = static_cast<std::size_t>(r.degree() - divisor.degree());
        q[shift] = coef;
        for (std::size_t i = 0; i < divisor.c_.size(); ++i)
            r.c_[i + shift] = r.c_[i + shift] - coef * divisor.c_[i];
        r.trim();
    }
    if (!r.is_zero()) fail(Errc::DivisibilityViolation, "polynomial division leaves remainder");
    return FPoly(field_, std::move(q));
}

FPoly FPoly::monic() const {
    if (is_zero()) fail(Errc::ZeroFunction, "monic scaling of zero polynomial");
    return times(leading().inverse());
}

FPoly gcd(FPoly a, FPoly b) {
    while (!b.is_zero()) {
        FPoly r = a.rem(b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

FPoly pow_mod(FPoly base, const mpz_class& e, const FPoly& modulus) {
    if (modulus.is_zero()) fail(Errc::DivisionByZero, "polynomial modulus is zero");
    if (e < 0) fail(Errc::InvalidParameters, "negative polynomial exponent");
    const FieldPtr& F = base.field();
    if (modulus.degree() == 0) return FPoly(F);
    FPoly acc = FPoly::constant(F->one());
    base = base.rem(modulus);
    const std::size_t bits = bit_length(e);
    for (std::size_t i = bits; i-- > 0;) {
        acc = (acc * acc).rem(modulus);
        if (mpz_tstbit(e.get_mpz_t(), i)) acc = (acc * base).rem(modulus);
    }
    return acc;
}

namespace {

// Splits a square-free monic product of linear factors into its roots.
void split_linear_part(const FPoly& f, Rng& rng, std::vector<FieldElement>& out) {
    const FieldPtr& F = f.field();
    if (f.degree() <= 0) return;
    if (f.degree() == 1) {
        out.push_back(-f.coeffs()[0]);
        return;
    }
    if (f.degree() == 2) {
        // Monic x^2 + bx + c with both roots rational: complete the square.
        const FieldElement b = f.coeffs()[1];
        const FieldElement c = f.coeffs()[0];
        const FieldElement half = F->from_int(2).inverse();
        const FieldElement disc = b * b - F->from_int(4) * c;
        auto s = sqrt(disc);
        if (!s) fail(Errc::NonRationalSupport, "quadratic factor lost its roots");
        out.push_back((-b + *s) * half);
        out.push_back((-b - *s) * half);
        return;
    }
    const mpz_class half_order = (F->order() - 1) / 2;
    for (int attempt = 0; attempt < 64; ++attempt) {
        const FieldElement delta = F->random(rng);
        FPoly shifted(F, {delta, F->one()});
        FPoly probe = pow_mod(shifted, half_order, f) - FPoly::constant(F->one());
        FPoly g = gcd(probe, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            split_linear_part(g, rng, out);
            split_linear_part(f.quotient(g), rng, out);
            return;
        }
    }
    fail(Errc::RandomizationExhausted, "equal-degree splitting found no splitter");
}

} // namespace

RootList roots_of(const FPoly& f, Rng& rng) {
    if (f.is_zero()) fail(Errc::ZeroFunction, "roots of the zero polynomial");
    const FieldPtr& F = f.field();
    RootList result;
    if (f.degree() == 0) {
        result.fully_split = true;
        return result;
    }
    // gcd(x^m - x, f) collects each rational root exactly once.
    const FPoly xm = pow_mod(FPoly::x(F), F->order(), f);
    FPoly linear_part = gcd(xm - FPoly::x(F), f);
    std::vector<FieldElement> distinct;
    split_linear_part(linear_part, rng, distinct);
    std::sort(distinct.begin(), distinct.end(),
              [](const FieldElement& a, const FieldElement& b) { return a.lex_less(b); });

    unsigned total = 0;
    FPoly rest = f.monic();
    for (const auto& r : distinct) {
        FPoly lin(F, {-r, F->one()});
        unsigned mult = 0;
        while (rest.degree() >= 1 && rest.eval(r).is_zero()) {
            rest = rest.quotient(lin);
            ++mult;
        }
        result.roots.emplace_back(r, mult);
        total += mult;
    }
    result.fully_split = (total == static_cast<unsigned>(f.degree()));
    return result;
}

std::vector<FieldElement> nth_roots(const FieldElement& value, unsigned n, Rng& rng) {
    const FieldPtr& F = value.field();
    if (n < 2 || n > 4) fail(Errc::InvalidParameters, "nth_roots supports n in {2, 3, 4}");
    if (n == 2) {
        auto s = sqrt(value);
        std::vector<FieldElement> out;
        if (s) {
            out.push_back(*s);
            if (!s->is_zero()) out.push_back(-*s);
        }
        std::sort(out.begin(), out.end(),
                  [](const FieldElement& a, const FieldElement& b) { return a.lex_less(b); });
        return out;
    }
    std::vector<FieldElement> coeffs(n + 1, F->zero());
    coeffs[0] = -value;
    coeffs[n] = F->one();
    RootList list = roots_of(FPoly(F, std::move(coeffs)), rng);
    std::vector<FieldElement> out;
    out.reserve(list.roots.size());
    for (const auto& [r, mult] : list.roots) out.push_back(r);
    return out;
}

} // namespace pairkit
