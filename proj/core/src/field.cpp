// pairkit: exact-arithmetic bilinear pairings on elliptic curves
// Copyright 2026 The pairkit Authors.
// SPDX-License-Identifier: Apache-2.0
#include "pairkit/field.hpp"

#include <algorithm>
#include <sstream>

#include "pairkit/errors.hpp"
#include "pairkit/integer.hpp"

namespace pairkit {

namespace {

// Dense polynomials over F_p as raw coefficient vectors, constant-term first.
// Only what modulus construction and element arithmetic need.
using Poly = std::vector<mpz_class>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

int degree(const Poly& a) {
    return static_cast<int>(a.size()) - 1;
}

Poly sub(const Poly& a, const Poly& b, const mpz_class& p) {
    Poly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < a.size())
            out[i] += a[i];
        if (i < b.size())
            out[i] -= b[i];
        out[i] = mod_floor(out[i], p);
    }
    trim(out);
    return out;
}

Poly mul(const Poly& a, const Poly& b, const mpz_class& p) {
    if (a.empty() || b.empty())
        return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    for (auto& c : out)
        c = mod_floor(c, p);
    trim(out);
    return out;
}

// Remainder of a modulo monic m.
Poly rem(Poly a, const Poly& m, const mpz_class& p) {
    trim(a);
    const int dm = degree(m);
    while (degree(a) >= dm) {
        const mpz_class c = a.back();
        const std::size_t shift = a.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i)
            a[shift + i] = mod_floor(a[shift + i] - c * m[i], p);
        trim(a);
    }
    return a;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m, const mpz_class& p) {
    return rem(mul(a, b, p), m, p);
}

Poly powmod(Poly base, const mpz_class& e, const Poly& m, const mpz_class& p) {
    Poly out = {mpz_class(1)};
    base = rem(std::move(base), m, p);
    const std::size_t bits = bit_length(e);
    for (std::size_t i = bits; i-- > 0;) {
        out = mulmod(out, out, m, p);
        if (mpz_tstbit(e.get_mpz_t(), i))
            out = mulmod(out, base, m, p);
    }
    return out;
}

Poly make_monic(Poly a, const mpz_class& p) {
    trim(a);
    if (a.empty())
        return a;
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), a.back().get_mpz_t(), p.get_mpz_t()) == 0)
        fail(Errc::DivisionByZero, "non-invertible leading coefficient");
    for (auto& c : a)
        c = mod_floor(c * inv, p);
    return a;
}

Poly gcd(Poly a, Poly b, const mpz_class& p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = rem(a, make_monic(b, p), p);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a, p);
}

// Inverse of a modulo monic irreducible m, via extended Euclid.
Poly invmod(const Poly& a, const Poly& m, const mpz_class& p) {
    Poly r0 = m, r1 = rem(a, m, p);
    Poly s0 = {}, s1 = {mpz_class(1)};
    if (r1.empty())
        fail(Errc::DivisionByZero, "division by zero in field");
    while (degree(r1) > 0) {
        // one division step: r0 = q*r1 + r2
        Poly q;
        Poly r2 = r0;
        const int d1 = degree(r1);
        mpz_class lead_inv;
        mpz_invert(lead_inv.get_mpz_t(), r1.back().get_mpz_t(), p.get_mpz_t());
        q.assign(static_cast<std::size_t>(degree(r2) - d1) + 1, 0);
        while (degree(r2) >= d1) {
            const int shift = degree(r2) - d1;
            const mpz_class c = mod_floor(r2.back() * lead_inv, p);
            q[static_cast<std::size_t>(shift)] = c;
            for (std::size_t i = 0; i < r1.size(); ++i)
                r2[static_cast<std::size_t>(shift) + i] =
                    mod_floor(r2[static_cast<std::size_t>(shift) + i] - c * r1[i], p);
            trim(r2);
        }
        Poly s2 = sub(s0, mul(q, s1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.empty())
        fail(Errc::DivisionByZero, "division by zero in field");
    // r1 is a nonzero constant: scale s1 by its inverse.
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), r1[0].get_mpz_t(), p.get_mpz_t());
    for (auto& c : s1)
        c = mod_floor(c * inv, p);
    trim(s1);
    return s1;
}

bool is_irreducible(const Poly& m, const mpz_class& p) {
    const int k = degree(m);
    if (k < 1)
        return false;
    if (k == 1)
        return true;
    // x^(p^k) == x mod m, and gcd(x^(p^(k/l)) - x, m) == 1 for prime l | k.
    const Poly x = {mpz_class(0), mpz_class(1)};
    mpz_class pk;
    mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(k));
    if (powmod(x, pk, m, p) != x)
        return false;
    for (int l = 2; l <= k; ++l) {
        if (k % l != 0 || !is_prime(mpz_class(l)))
            continue;
        mpz_class pd;
        mpz_pow_ui(pd.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(k / l));
        Poly g = gcd(sub(powmod(x, pd, m, p), x, p), m, p);
        if (degree(g) != 0)
            return false;
    }
    return true;
}

} // namespace

Field::Field(mpz_class p, unsigned k, std::vector<mpz_class> modulus)
    : p_(std::move(p)), k_(k), modulus_(std::move(modulus)) {
    mpz_pow_ui(order_.get_mpz_t(), p_.get_mpz_t(), k_);
    unit_order_ = order_ - 1;
}

FieldPtr Field::make(const mpz_class& p, unsigned k) {
    if (k == 0)
        fail(Errc::InvalidParameters, "extension degree must be positive");
    if (p < 5)
        fail(Errc::InvalidParameters, "characteristic must be at least 5");
    if (!is_prime(p))
        fail(Errc::CompositeModulus, p.get_str() + " is not prime");

    // Enumerate monic candidates by a base-p counter over the lower
    // coefficients; the first irreducible wins. For k = 1 this is X itself.
    mpz_class limit;
    mpz_pow_ui(limit.get_mpz_t(), p.get_mpz_t(), k);
    const mpz_class bound = mpz_class(1) << 22;
    const mpz_class cap = std::min(limit, bound);
    for (mpz_class index = 0; index < cap; ++index) {
        std::vector<mpz_class> m(k + 1, 0);
        mpz_class rest = index;
        for (unsigned i = 0; i < k; ++i) {
            m[i] = mod_floor(rest, p);
            rest /= p;
        }
        m[k] = 1;
        if (is_irreducible(m, p))
            return FieldPtr(new Field(p, k, std::move(m)));
    }
    fail(Errc::IrreducibleSearchExhausted,
         "no irreducible of degree " + std::to_string(k) + " over F_" + p.get_str() +
             " within the enumeration cap");
}

FieldPtr Field::make(const mpz_class& p, std::vector<mpz_class> modulus) {
    if (p < 5)
        fail(Errc::InvalidParameters, "characteristic must be at least 5");
    if (!is_prime(p))
        fail(Errc::CompositeModulus, p.get_str() + " is not prime");
    if (modulus.size() < 2)
        fail(Errc::UnsupportedShape, "modulus needs degree at least 1");
    for (auto& c : modulus)
        c = mod_floor(c, p);
    if (modulus.back() != 1)
        fail(Errc::UnsupportedShape, "modulus must be monic");
    if (!is_irreducible(modulus, p))
        fail(Errc::UnsupportedShape, "modulus is not irreducible");
    const unsigned k = static_cast<unsigned>(modulus.size() - 1);
    return FieldPtr(new Field(p, k, std::move(modulus)));
}

FieldElement Field::zero() const {
    return FieldElement(shared_from_this(), std::vector<mpz_class>(k_, 0));
}

FieldElement Field::one() const {
    return from_int(1);
}

FieldElement Field::from_int(const mpz_class& n) const {
    std::vector<mpz_class> c(k_, 0);
    c[0] = mod_floor(n, p_);
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement Field::element(std::vector<mpz_class> coeffs) const {
    for (auto& c : coeffs)
        c = mod_floor(c, p_);
    if (coeffs.size() > k_) {
        Poly r = rem(std::move(coeffs), modulus_, p_);
        r.resize(k_, 0);
        coeffs = std::move(r);
    } else {
        coeffs.resize(k_, 0);
    }
    return FieldElement(shared_from_this(), std::move(coeffs));
}

FieldElement Field::element_at(const mpz_class& index) const {
    std::vector<mpz_class> c(k_, 0);
    mpz_class rest = mod_floor(index, order_);
    for (unsigned i = 0; i < k_ && rest != 0; ++i) {
        c[i] = mod_floor(rest, p_);
        rest /= p_;
    }
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement Field::random(Rng& rng) const {
    std::vector<mpz_class> c(k_);
    for (unsigned i = 0; i < k_; ++i)
        c[i] = rng.below(p_);
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement Field::nonresidue() const {
    if (nonresidue_.empty()) {
        const mpz_class half = unit_order_ / 2;
        for (mpz_class i = 1; i < order_; ++i) {
            const FieldElement g = element_at(i);
            if (!g.is_zero() && pow(g, half) != one()) {
                nonresidue_ = g.coeffs();
                break;
            }
        }
        if (nonresidue_.empty())
            fail(Errc::UnreachableTarget, "no quadratic non-residue found");
    }
    return FieldElement(shared_from_this(), nonresidue_);
}

bool Field::operator==(const Field& other) const noexcept {
    return this == &other || (p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_);
}

std::string Field::describe() const {
    std::ostringstream os;
    os << "F_" << p_.get_str();
    if (k_ > 1) {
        os << "^" << k_ << " mod [";
        for (std::size_t i = 0; i < modulus_.size(); ++i)
            os << (i ? ", " : "") << modulus_[i].get_str();
        os << "]";
    }
    return os.str();
}

bool FieldElement::is_zero() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const mpz_class& c) { return c == 0; });
}

bool FieldElement::is_one() const noexcept {
    if (coeffs_.empty() || coeffs_[0] != 1)
        return false;
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                       [](const mpz_class& c) { return c == 0; });
}

bool FieldElement::in_prime_subfield() const noexcept {
    if (coeffs_.empty())
        return false;
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                       [](const mpz_class& c) { return c == 0; });
}

const mpz_class& FieldElement::to_int() const {
    if (!in_prime_subfield())
        fail(Errc::InvalidParameters, "element not in the prime subfield: " + str());
    return coeffs_[0];
}

void FieldElement::check_same_field(const FieldElement& rhs) const {
    if (!field_ || !rhs.field_)
        fail(Errc::FieldMismatch, "uninitialized field element");
    if (field_ != rhs.field_ && *field_ != *rhs.field_)
        fail(Errc::FieldMismatch, field_->describe() + " vs " + rhs.field_->describe());
}

FieldElement FieldElement::operator-() const {
    std::vector<mpz_class> c(coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = coeffs_[i] == 0 ? mpz_class(0) : field_->p_ - coeffs_[i];
    return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
    check_same_field(rhs);
    std::vector<mpz_class> c(coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = coeffs_[i] + rhs.coeffs_[i];
        if (c[i] >= field_->p_)
            c[i] -= field_->p_;
    }
    return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
    check_same_field(rhs);
    std::vector<mpz_class> c(coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = coeffs_[i] - rhs.coeffs_[i];
        if (c[i] < 0)
            c[i] += field_->p_;
    }
    return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
    check_same_field(rhs);
    Poly prod = mul(coeffs_, rhs.coeffs_, field_->p_);
    Poly r = rem(std::move(prod), field_->modulus_, field_->p_);
    r.resize(field_->k_, 0);
    return FieldElement(field_, std::move(r));
}

FieldElement FieldElement::inverse() const {
    if (is_zero())
        fail(Errc::DivisionByZero, "inverse of zero");
    if (field_->k_ == 1) {
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), coeffs_[0].get_mpz_t(), field_->p_.get_mpz_t());
        return FieldElement(field_, {inv});
    }
    Poly r = invmod(coeffs_, field_->modulus_, field_->p_);
    r.resize(field_->k_, 0);
    return FieldElement(field_, std::move(r));
}

FieldElement FieldElement::operator/(const FieldElement& rhs) const {
    return *this * rhs.inverse();
}

bool FieldElement::operator==(const FieldElement& rhs) const {
    check_same_field(rhs);
    return coeffs_ == rhs.coeffs_;
}

bool FieldElement::lex_less(const FieldElement& rhs) const {
    check_same_field(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const int c = cmp(coeffs_[i], rhs.coeffs_[i]);
        if (c != 0)
            return c < 0;
    }
    return false;
}

std::string FieldElement::str() const {
    if (field_ && field_->k_ == 1)
        return coeffs_[0].get_str();
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        os << (i ? ", " : "") << coeffs_[i].get_str();
    os << "]";
    return os.str();
}

FieldElement pow(const FieldElement& x, const mpz_class& e) {
    if (e < 0)
        return pow(x.inverse(), -e);
    FieldElement out = x.field()->one();
    const std::size_t bits = bit_length(e);
    for (std::size_t i = bits; i-- > 0;) {
        out = out * out;
        if (mpz_tstbit(e.get_mpz_t(), i))
            out = out * x;
    }
    return out;
}

std::optional<FieldElement> sqrt(const FieldElement& x) {
    const FieldPtr& F = x.field();
    if (x.is_zero())
        return F->zero();
    const mpz_class& m1 = F->unit_order();
    const mpz_class half = m1 / 2;
    if (pow(x, half) != F->one())
        return std::nullopt;

    // Tonelli-Shanks in the cyclic unit group of order m1 = 2^s * t.
    unsigned long s = mpz_scan1(m1.get_mpz_t(), 0);
    mpz_class t = m1;
    mpz_tdiv_q_2exp(t.get_mpz_t(), t.get_mpz_t(), s);

    const FieldElement g = F->nonresidue();

    FieldElement z = pow(g, t);
    FieldElement r = pow(x, (t + 1) / 2);
    FieldElement b = pow(x, t);
    unsigned long m = s;
    while (!b.is_one()) {
        unsigned long i = 0;
        FieldElement c = b;
        while (!c.is_one()) {
            c = c * c;
            ++i;
            if (i >= m)
                fail(Errc::UnreachableTarget, "square root iteration failed to converge");
        }
        FieldElement z2 = z;
        for (unsigned long j = 0; j + i + 1 < m; ++j)
            z2 = z2 * z2;
        r = r * z2;
        z = z2 * z2;
        b = b * z;
        m = i;
    }

    FieldElement neg = -r;
    return neg.lex_less(r) ? neg : r;
}

bool residue_class(const FieldElement& x, unsigned n) {
    if (n == 0)
        fail(Errc::InvalidParameters, "residue_class needs n >= 1");
    if (x.is_zero())
        fail(Errc::ZeroInput, "residue class of zero is undefined");
    const mpz_class& m1 = x.field()->unit_order();
    mpz_class g;
    mpz_class nn(n);
    mpz_gcd(g.get_mpz_t(), nn.get_mpz_t(), m1.get_mpz_t());
    return pow(x, m1 / g) == x.field()->one();
}

std::optional<mpz_class> unity_order(const FieldElement& x, const mpz_class& bound) {
    if (x.is_zero())
        fail(Errc::ZeroInput, "zero has no multiplicative order");
    FieldElement acc = x;
    for (mpz_class d = 1; d <= bound; ++d) {
        if (acc.is_one())
            return d;
        acc = acc * x;
    }
    return std::nullopt;
}

} // namespace pairkit
