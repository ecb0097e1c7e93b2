// pairkit: exact-arithmetic bilinear pairings on elliptic curves
// Copyright 2026 The pairkit Authors.
// SPDX-License-Identifier: Apache-2.0
#include "pairkit/pairing.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

#include "pairkit/errors.hpp"
#include "pairkit/function.hpp"
#include "pairkit/integer.hpp"

namespace pairkit {

namespace {

constexpr int kRetryBudget = 64;
constexpr int kSearchBudget = 256;

bool divides(const mpz_class& d, const mpz_class& n) {
    return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

mpz_class int_pow(const mpz_class& base, unsigned e) {
    mpz_class out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

unsigned totient(unsigned n) {
    unsigned result = n;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

mpz_class strip_factor(mpz_class n, const mpz_class& r) {
    while (divides(r, n)) n = exact_div(n, r);
    return n;
}

std::vector<std::pair<mpz_class, unsigned>> factor_trial(mpz_class n) {
    std::vector<std::pair<mpz_class, unsigned>> out;
    for (mpz_class d = 2; d * d <= n; ++d) {
        if (!divides(d, n)) continue;
        unsigned e = 0;
        while (divides(d, n)) {
            n = exact_div(n, d);
            ++e;
        }
        out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

// E(L) = Z/r1 x Z/r2 with r1 | r2, from a full enumeration: for each prime
// l, the l-part of r1 is the largest j with exactly l^{2j} points killed
// by l^j.
std::pair<mpz_class, mpz_class> group_structure(const CurvePtr& curve,
                                                const std::vector<Point>& pts,
                                                const mpz_class& n) {
    mpz_class r1 = 1;
    for (const auto& [ell, a] : factor_trial(n)) {
        const unsigned jmax = a / 2;
        if (jmax == 0) continue;
        // counts[j] = #points killed by ell^{j+1}, tallied in one pass by
        // climbing each point through successive multiplications by ell.
        std::vector<mpz_class> counts(jmax, 0);
        for (const Point& pt : pts) {
            Point q = pt;
            for (unsigned j = 0; j < jmax; ++j) {
                q = curve->mul(ell, q);
                if (q.is_infinity()) {
                    for (unsigned jj = j; jj < jmax; ++jj) ++counts[jj];
                    break;
                }
            }
        }
        unsigned alpha = 0;
        for (unsigned j = 0; j < jmax; ++j) {
            if (counts[j] != int_pow(ell, 2 * (j + 1))) break;
            alpha = j + 1;
        }
        r1 *= int_pow(ell, alpha);
    }
    return {r1, exact_div(n, r1)};
}

// A random point of order exactly r: kill the prime-to-r part with the
// cofactor, then climb down the r-power tower.
Point order_r_point(const CurvePtr& curve, const mpz_class& cofactor, const mpz_class& r,
                    Rng& rng) {
    for (int tries = 0; tries < kSearchBudget; ++tries) {
        Point s = curve->mul(cofactor, random_point(curve, rng));
        if (s.is_infinity()) continue;
        while (!curve->mul(r, s).is_infinity()) s = curve->mul(r, s);
        return s;
    }
    fail(Errc::RandomizationExhausted, "no point of order r was found");
}

// f_{n,base}(at) for a point outside the support of the divisor of f:
// plain chain first, then chains rebuilt around colliding multiples, then
// the factored product evaluated through its leading values, which is
// immune to vanishing intermediate factors.
FieldElement exact_f_value(const CurvePtr& curve, const mpz_class& n, const Point& base,
                           const Point& at) {
    const std::vector<EvalTerm> d{{at, 1}};
    bool fall_back = false;
    try {
        return miller_value(curve, n, base, d);
    } catch (const CollisionError& first) {
        std::vector<mpz_class> forbidden{first.chain_value()};
        while (!fall_back && static_cast<int>(forbidden.size()) < kRetryBudget) {
            try {
                return miller_evaluated(curve, Chain::avoiding(n, forbidden), base, d)[0];
            } catch (const CollisionError& e) {
                forbidden.push_back(e.chain_value());
            } catch (const Error& e) {
                if (e.code() != Errc::UnreachableTarget) throw;
                fall_back = true;
            }
        }
    }
    const MillerFactored fac = miller_factored(curve, Chain::single(n), base);
    return fac.functions[0].leading_value_at(at);
}

// M mod r with reduced(f_{m,B}(V)) = reduced_tate(B, V)^M, for a base
// point B in the q_eff-eigenspace of Frobenius, where q_eff has order
// k_eff mod r. Writing m = lambda + r c with lambda = m mod r = q_eff^i
// mod r of order k', the first-order expansion of lambda^{k'} gives
// M = B/A + c with A = k' lambda^{k'-1} and B = (lambda^{k'} - 1)/r.
mpz_class mt_exponent(const mpz_class& q_eff, unsigned k_eff, const mpz_class& r,
                      const mpz_class& m) {
    const mpz_class lambda = mod_floor(m, r);
    const mpz_class c = exact_div(m - lambda, r);
    if (lambda == 0) return mod_floor(c, r);
    unsigned i = 0;
    bool found = false;
    for (; i < k_eff; ++i) {
        if (pow_mod(q_eff, i, r) == lambda) {
            found = true;
            break;
        }
    }
    if (!found)
        fail(Errc::InvalidParameters, "the Miller index is not a power of q modulo r");
    const unsigned kp = k_eff / std::gcd(k_eff, i);
    const mpz_class a = mod_floor(mpz_class(kp) * pow_mod(lambda, kp - 1, r), r);
    if (a == 0) fail(Errc::DegeneratePairing, "the reduction exponent is not invertible");
    const mpz_class b = mod_floor(exact_div(int_pow(lambda, kp) - 1, r), r);
    return mod_floor(b * pow_mod(a, r - 2, r) + c, r);
}

mpz_class poly_eval(const std::vector<mpz_class>& t, const mpz_class& y) {
    mpz_class acc = 0;
    for (std::size_t i = t.size(); i-- > 0;) acc = acc * y + t[i];
    return acc;
}

std::size_t effective_degree(const std::vector<mpz_class>& t) {
    std::size_t deg = 0;
    for (std::size_t i = 0; i < t.size(); ++i)
        if (t[i] != 0) deg = i;
    return deg;
}

} // namespace

ContextPtr PairingContext::make(const CurvePtr& base, const mpz_class& r, unsigned k,
                                Rng& rng) {
    const FieldPtr& bf = base->field();
    if (bf->k() != 1)
        fail(Errc::UnsupportedShape, "structured contexts need a prime base field");
    if (!base->order())
        fail(Errc::InvalidParameters, "the base curve must carry its group order");
    if (k < 2) fail(Errc::InvalidParameters, "the embedding degree must be at least 2");
    if (!is_prime(r)) fail(Errc::InvalidParameters, "the subgroup order must be prime");
    if (r == bf->p())
        fail(Errc::InvalidParameters, "the subgroup order must differ from the characteristic");

    auto ctx = std::shared_ptr<PairingContext>(new PairingContext());
    ctx->structured_ = true;
    ctx->base_ = base;
    ctx->p_ = bf->p();
    ctx->q_ = bf->order();
    ctx->r_ = r;
    ctx->k_ = k;
    ctx->order_base_ = *base->order();
    if (!divides(r, ctx->order_base_))
        fail(Errc::DivisibilityViolation, "the subgroup order must divide the base group order");
    if (divides(r * r, ctx->order_base_))
        fail(Errc::BadResidueStructure,
             "r must divide the base group order exactly once; otherwise every base r-torsion "
             "point is an r-th multiple over the extension and the pairings on it collapse");

    const mpz_class t = ctx->q_ + 1 - ctx->order_base_;
    if (t * t > 4 * ctx->q_)
        fail(Errc::InvalidParameters, "the claimed group order violates the Hasse bound");
    ctx->t_ = t;

    if (pow_mod(ctx->q_, k, r) != 1)
        fail(Errc::BadResidueStructure, "r does not divide q^k - 1");
    for (unsigned d = 1; d < k; ++d)
        if (k % d == 0 && pow_mod(ctx->q_, d, r) == 1)
            fail(Errc::BadResidueStructure, "the embedding degree of r is smaller than k");

    const FieldPtr ext_field = Field::make(ctx->p_, k);
    ctx->order_ext_ = int_pow(ctx->q_, k) + 1 - trace_power(t, ctx->q_, k);
    ctx->ext_ = base->base_change(ext_field)->with_order(ctx->order_ext_);

    if (!divides(r * r, ctx->order_ext_))
        fail(Errc::BadResidueStructure, "the full r-torsion is not rational over the extension");
    ctx->h1_ = exact_div(ctx->order_base_, r);
    ctx->h2_ = exact_div(ctx->order_ext_, r * r);
    ctx->reduction_exponent_ = exact_div(ext_field->unit_order(), r);

    ctx->g1_base_ = order_r_point(base, strip_factor(ctx->order_base_, r), r, rng);
    ctx->g1_ = base->lift_to(ctx->g1_base_, ctx->ext_);

    // G2 generator: the anti-trace k S - Tr(S) of an r-torsion point S of
    // the extension group lies in the q-eigenspace of Frobenius.
    const mpz_class cof2 = strip_factor(ctx->order_ext_, r);
    const mpz_class q_mod_r = mod_floor(ctx->q_, r);
    for (int tries = 0;; ++tries) {
        if (tries >= kSearchBudget)
            fail(Errc::RandomizationExhausted, "no trace-zero point of order r was found");
        const Point s = order_r_point(ctx->ext_, cof2, r, rng);
        const Point cand =
            ctx->ext_->sub_points(ctx->ext_->mul(k, s), ctx->ext_->trace(s, ctx->q_, k));
        if (cand.is_infinity()) continue;
        if (ctx->ext_->frobenius(cand, ctx->q_) != ctx->ext_->mul(q_mod_r, cand))
            fail(Errc::BadResidueStructure, "the anti-trace point is not a Frobenius eigenvector");
        ctx->g2_ = cand;
        break;
    }

    if (base->short_form()) {
        const bool a4z = base->a4().is_zero();
        const bool a6z = base->a6().is_zero();
        for (unsigned d : {6u, 4u, 3u, 2u}) {
            if (k % d) continue;
            const bool ok = d == 2 ||
                            (d == 4 && a6z && !a4z && mod_floor(ctx->q_, 4) == 1) ||
                            ((d == 3 || d == 6) && a4z && !a6z && mod_floor(ctx->q_, 3) == 1);
            if (ok) {
                ctx->twist_d_ = d;
                break;
            }
        }
    }

    if (ext_field->order() <= (mpz_class(1) << 20)) {
        ctx->all_points_ = ctx->ext_->enumerate_points();
        if (mpz_class(ctx->all_points_.size()) != ctx->order_ext_)
            fail(Errc::InvalidParameters, "the extension group order does not match enumeration");
        for (const Point& pt : ctx->all_points_)
            if (ctx->ext_->mul(r, pt).is_infinity()) ctx->torsion_points_.push_back(pt);
        if (mpz_class(ctx->torsion_points_.size()) != r * r)
            fail(Errc::BadResidueStructure, "the rational r-torsion does not have rank two");
        ctx->structure_ = group_structure(ctx->ext_, ctx->all_points_, ctx->order_ext_);
    }
    return ctx;
}

ContextPtr PairingContext::make_torsion(const CurvePtr& curve, const mpz_class& r) {
    const FieldPtr& f = curve->field();
    if (f->order() > (mpz_class(1) << 20))
        fail(Errc::FieldTooLarge, "torsion contexts need an enumerable field");
    if (!is_prime(r)) fail(Errc::InvalidParameters, "the subgroup order must be prime");
    if (r == f->p())
        fail(Errc::InvalidParameters, "the subgroup order must differ from the characteristic");

    auto ctx = std::shared_ptr<PairingContext>(new PairingContext());
    ctx->structured_ = false;
    ctx->p_ = f->p();
    ctx->q_ = f->order();
    ctx->r_ = r;
    ctx->k_ = 1;

    ctx->all_points_ = curve->enumerate_points();
    const mpz_class n(ctx->all_points_.size());
    if (curve->order() && *curve->order() != n)
        fail(Errc::InvalidParameters, "the annotated group order does not match enumeration");
    ctx->base_ = ctx->ext_ = curve->order() ? curve : curve->with_order(n);
    ctx->order_base_ = ctx->order_ext_ = n;
    ctx->t_ = ctx->q_ + 1 - n;
    if (!divides(r, n))
        fail(Errc::DivisibilityViolation, "the subgroup order must divide the group order");

    for (const Point& pt : ctx->all_points_)
        if (ctx->ext_->mul(r, pt).is_infinity()) ctx->torsion_points_.push_back(pt);
    if (mpz_class(ctx->torsion_points_.size()) != r * r)
        fail(Errc::BadResidueStructure, "the full r-torsion must be rational");
    if (!divides(r, f->unit_order()))
        fail(Errc::BadResidueStructure, "the field has no r-th roots of unity");

    ctx->h1_ = exact_div(n, r);
    ctx->h2_ = exact_div(n, r * r);
    ctx->reduction_exponent_ = exact_div(f->unit_order(), r);
    ctx->structure_ = group_structure(ctx->ext_, ctx->all_points_, n);

    ctx->g1_ = ctx->torsion_points_[1];
    ctx->g1_base_ = ctx->g1_;
    std::set<Point, PointLess> span;
    Point acc = Point::infinity();
    for (mpz_class i = 0; i < r; ++i) {
        span.insert(acc);
        acc = ctx->ext_->add_points(acc, ctx->g1_);
    }
    for (const Point& pt : ctx->torsion_points_) {
        if (!span.count(pt)) {
            ctx->g2_ = pt;
            break;
        }
    }
    return ctx;
}

Point PairingContext::lift(const Point& base_point) const {
    if (base_ == ext_) {
        if (!base_->contains(base_point))
            fail(Errc::NotOnCurve, "the point does not lie on the curve");
        return base_point;
    }
    return base_->lift_to(base_point, ext_);
}

Point PairingContext::frobenius_map(const Point& pt, unsigned i) const {
    return ext_->frobenius(pt, q_, i);
}

Point PairingContext::trace_map(const Point& pt) const { return ext_->trace(pt, q_, k_); }

bool PairingContext::is_torsion(const Point& pt) const {
    return ext_->contains(pt) && ext_->mul(r_, pt).is_infinity();
}

bool PairingContext::in_g1(const Point& pt) const {
    return is_torsion(pt) && frobenius_map(pt) == pt;
}

bool PairingContext::in_g2(const Point& pt) const {
    return is_torsion(pt) && frobenius_map(pt) == ext_->mul(mod_floor(q_, r_), pt);
}

std::string PairingContext::describe() const {
    std::ostringstream os;
    os << "mode: " << (structured_ ? "structured" : "torsion") << "\n";
    os << "base: " << base_->describe() << "\n";
    if (structured_) os << "ext: " << ext_->describe() << "\n";
    os << "q: " << q_ << "\nk: " << k_ << "\nr: " << r_ << "\n";
    os << "order_base: " << order_base_ << "\norder_ext: " << order_ext_ << "\n";
    os << "trace: " << t_ << "\nh1: " << h1_ << "\nh2: " << h2_ << "\n";
    os << "g1: " << g1_.str() << "\ng2: " << g2_.str() << "\n";
    if (twist_d_) os << "twist_degree: " << *twist_d_ << "\n";
    if (structure_)
        os << "structure: Z/" << structure_->first << " x Z/" << structure_->second << "\n";
    return os.str();
}

PairingValue weil(const ContextPtr& ctx, const Point& P, const Point& Q, int definition,
                  Rng& rng) {
    if (!ctx->is_torsion(P) || !ctx->is_torsion(Q))
        fail(Errc::NotTorsion, "Weil arguments must be r-torsion points on the extension curve");
    const CurvePtr& E = ctx->ext();
    const mpz_class& r = ctx->r();
    PairingValue out{E->field()->one(), true, bit_length(r), 0};

    switch (definition) {
    case 1: {
        if (ctx->torsion_points().empty())
            fail(Errc::Def1Infeasible, "definition 1 needs an enumerable full torsion group");
        Point p0;
        bool found = false;
        for (const Point& cand : ctx->all_points()) {
            if (E->mul(r, cand) == P) {
                p0 = cand;
                found = true;
                break;
            }
        }
        if (!found)
            fail(Errc::Def1Infeasible, "no rational r-division point of the first argument");
        Divisor d(E);
        for (const Point& R : ctx->torsion_points()) {
            d.add_point(E->add_points(p0, R), 1);
            d.add_point(R, -1);
        }
        const LineProduct g = function_from_divisor(E, d);
        for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
            const Point x = random_point(E, rng);
            if (x.is_infinity()) continue;
            const Point xq = E->add_points(x, Q);
            if (xq.is_infinity()) continue;
            try {
                const FieldElement num = g.evaluate(xq);
                const FieldElement den = g.evaluate(x);
                if (num.is_zero() || den.is_zero()) continue;
                out.value = num / den;
                return out;
            } catch (const Error& e) {
                if (e.code() != Errc::DivisionByZero) throw;
            }
        }
        fail(Errc::RandomizationExhausted, "no evaluation point avoided the divisor support");
    }
    case 2: {
        if (P.is_infinity() || Q.is_infinity() || P == Q) return out;
        out.miller_calls = 2;
        out.value = exact_f_value(E, r, P, Q) / exact_f_value(E, r, Q, P);
        if (mpz_odd_p(r.get_mpz_t())) out.value = -out.value;
        return out;
    }
    case 3: {
        if (P.is_infinity() || Q.is_infinity()) return out;
        for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
            const Point r1 = random_point(E, rng);
            const Point r2 = random_point(E, rng);
            if (r1.is_infinity() || r2.is_infinity()) continue;
            const Point pr = E->add_points(P, r1);
            const Point qr = E->add_points(Q, r2);
            if (pr.is_infinity() || qr.is_infinity()) continue;
            if (r1 == r2 || r1 == qr || pr == r2 || pr == qr) continue;
            try {
                const std::vector<EvalTerm> dq{{qr, 1}, {r2, -1}};
                const std::vector<EvalTerm> dp{{pr, 1}, {r1, -1}};
                out.miller_calls += 4;
                const FieldElement fp =
                    miller_value(E, r, pr, dq) / miller_value(E, r, r1, dq);
                const FieldElement fq =
                    miller_value(E, r, qr, dp) / miller_value(E, r, r2, dp);
                out.value = fp / fq;
                return out;
            } catch (const CollisionError&) {
            }
        }
        fail(Errc::RandomizationExhausted, "no divisor randomization had disjoint support");
    }
    default:
        fail(Errc::InvalidParameters, "the Weil definition must be 1, 2, or 3");
    }
}

PairingValue tate(const ContextPtr& ctx, const Point& P, const Point& Q, int definition,
                  bool reduced, Rng& rng) {
    const CurvePtr& E = ctx->ext();
    const mpz_class& r = ctx->r();
    if (!ctx->is_torsion(P))
        fail(Errc::NotTorsion, "the first Tate argument must be an r-torsion point");
    if (!E->contains(Q))
        fail(Errc::NotOnCurve, "the second Tate argument must lie on the extension curve");
    if (definition != 1 && definition != 2)
        fail(Errc::InvalidParameters, "the Tate definition must be 1 or 2");

    PairingValue out{E->field()->one(), reduced, bit_length(r), 0};
    if (P.is_infinity() || Q.is_infinity()) return out;

    bool done = false;
    if (definition == 1) {
        for (int attempt = 0; attempt < kRetryBudget && !done; ++attempt) {
            const Point r1 = random_point(E, rng);
            const Point r2 = random_point(E, rng);
            if (r1.is_infinity() || r2.is_infinity()) continue;
            const Point pr = E->add_points(P, r1);
            const Point qr = E->add_points(Q, r2);
            if (pr.is_infinity() || qr.is_infinity()) continue;
            if (r1 == r2 || r1 == qr || pr == r2 || pr == qr) continue;
            try {
                const std::vector<EvalTerm> dq{{qr, 1}, {r2, -1}};
                out.miller_calls += 2;
                out.value = miller_value(E, r, pr, dq) / miller_value(E, r, r1, dq);
                done = true;
            } catch (const CollisionError&) {
            }
        }
        if (!done)
            fail(Errc::RandomizationExhausted, "no divisor randomization had disjoint support");
    } else {
        Point qe = Q;
        bool need_shift = qe == P;
        for (int attempt = 0; attempt < kRetryBudget && !done; ++attempt) {
            if (need_shift) {
                const Point shifted = E->add_points(Q, E->mul(r, random_point(E, rng)));
                if (shifted.is_infinity() || shifted == P) continue;
                qe = shifted;
            }
            try {
                out.miller_calls += 1;
                out.value = miller_value(E, r, P, {{qe, 1}});
                done = true;
            } catch (const CollisionError&) {
                need_shift = true;
            }
        }
        if (!done)
            fail(Errc::RandomizationExhausted, "no class representative avoided the support");
    }
    if (reduced) out.value = ctx->reduce(out.value);
    return out;
}

Point torsion_representative(const ContextPtr& ctx, const Point& Q) {
    if (!ctx->ext()->contains(Q))
        fail(Errc::NotOnCurve, "the point must lie on the extension curve");
    if (!ctx->structure())
        fail(Errc::InvalidParameters, "the group structure of the context is unknown");
    const auto& [r1, r2] = *ctx->structure();
    const mpz_class& r = ctx->r();
    if (!divides(r, r1))
        fail(Errc::BadResidueStructure, "the full r-torsion is not rational");
    mpz_class g;
    const mpz_class quot = exact_div(r2, r1);
    mpz_gcd(g.get_mpz_t(), quot.get_mpz_t(), r.get_mpz_t());
    if (g != 1)
        fail(Errc::NotInjective, "the reduction map is not injective for this group structure");
    return ctx->ext()->mul(exact_div(r2, r), Q);
}

PairingValue ate_family(const ContextPtr& ctx, const Point& P, const Point& Q, unsigned i,
                        bool twisted, bool reduced) {
    if (!ctx->structured())
        fail(Errc::InvalidParameters, "eigenvalue pairings need a structured context");
    if (i == 0) fail(Errc::InvalidParameters, "the ate power must be positive");
    if (!ctx->in_g1(P))
        fail(Errc::NotTorsion, "the G1 argument must be a Frobenius-fixed r-torsion point");
    if (!ctx->in_g2(Q))
        fail(Errc::NotTorsion, "the G2 argument must be a trace-zero r-torsion point");

    const CurvePtr& E = ctx->ext();
    const mpz_class& r = ctx->r();
    mpz_class q_eff = ctx->q();
    unsigned k_eff = ctx->k();
    unsigned e = 1;
    if (twisted) {
        if (!ctx->twist_degree()) fail(Errc::MissingTwist, "the curve has no usable twist");
        k_eff = *ctx->twist_degree();
        e = ctx->k() / k_eff;
        q_eff = int_pow(ctx->q(), e);
    }

    const mpz_class base_power = int_pow(ctx->T(), twisted ? e : 1u);
    const mpz_class m = i == 1 ? base_power : mod_floor(int_pow(base_power, i), r);
    const mpz_class exponent = mt_exponent(q_eff, k_eff, r, m);
    if (exponent == 0)
        fail(Errc::DegeneratePairing, "this ate power is degenerate on the context");

    PairingValue out{E->field()->one(), reduced, bit_length(m), 0};
    if (P.is_infinity() || Q.is_infinity()) return out;

    out.miller_calls = 1;
    out.value = twisted ? miller_value(E, m, P, {{Q, 1}}) : miller_value(E, m, Q, {{P, 1}});
    if (reduced) out.value = ctx->reduce(out.value);
    return out;
}

PoweredPairing r_ate(const ContextPtr& ctx, const Point& P, const Point& Q,
                     const mpz_class& t0, const mpz_class& t1, const mpz_class& l0,
                     const mpz_class& l1, bool reduced) {
    if (!ctx->structured())
        fail(Errc::InvalidParameters, "eigenvalue pairings need a structured context");
    if (t1 != t0 * l1 + l0)
        fail(Errc::BadDecomposition, "the R-ate parameters must satisfy t1 = t0 l1 + l0");
    if (!ctx->in_g1(P))
        fail(Errc::NotTorsion, "the G1 argument must be a Frobenius-fixed r-torsion point");
    if (!ctx->in_g2(Q))
        fail(Errc::NotTorsion, "the G2 argument must be a trace-zero r-torsion point");

    const CurvePtr& E = ctx->ext();
    const mpz_class& r = ctx->r();
    const mpz_class m0 = mt_exponent(ctx->q(), ctx->k(), r, t0);
    const mpz_class m1 = mt_exponent(ctx->q(), ctx->k(), r, t1);
    const mpz_class exponent = mod_floor(m1 - l1 * m0, r);

    PoweredPairing out{{E->field()->one(), reduced,
                        std::max(bit_length(l0), bit_length(l1)), 0},
                       exponent};
    if (P.is_infinity() || Q.is_infinity()) return out;

    const Point a = E->mul(t0, Q);
    out.pairing.miller_calls = 2;
    FieldElement value =
        miller_value(E, l1, a, {{P, 1}}) * miller_value(E, l0, Q, {{P, 1}});
    const AddResult corr = E->add(E->mul(l1, a), E->mul(l0, Q));
    value *= corr.ell.eval(P) / corr.vee.eval(P);
    out.pairing.value = reduced ? ctx->reduce(value) : value;
    return out;
}

mpz_class nondegeneracy_exponent(const std::vector<mpz_class>& t, const mpz_class& y,
                                 const mpz_class& q, unsigned k, const mpz_class& r) {
    if (t.empty()) fail(Errc::InvalidParameters, "the polynomial must have a coefficient");
    const mpz_class ty = poly_eval(t, y);
    if (!divides(r, ty))
        fail(Errc::DivisibilityViolation, "r must divide the polynomial value at y");
    const mpz_class num = mpz_class(k) * int_pow(q, k - 1) * ty -
                          (poly_eval(t, int_pow(y, k)) - poly_eval(t, mpz_class(1)));
    return exact_div(num, r);
}

PoweredPairing hess(const ContextPtr& ctx, const Point& P, const Point& Q,
                    const std::vector<mpz_class>& t, const mpz_class& y, HessMode mode,
                    bool reduced) {
    if (!ctx->structured())
        fail(Errc::InvalidParameters, "eigenvalue pairings need a structured context");
    if (t.empty()) fail(Errc::InvalidParameters, "the polynomial must have a coefficient");
    if (!ctx->in_g1(P))
        fail(Errc::NotTorsion, "the G1 argument must be a Frobenius-fixed r-torsion point");
    if (!ctx->in_g2(Q))
        fail(Errc::NotTorsion, "the G2 argument must be a trace-zero r-torsion point");

    const CurvePtr& E = ctx->ext();
    const mpz_class& r = ctx->r();
    mpz_class q_eff = ctx->q();
    unsigned k_eff = ctx->k();
    if (mode == HessMode::Twisted) {
        if (!ctx->twist_degree()) fail(Errc::MissingTwist, "the curve has no usable twist");
        k_eff = *ctx->twist_degree();
        q_eff = int_pow(ctx->q(), ctx->k() / k_eff);
    }

    if (pow_mod(y, k_eff, r) != 1)
        fail(Errc::NotRootOfUnity, "y must be a k-th root of unity modulo r");
    if (!divides(r, poly_eval(t, y)))
        fail(Errc::NotInLatticeKernel, "r must divide the polynomial value at y");
    if (effective_degree(t) + 1 > totient(k_eff))
        fail(Errc::InvalidParameters, "the polynomial degree must stay below phi(k)");
    if (mode == HessMode::Vercauteren && y != ctx->q())
        fail(Errc::InvalidParameters, "Frobenius-shared evaluation needs y = q");

    const mpz_class exponent = nondegeneracy_exponent(t, y, q_eff, k_eff, r);

    std::size_t loop_bits = 0;
    for (const mpz_class& ti : t) loop_bits = std::max(loop_bits, bit_length(ti));
    PoweredPairing out{{E->field()->one(), reduced, loop_bits, 0}, exponent};

    const Point& base = mode == HessMode::Twisted ? P : Q;
    const Point& at = mode == HessMode::Twisted ? Q : P;
    if (base.is_infinity() || at.is_infinity()) return out;

    const std::size_t m = t.size() - 1;
    std::vector<Point> multiples(m + 1);
    for (std::size_t idx = 0; idx <= m; ++idx)
        multiples[idx] = E->mul(mod_floor(int_pow(y, idx), r), base);

    FieldElement value = E->field()->one();
    if (mode == HessMode::Vercauteren) {
        // One shared Miller pass: f_{n, pi^idx Q}(P) = f_{n, Q}(P)^{q^idx}
        // for Frobenius-fixed P, and pi^idx Q = (y^idx mod r) Q since
        // y = q on the eigenspace.
        std::vector<mpz_class> targets;
        for (const mpz_class& ti : t)
            if (ti != 0) targets.push_back(ti);
        if (!targets.empty()) {
            const Chain chain = Chain::multi(targets);
            const std::vector<FieldElement> vals =
                miller_evaluated(E, chain, base, {{at, 1}});
            out.pairing.miller_calls = 1;
            std::size_t which = 0;
            for (std::size_t idx = 0; idx <= m; ++idx) {
                if (t[idx] == 0) continue;
                value *= pow(vals[which++], int_pow(ctx->q(), idx));
            }
        }
    } else {
        for (std::size_t idx = 0; idx <= m; ++idx) {
            if (t[idx] == 0) continue;
            out.pairing.miller_calls += 1;
            value *= miller_value(E, t[idx], multiples[idx], {{at, 1}});
        }
    }

    // Correction lines: the walk S_idx = S_{idx-1} + t_idx R_idx returns to
    // the identity because t(y) = 0 mod r.
    Point s = E->mul(t[0], multiples[0]);
    for (std::size_t idx = 1; idx <= m; ++idx) {
        const AddResult res = E->add(s, E->mul(t[idx], multiples[idx]));
        value *= res.ell.eval(at) / res.vee.eval(at);
        s = res.sum;
    }
    if (!s.is_infinity())
        fail(Errc::BadDecomposition, "the correction walk did not return to the identity");

    out.pairing.value = reduced ? ctx->reduce(value) : value;
    return out;
}

mpz_class f_tate_exponent(const ContextPtr& ctx, const mpz_class& m) {
    if (!ctx->structured())
        fail(Errc::InvalidParameters, "the reduction exponent needs a structured context");
    return mt_exponent(ctx->q(), ctx->k(), ctx->r(), m);
}

PairingValue tate_bkls(const ContextPtr& ctx, const Point& P, const Point& Q) {
    if (!ctx->structured())
        fail(Errc::InvalidParameters, "denominator elimination needs a structured context");
    if (!ctx->in_g1(P))
        fail(Errc::NotTorsion, "the G1 argument must be a Frobenius-fixed r-torsion point");
    if (!ctx->in_g2(Q))
        fail(Errc::NotTorsion, "the G2 argument must be a trace-zero r-torsion point");

    const CurvePtr& E = ctx->ext();
    PairingValue out{E->field()->one(), true, bit_length(ctx->r()), 0};
    if (P.is_infinity() || Q.is_infinity()) return out;
    if (pow(Q.x(), ctx->q()) != Q.x())
        fail(Errc::InvalidParameters,
             "denominator elimination needs x(Q) fixed by the base Frobenius");

    const Chain chain = Chain::single(ctx->r());
    out.miller_calls = 1;
    out.value = ctx->reduce(
        miller_evaluated(E, chain, P, {{Q, 1}}, MillerOptions{true})[0]);
    return out;
}

} // namespace pairkit
