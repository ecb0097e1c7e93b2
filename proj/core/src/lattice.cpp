// pairkit: exact-arithmetic bilinear pairings on elliptic curves
// Copyright 2026 The pairkit Authors.
// SPDX-License-Identifier: Apache-2.0

#include "pairkit/lattice.hpp"

#include <utility>

#include "pairkit/curve.hpp"
#include "pairkit/errors.hpp"
#include "pairkit/field.hpp"
#include "pairkit/integer.hpp"

namespace pairkit {

namespace {

void check_basis_shape(const IntMatrix& basis) {
    if (basis.empty()) fail(Errc::InvalidParameters, "the basis must be nonempty");
    if (basis.size() > 8)
        fail(Errc::InvalidParameters, "the basis dimension must be at most 8");
    const std::size_t width = basis[0].size();
    if (width == 0) fail(Errc::InvalidParameters, "basis rows must be nonempty");
    for (const auto& row : basis)
        if (row.size() != width)
            fail(Errc::InvalidParameters, "basis rows must have equal width");
}

// Exact rational Gram-Schmidt data over the integer rows.
struct GramSchmidt {
    std::vector<std::vector<mpq_class>> star;
    std::vector<std::vector<mpq_class>> mu;
    std::vector<mpq_class> norm;
};

mpq_class dot(const std::vector<mpz_class>& a, const std::vector<mpq_class>& b) {
    mpq_class acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += mpq_class(a[i]) * b[i];
    return acc;
}

GramSchmidt gram_schmidt(const IntMatrix& basis) {
    const std::size_t n = basis.size();
    const std::size_t m = basis[0].size();
    GramSchmidt gs;
    gs.star.assign(n, std::vector<mpq_class>(m, 0));
    gs.mu.assign(n, std::vector<mpq_class>(n, 0));
    gs.norm.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t c = 0; c < m; ++c) gs.star[i][c] = mpq_class(basis[i][c]);
        for (std::size_t j = 0; j < i; ++j) {
            gs.mu[i][j] = dot(basis[i], gs.star[j]) / gs.norm[j];
            for (std::size_t c = 0; c < m; ++c) gs.star[i][c] -= gs.mu[i][j] * gs.star[j][c];
        }
        for (std::size_t c = 0; c < m; ++c) gs.norm[i] += gs.star[i][c] * gs.star[i][c];
        if (gs.norm[i] == 0) fail(Errc::RankDeficient, "the basis rows are linearly dependent");
    }
    return gs;
}

// floor(x + 1/2); half-integers round up.
mpz_class round_nearest(const mpq_class& x) {
    mpq_class shifted = x + mpq_class(1, 2);
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), shifted.get_num().get_mpz_t(), shifted.get_den().get_mpz_t());
    return q;
}

mpz_class poly_eval(const std::vector<mpz_class>& coeffs, const mpz_class& x) {
    mpz_class acc = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
    return acc;
}

// Least i in 1..bound with q^i = 1 mod r; 0 when none.
unsigned bounded_order(const mpz_class& q, const mpz_class& r, unsigned bound) {
    mpz_class acc = 1;
    for (unsigned i = 1; i <= bound; ++i) {
        acc = mod_floor(acc * q, r);
        if (acc == 1) return i;
    }
    return 0;
}

FamilyInstance instantiate_at(const CurveFamily& family, const mpz_class& x0, const mpz_class& p,
                              const mpz_class& r, const mpz_class& order, Rng& rng) {
    // The prescribed order must be the unique multiple of r inside the Hasse
    // window; a random point of order divisible by r then certifies it.
    mpz_class slack = isqrt(4 * p);
    mpz_class low = p + 1 - slack;
    mpz_class high = p + 1 + slack;
    if (order < low || order > high)
        fail(Errc::CurveSearchFailed, "the family trace violates the Hasse bound at this x0");
    mpz_class lo_q, hi_q;
    mpz_cdiv_q(lo_q.get_mpz_t(), low.get_mpz_t(), r.get_mpz_t());
    mpz_fdiv_q(hi_q.get_mpz_t(), high.get_mpz_t(), r.get_mpz_t());
    if (hi_q != lo_q)
        fail(Errc::CurveSearchFailed,
             "the Hasse window holds more than one multiple of the subgroup order");

    FieldPtr field = Field::make(p, 1u);
    mpz_class h = exact_div(order, r);
    mpz_class twist_order = 2 * p + 2 - order;
    for (int attempt = 0; attempt < 100000; ++attempt) {
        FieldElement a = field->from_int(rng.below(p));
        FieldElement b = field->from_int(rng.below(p));
        CurvePtr curve;
        try {
            curve = Curve::make_short(field, a, b);
        } catch (const Error&) {
            continue;
        }

        bool confirmed = false;
        bool wrong_order = false;
        for (int tries = 0; tries < 8 && !confirmed && !wrong_order; ++tries) {
            Point pt = random_point(curve, rng);
            if (pt.is_infinity()) continue;
            if (!curve->mul(order, pt).is_infinity()) {
                wrong_order = true;
            } else if (!curve->mul(h, pt).is_infinity()) {
                confirmed = true;
            }
        }
        if (!confirmed) continue;

        // Quadratic twist by a nonsquare d carries the complementary order.
        FieldElement d = a;
        bool found_d = false;
        for (int tries = 0; tries < 64 && !found_d; ++tries) {
            mpz_class raw = rng.below(p);
            if (raw == 0) continue;
            FieldElement cand = field->from_int(raw);
            if (!sqrt(cand)) {
                d = cand;
                found_d = true;
            }
        }
        if (!found_d) continue;
        CurvePtr twist = Curve::make_short(field, a * d * d, b * d * d * d);
        Point q = random_point(twist, rng);
        if (q.is_infinity() || !twist->mul(twist_order, q).is_infinity()) continue;

        ContextPtr ctx = PairingContext::make(curve->with_order(order), r, family.k, rng);
        return FamilyInstance{x0, ctx};
    }
    fail(Errc::CurveSearchFailed, "no curve with the prescribed order was found within the budget");
}

} // namespace

RootLattice build_lattice(const mpz_class& r, const mpz_class& y, unsigned dim) {
    if (r < 2) fail(Errc::InvalidParameters, "the subgroup order must exceed 1");
    if (dim == 0 || dim > 8)
        fail(Errc::InvalidParameters, "the lattice dimension must be between 1 and 8");
    if (mod_floor(y, r) == 0) fail(Errc::NotRootOfUnity, "y must be invertible modulo r");
    RootLattice lat;
    lat.r = r;
    lat.y = y;
    lat.basis.assign(dim, std::vector<mpz_class>(dim, 0));
    lat.basis[0][0] = r;
    mpz_class power = 1;
    for (unsigned i = 1; i < dim; ++i) {
        power = mod_floor(power * y, r);
        lat.basis[i][0] = -power;
        lat.basis[i][i] = 1;
    }
    return lat;
}

IntMatrix lll_reduce(const IntMatrix& basis) {
    check_basis_shape(basis);
    IntMatrix b = basis;
    const std::size_t n = b.size();
    GramSchmidt gs = gram_schmidt(b);
    const mpq_class delta(99, 100);
    std::size_t k = 1;
    while (k < n) {
        for (std::size_t j = k; j-- > 0;) {
            mpz_class q = round_nearest(gs.mu[k][j]);
            if (q != 0) {
                for (std::size_t c = 0; c < b[k].size(); ++c) b[k][c] -= q * b[j][c];
                gs = gram_schmidt(b);
            }
        }
        if (gs.norm[k] >= (delta - gs.mu[k][k - 1] * gs.mu[k][k - 1]) * gs.norm[k - 1]) {
            ++k;
        } else {
            std::swap(b[k], b[k - 1]);
            gs = gram_schmidt(b);
            k = k > 1 ? k - 1 : 1;
        }
    }
    return b;
}

bool lovasz_holds(const IntMatrix& basis) {
    check_basis_shape(basis);
    GramSchmidt gs;
    try {
        gs = gram_schmidt(basis);
    } catch (const Error&) {
        return false;
    }
    const mpq_class delta(99, 100);
    const mpq_class half(1, 2);
    for (std::size_t i = 1; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j)
            if (abs(gs.mu[i][j]) > half) return false;
        if (gs.norm[i] < (delta - gs.mu[i][i - 1] * gs.mu[i][i - 1]) * gs.norm[i - 1])
            return false;
    }
    return true;
}

std::vector<mpz_class> shortest_vector(const IntMatrix& basis) {
    IntMatrix reduced = lll_reduce(basis);
    // Among rows of minimal norm: sign-normalized, lexicographically least.
    std::vector<mpz_class> best;
    mpz_class best_norm = -1;
    for (const auto& row : reduced) {
        mpz_class norm = 0;
        for (const auto& c : row) norm += c * c;
        std::vector<mpz_class> candidate = row;
        for (const auto& c : candidate) {
            if (c > 0) break;
            if (c < 0) {
                for (auto& e : candidate) e = -e;
                break;
            }
        }
        if (best_norm < 0 || norm < best_norm || (norm == best_norm && candidate < best)) {
            best_norm = norm;
            best = std::move(candidate);
        }
    }
    return best;
}

CurveFamily freeman_family() {
    CurveFamily fam;
    fam.k = 10;
    fam.p_poly = {3, 10, 25, 25, 25};
    fam.u_poly = {3, 5, 10};
    fam.r_poly = {1, 5, 15, 25, 25};
    return fam;
}

FamilyInstance family_instantiate(const CurveFamily& family, const mpz_class& max_abs_x,
                                  Rng& rng) {
    if (family.k < 2 || family.p_poly.empty() || family.u_poly.empty() || family.r_poly.empty())
        fail(Errc::InvalidParameters, "the family must carry k >= 2 and nonempty polynomials");
    if (max_abs_x < 0) fail(Errc::InvalidParameters, "the search range must be nonnegative");
    for (mpz_class mag = 0; mag <= max_abs_x; ++mag) {
        for (int sign = 0; sign < 2; ++sign) {
            if (mag == 0 && sign == 1) continue;
            mpz_class x0 = mag;
            if (sign == 1) x0 = -x0;
            mpz_class p = poly_eval(family.p_poly, x0);
            mpz_class r = poly_eval(family.r_poly, x0);
            if (p <= 3 || r <= 3 || p == r || !is_prime(p) || !is_prime(r)) continue;
            mpz_class order = p + 1 - poly_eval(family.u_poly, x0);
            if (mod_floor(order, r) != 0)
                fail(Errc::InvalidParameters, "the family trace identity fails at this x0");
            // The subgroup must see the full embedding degree of the family.
            if (bounded_order(p, r, family.k) != family.k) continue;
            return instantiate_at(family, x0, p, r, order, rng);
        }
    }
    fail(Errc::NoInstanceInRange, "no x0 in range gives simultaneous primes");
}

} // namespace pairkit
