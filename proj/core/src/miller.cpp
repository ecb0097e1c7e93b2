// pairkit: exact-arithmetic bilinear pairings on elliptic curves
// Copyright 2026 The pairkit Authors.
// SPDX-License-Identifier: Apache-2.0
#include "pairkit/miller.hpp"

#include <array>
#include <map>
#include <optional>
#include <set>

#include "pairkit/errors.hpp"
#include "pairkit/integer.hpp"

namespace pairkit {

// ---------------------------------------------------------------------------
// Chain construction

std::size_t Chain::push(ChainStep step, mpz_class value) {
    steps_.push_back(step);
    values_.push_back(std::move(value));
    return steps_.size() - 1;
}

void Chain::validate() const {
    if (steps_.size() != values_.size())
        fail(Errc::InvalidParameters, "chain step/value size mismatch");
    if (steps_.empty() || steps_[0].kind != ChainStep::Kind::Init || values_[0] != 1)
        fail(Errc::InvalidParameters, "chain must start with Init = 1");
    for (std::size_t i = 1; i < steps_.size(); ++i) {
        const ChainStep& s = steps_[i];
        switch (s.kind) {
        case ChainStep::Kind::Init:
            fail(Errc::InvalidParameters, "duplicate Init entry");
        case ChainStep::Kind::Add:
            if (s.j >= i || s.k >= i)
                fail(Errc::InvalidParameters, "Add references a later entry");
            if (values_[i] != values_[s.j] + values_[s.k])
                fail(Errc::InvalidParameters, "Add value mismatch");
            break;
        case ChainStep::Kind::Neg:
            if (s.j >= i) fail(Errc::InvalidParameters, "Neg references a later entry");
            if (values_[i] != -values_[s.j]) fail(Errc::InvalidParameters, "Neg value mismatch");
            break;
        }
    }
    if (targets_.empty()) fail(Errc::InvalidParameters, "chain has no targets");
    for (std::size_t t : targets_)
        if (t >= steps_.size()) fail(Errc::InvalidParameters, "target out of range");
}

Chain Chain::single(const mpz_class& n) {
    Chain c;
    c.push({ChainStep::Kind::Init, 0, 0}, 1);
    if (n == 1) {
        c.targets_.push_back(0);
        return c;
    }
    if (n == 0 || n == -1) {
        const std::size_t neg = c.push({ChainStep::Kind::Neg, 0, 0}, -1);
        c.targets_.push_back(n == -1 ? neg : c.push({ChainStep::Kind::Add, 0, neg}, 0));
        return c;
    }
    const mpz_class a = abs(n);
    std::size_t cur = 0;
    mpz_class val = 1;
    for (std::size_t i = bit_length(a) - 1; i-- > 0;) {
        cur = c.push({ChainStep::Kind::Add, cur, cur}, 2 * val);
        val *= 2;
        if (mpz_tstbit(a.get_mpz_t(), i)) {
            cur = c.push({ChainStep::Kind::Add, cur, 0}, val + 1);
            val += 1;
        }
    }
    if (n < 0) cur = c.push({ChainStep::Kind::Neg, cur, 0}, n);
    c.targets_.push_back(cur);
    c.validate();
    return c;
}

Chain Chain::multi(const std::vector<mpz_class>& targets) {
    if (targets.empty()) fail(Errc::InvalidParameters, "no chain targets");
    Chain c;
    c.push({ChainStep::Kind::Init, 0, 0}, 1);
    std::map<mpz_class, std::size_t> memo{{mpz_class(1), 0}};

    auto ensure_pos = [&](const mpz_class& v) -> std::size_t {
        auto hit = memo.find(v);
        if (hit != memo.end()) return hit->second;
        std::size_t cur = 0;
        mpz_class pv = 1;
        for (std::size_t i = bit_length(v) - 1; i-- > 0;) {
            mpz_class next;
            mpz_tdiv_q_2exp(next.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(i));
            auto it = memo.find(next);
            if (it != memo.end()) {
                cur = it->second;
                pv = next;
                continue;
            }
            const mpz_class dbl = 2 * pv;
            std::size_t didx;
            auto dit = memo.find(dbl);
            if (dit != memo.end()) {
                didx = dit->second;
            } else {
                didx = c.push({ChainStep::Kind::Add, cur, cur}, dbl);
                memo.emplace(dbl, didx);
            }
            if (next == dbl) {
                cur = didx;
            } else {
                cur = c.push({ChainStep::Kind::Add, didx, 0}, next);
                memo.emplace(next, cur);
            }
            pv = next;
        }
        return cur;
    };
    auto ensure_neg_one = [&]() -> std::size_t {
        auto it = memo.find(mpz_class(-1));
        if (it != memo.end()) return it->second;
        const std::size_t idx = c.push({ChainStep::Kind::Neg, 0, 0}, -1);
        memo.emplace(mpz_class(-1), idx);
        return idx;
    };

    for (const mpz_class& t : targets) {
        std::size_t idx;
        if (t >= 1) {
            idx = ensure_pos(t);
        } else if (t == 0) {
            auto it = memo.find(t);
            if (it != memo.end()) {
                idx = it->second;
            } else {
                idx = c.push({ChainStep::Kind::Add, 0, ensure_neg_one()}, 0);
                memo.emplace(mpz_class(0), idx);
            }
        } else {
            auto it = memo.find(t);
            if (it != memo.end()) {
                idx = it->second;
            } else {
                idx = c.push({ChainStep::Kind::Neg, ensure_pos(-t), 0}, t);
                memo.emplace(t, idx);
            }
        }
        c.targets_.push_back(idx);
    }
    c.validate();
    return c;
}

Chain Chain::avoiding(const mpz_class& n, const std::vector<mpz_class>& forbidden) {
    const std::set<mpz_class> F(forbidden.begin(), forbidden.end());
    if (F.count(1)) fail(Errc::UnreachableTarget, "the mandatory chain value 1 is forbidden");
    if (F.count(n)) fail(Errc::UnreachableTarget, "the chain target itself is forbidden");

    if (n == 1 || n == 0 || n == -1) {
        if (n <= 0 && F.count(-1))
            fail(Errc::UnreachableTarget, "the mandatory chain value -1 is forbidden");
        return single(n);
    }
    if (n < 0) {
        Chain c = avoiding(-n, forbidden);
        const std::size_t idx = c.push({ChainStep::Kind::Neg, c.targets_[0], 0}, n);
        c.targets_ = {idx};
        c.validate();
        return c;
    }

    // Dynamic program over signed prefixes: at bit level i the running value
    // is (n >> i) + delta with |delta| <= 2. A level transition appends
    // value 2v + c via at most one helper entry: {2v} for c = 0, either
    // {v + c, 2v + c} or {2v, 2v + c} for |c| = 1, {v + c/2, 2v + c} for
    // |c| = 2, all of which must dodge the forbidden set.
    const bool neg_const_ok = F.count(-1) == 0;
    const std::size_t L = bit_length(n);
    auto prefix = [&](std::size_t i) {
        mpz_class out;
        mpz_tdiv_q_2exp(out.get_mpz_t(), n.get_mpz_t(), static_cast<mp_bitcnt_t>(i));
        return out;
    };

    constexpr int kDeltas = 5; // delta in [-2, 2]
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    struct Cell {
        std::size_t cost = kNone;
        int prev_delta = 0;
        int c = 0;
        bool double_first = false;
    };
    std::vector<std::array<Cell, kDeltas>> dp(L);
    dp[L - 1][2].cost = 0; // delta = 0, value 1

    for (std::size_t i = L - 1; i >= 1; --i) {
        const mpz_class pi = prefix(i);
        const mpz_class pnext = prefix(i - 1);
        for (int di = 0; di < kDeltas; ++di) {
            if (dp[i][di].cost == kNone) continue;
            const mpz_class v = pi + (di - 2);
            for (int dn = 0; dn < kDeltas; ++dn) {
                const mpz_class vnext = pnext + (dn - 2);
                const mpz_class c = vnext - 2 * v;
                if (c < -2 || c > 2) continue;
                if (c < 0 && !neg_const_ok) continue;
                if (F.count(vnext)) continue;
                std::size_t edge_cost = 1;
                bool double_first = false;
                if (c != 0) {
                    edge_cost = 2;
                    if (c == 1 || c == -1) {
                        if (F.count(v + c)) {
                            if (F.count(2 * v)) continue;
                            double_first = true;
                        }
                    } else {
                        if (F.count(v + c / 2)) continue;
                    }
                }
                const std::size_t total = dp[i][di].cost + edge_cost;
                Cell& cell = dp[i - 1][dn];
                if (total < cell.cost) {
                    cell.cost = total;
                    cell.prev_delta = di - 2;
                    cell.c = static_cast<int>(c.get_si());
                    cell.double_first = double_first;
                }
            }
        }
    }
    if (dp[0][2].cost == kNone)
        fail(Errc::UnreachableTarget, "no addition chain avoids the forbidden values");

    // Walk the predecessors back up, then emit top-down.
    std::vector<int> cs(L - 1);
    std::vector<char> dfs(L - 1);
    int delta = 0;
    for (std::size_t i = 0; i + 1 < L; ++i) {
        const Cell& cell = dp[i][delta + 2];
        cs[i] = cell.c;
        dfs[i] = cell.double_first ? 1 : 0;
        delta = cell.prev_delta;
    }

    Chain c;
    c.push({ChainStep::Kind::Init, 0, 0}, 1);
    bool needs_neg = false;
    for (int ci : cs)
        if (ci < 0) needs_neg = true;
    std::size_t neg_idx = 0;
    if (needs_neg) neg_idx = c.push({ChainStep::Kind::Neg, 0, 0}, -1);

    std::size_t cur = 0;
    mpz_class val = 1;
    for (std::size_t i = L - 1; i >= 1; --i) {
        const int ci = cs[i - 1];
        if (ci == 0) {
            cur = c.push({ChainStep::Kind::Add, cur, cur}, 2 * val);
        } else if (ci == 1 || ci == -1) {
            const std::size_t cidx = ci > 0 ? 0 : neg_idx;
            if (dfs[i - 1]) {
                const std::size_t t = c.push({ChainStep::Kind::Add, cur, cur}, 2 * val);
                cur = c.push({ChainStep::Kind::Add, t, cidx}, 2 * val + ci);
            } else {
                const std::size_t t = c.push({ChainStep::Kind::Add, cur, cidx}, val + ci);
                cur = c.push({ChainStep::Kind::Add, t, cur}, 2 * val + ci);
            }
        } else {
            const std::size_t cidx = ci > 0 ? 0 : neg_idx;
            const std::size_t t = c.push({ChainStep::Kind::Add, cur, cidx}, val + ci / 2);
            cur = c.push({ChainStep::Kind::Add, t, t}, 2 * val + ci);
        }
        val = 2 * val + ci;
    }
    c.targets_.push_back(cur);
    c.validate();
    return c;
}

// ---------------------------------------------------------------------------
// Miller evaluation

CollisionError::CollisionError(mpz_class chain_value, Point at)
    : Error(Errc::SupportCollision,
            "line of chain value " + chain_value.get_str() + " vanishes at " + at.str()),
      chain_value_(std::move(chain_value)),
      at_(std::move(at)) {}

MillerFactored miller_factored(const CurvePtr& curve, const Chain& chain, const Point& p) {
    chain.validate();
    if (!curve->contains(p)) fail(Errc::NotOnCurve, "Miller base point not on the curve");

    std::vector<LineProduct> funcs;
    std::vector<Point> pts;
    funcs.reserve(chain.steps().size());
    pts.reserve(chain.steps().size());

    for (std::size_t i = 0; i < chain.steps().size(); ++i) {
        const ChainStep& s = chain.steps()[i];
        switch (s.kind) {
        case ChainStep::Kind::Init:
            funcs.emplace_back(curve);
            pts.push_back(p);
            break;
        case ChainStep::Kind::Add: {
            const AddResult res = curve->add(pts[s.j], pts[s.k]);
            LineProduct f = funcs[s.j];
            if (s.j == s.k)
                f.pow_in_place(2);
            else
                f.mul(funcs[s.k]);
            f.mul_line(res.ell);
            f.mul_line(res.vee, -1);
            funcs.push_back(std::move(f));
            pts.push_back(res.sum);
            break;
        }
        case ChainStep::Kind::Neg: {
            LineProduct f = funcs[s.j];
            f.pow_in_place(-1);
            if (!pts[s.j].is_infinity()) f.mul_line(Line::vertical(pts[s.j].x()), -1);
            funcs.push_back(std::move(f));
            pts.push_back(curve->neg(pts[s.j]));
            break;
        }
        }
    }

    MillerFactored out;
    for (std::size_t t : chain.targets()) {
        out.functions.push_back(funcs[t]);
        out.points.push_back(pts[t]);
    }
    return out;
}

namespace {

// Partial values of one chain entry: numerator and denominator of f,
// each evaluated at the positive and negative parts of the divisor.
struct Acc {
    FieldElement np, nm, dp, dm;
};

} // namespace

std::vector<FieldElement> miller_evaluated(const CurvePtr& curve, const Chain& chain,
                                           const Point& p,
                                           const std::vector<EvalTerm>& divisor) {
    return miller_evaluated(curve, chain, p, divisor, MillerOptions{});
}

std::vector<FieldElement> miller_evaluated(const CurvePtr& curve, const Chain& chain,
                                           const Point& p,
                                           const std::vector<EvalTerm>& divisor,
                                           const MillerOptions& options) {
    chain.validate();
    if (!curve->contains(p)) fail(Errc::NotOnCurve, "Miller base point not on the curve");
    for (const EvalTerm& term : divisor) {
        if (term.at.is_infinity())
            fail(Errc::InvalidParameters, "evaluation terms must be affine");
        if (!curve->contains(term.at))
            fail(Errc::NotOnCurve, "evaluation term not on the curve");
    }

    const FieldElement one = curve->field()->one();
    std::vector<Acc> accs;
    std::vector<Point> pts;
    accs.reserve(chain.steps().size());
    pts.reserve(chain.steps().size());

    // Multiplies the line values over the divisor into the chosen pair of
    // slots; vanishing values surface the responsible chain value.
    auto apply_line = [&](Acc& a, const Line& line, bool numerator,
                          auto&& blame) {
        if (line.kind() == Line::Kind::One) return;
        for (const EvalTerm& term : divisor) {
            if (term.mult == 0) continue;
            const FieldElement v = line.eval(term.at);
            if (v.is_zero()) throw CollisionError(blame(term.at), term.at);
            FieldElement& slot = term.mult > 0 ? (numerator ? a.np : a.dp)
                                               : (numerator ? a.nm : a.dm);
            slot *= pow(v, abs(term.mult));
        }
    };

    for (std::size_t i = 0; i < chain.steps().size(); ++i) {
        const ChainStep& s = chain.steps()[i];
        switch (s.kind) {
        case ChainStep::Kind::Init:
            accs.push_back({one, one, one, one});
            pts.push_back(p);
            break;
        case ChainStep::Kind::Add: {
            const AddResult res = curve->add(pts[s.j], pts[s.k]);
            const mpz_class& value = chain.values()[i];
            Acc a = accs[s.j];
            if (s.j == s.k) {
                a.np *= a.np;
                a.nm *= a.nm;
                a.dp *= a.dp;
                a.dm *= a.dm;
            } else {
                const Acc& b = accs[s.k];
                a.np *= b.np;
                a.nm *= b.nm;
                a.dp *= b.dp;
                a.dm *= b.dm;
            }
            // A vanishing chord is blamed on whichever endpoint it hits.
            apply_line(a, res.ell, true, [&](const Point& at) -> mpz_class {
                if (at == pts[s.j]) return chain.values()[s.j];
                if (at == pts[s.k]) return chain.values()[s.k];
                return value;
            });
            if (!options.omit_verticals)
                apply_line(a, res.vee, false, [&](const Point&) { return value; });
            accs.push_back(std::move(a));
            pts.push_back(res.sum);
            break;
        }
        case ChainStep::Kind::Neg: {
            if (options.omit_verticals)
                fail(Errc::InvalidParameters,
                     "denominator elimination needs a negation-free chain");
            const Acc& b = accs[s.j];
            Acc a{b.dp, b.dm, b.np, b.nm};
            if (!pts[s.j].is_infinity()) {
                const Line v = Line::vertical(pts[s.j].x());
                apply_line(a, v, false, [&](const Point&) { return chain.values()[s.j]; });
            }
            accs.push_back(std::move(a));
            pts.push_back(curve->neg(pts[s.j]));
            break;
        }
        }
    }

    std::vector<FieldElement> out;
    out.reserve(chain.targets().size());
    for (std::size_t t : chain.targets()) {
        const Acc& a = accs[t];
        out.push_back((a.np * a.dm) / (a.nm * a.dp));
    }
    return out;
}

FieldElement miller_value(const CurvePtr& curve, const mpz_class& n, const Point& p,
                          const std::vector<EvalTerm>& divisor) {
    return miller_evaluated(curve, Chain::single(n), p, divisor)[0];
}

FieldElement miller_avoiding(const CurvePtr& curve, const mpz_class& n, const Point& p,
                             const std::vector<EvalTerm>& divisor, int max_retries) {
    std::vector<mpz_class> forbidden;
    for (int attempt = 0; attempt <= max_retries; ++attempt) {
        const Chain chain = Chain::avoiding(n, forbidden);
        try {
            return miller_evaluated(curve, chain, p, divisor)[0];
        } catch (const CollisionError& e) {
            forbidden.push_back(e.chain_value());
        }
    }
    fail(Errc::UnreachableTarget, "collision avoidance exceeded the retry budget");
}

FieldElement miller_with_avoidance(const CurvePtr& curve, const mpz_class& n, const Point& p,
                                   const std::vector<EvalTerm>& divisor,
                                   AvoidanceStrategy strategy, Rng& rng, int max_retries) {
    if (strategy == AvoidanceStrategy::AvoidChain)
        return miller_avoiding(curve, n, p, divisor, max_retries);

    if (strategy == AvoidanceStrategy::ShiftDivisor) {
        mpz_class degree = 0;
        for (const EvalTerm& term : divisor) degree += term.mult;
        if (degree != 0)
            fail(Errc::InvalidParameters, "divisor shift needs a degree-zero divisor");
        std::vector<EvalTerm> terms = divisor;
        for (int attempt = 0; attempt <= max_retries; ++attempt) {
            try {
                return miller_value(curve, n, p, terms);
            } catch (const CollisionError&) {
            }
            // A fresh translate of the original divisor; all terms must
            // stay affine for evaluation.
            for (;;) {
                const Point s = random_point(curve, rng);
                if (s.is_infinity()) continue;
                bool affine = true;
                terms = divisor;
                for (EvalTerm& term : terms) {
                    term.at = curve->add_points(term.at, s);
                    if (term.at.is_infinity()) { affine = false; break; }
                }
                if (affine) break;
            }
        }
        fail(Errc::RandomizationExhausted, "divisor shifts kept hitting the support");
    }

    // ShiftByNR: D = [Q]; replace Q by Q + nR. Values of f_{n,Q+nR} and
    // f_{n,Q} agree up to the factors the caller's reduction removes.
    if (divisor.size() != 1 || divisor[0].mult != 1)
        fail(Errc::InvalidParameters, "point shift needs a single simple term");
    std::vector<EvalTerm> terms = divisor;
    for (int attempt = 0; attempt <= max_retries; ++attempt) {
        try {
            return miller_value(curve, n, p, terms);
        } catch (const CollisionError&) {
        }
        for (;;) {
            const Point red = curve->mul(n, random_point(curve, rng));
            const Point shifted = curve->add_points(divisor[0].at, red);
            if (shifted.is_infinity()) continue;
            terms[0].at = shifted;
            break;
        }
    }
    fail(Errc::RandomizationExhausted, "point shifts kept hitting the support");
}

} // namespace pairkit
