// pairkit: exact-arithmetic bilinear pairings on elliptic curves
// Copyright 2026 The pairkit Authors.
// SPDX-License-Identifier: Apache-2.0

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pairkit/curve.hpp"
#include "pairkit/errors.hpp"
#include "pairkit/field.hpp"
#include "pairkit/function.hpp"
#include "pairkit/integer.hpp"
#include "pairkit/lattice.hpp"
#include "pairkit/pairing.hpp"
#include "pairkit/rng.hpp"
#include "pairkit/serialize.hpp"

namespace {

using namespace pairkit;
using nlohmann::json;

json int_json(const mpz_class& x) {
    if (x.fits_slong_p()) return json(static_cast<std::int64_t>(x.get_si()));
    return json(x.get_str());
}

json list_json(const std::vector<mpz_class>& xs) {
    json arr = json::array();
    for (const auto& x : xs) arr.push_back(int_json(x));
    return arr;
}

json matrix_json(const IntMatrix& m) {
    json arr = json::array();
    for (const auto& row : m) arr.push_back(list_json(row));
    return arr;
}

json element_json(const FieldElement& x) { return json::parse(element_to_json(x)); }

json point_json(const Point& p) { return json::parse(point_to_json(p)); }

// Ordered key/value output: one "key: value" line per row, or a single
// JSON object under --json. Equal inputs produce identical bytes.
struct Report {
    std::vector<std::pair<std::string, json>> rows;

    void add(std::string key, json value) { rows.emplace_back(std::move(key), std::move(value)); }

    void print(bool as_json) const {
        if (as_json) {
            json obj = json::object();
            for (const auto& [key, value] : rows) obj[key] = value;
            std::printf("%s\n", obj.dump().c_str());
            return;
        }
        for (const auto& [key, value] : rows) {
            const std::string text =
                value.is_string() ? value.get<std::string>() : value.dump();
            std::printf("%s: %s\n", key.c_str(), text.c_str());
        }
    }
};

std::string load_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(Errc::InvalidParameters, "cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(Errc::InvalidParameters, "cannot write file: " + path);
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
}

mpz_class parse_int(const std::string& text, const std::string& what) {
    try {
        return mpz_class(text);
    } catch (const std::exception&) {
        fail(Errc::InvalidParameters, what + " is not a decimal integer: " + text);
    }
}

// Coefficient list, constant term first: "1,2,-2,-2" or "[1,2,-2,-2]".
std::vector<mpz_class> parse_coeffs(const std::string& text) {
    if (!text.empty() && text.front() == '[') {
        try {
            const json j = json::parse(text);
            std::vector<mpz_class> out;
            for (const auto& item : j)
                out.push_back(item.is_string() ? mpz_class(item.get<std::string>())
                                               : mpz_class(item.get<std::int64_t>()));
            return out;
        } catch (const Error&) {
            throw;
        } catch (const std::exception& e) {
            fail(Errc::InvalidParameters, std::string("bad coefficient list: ") + e.what());
        }
    }
    std::vector<mpz_class> out;
    std::istringstream in(text);
    std::string part;
    while (std::getline(in, part, ','))
        out.push_back(parse_int(part, "coefficient"));
    if (out.empty()) fail(Errc::InvalidParameters, "empty coefficient list");
    return out;
}

unsigned euler_phi(unsigned k) {
    unsigned count = 0;
    for (unsigned i = 1; i <= k; ++i)
        if (std::gcd(i, k) == 1) ++count;
    return count;
}

ContextPtr load_context(const std::string& path) {
    return context_from_json(load_text(path));
}

// Point argument: "infinity", "g1", "g2", inline point JSON, or a file.
Point parse_point_arg(const ContextPtr& ctx, const std::string& spec) {
    if (spec == "infinity") return Point::infinity();
    if (spec == "g1") return ctx->g1();
    if (spec == "g2") return ctx->g2();
    if (!spec.empty() && (spec.front() == '{' || spec.front() == '"'))
        return point_from_json(ctx->ext(), spec);
    return point_from_json(ctx->ext(), load_text(spec));
}

std::vector<mpz_class> optimal_vector(const ContextPtr& ctx) {
    return shortest_vector(build_lattice(ctx->r(), ctx->q(), euler_phi(ctx->k())).basis);
}

void require_structured(const ContextPtr& ctx, const std::string& what) {
    if (!ctx->structured())
        fail(Errc::InvalidParameters, what + " needs a structured context");
}

mpz_class k_q_pow(const ContextPtr& ctx) {
    mpz_class qk1;
    mpz_pow_ui(qk1.get_mpz_t(), ctx->q().get_mpz_t(), ctx->k() - 1);
    mpz_class out = ctx->k() * qk1;
    return out;
}

// (T^k - 1)/r, the classical ate exponent on the reduced Tate side.
mpz_class ate_exponent(const ContextPtr& ctx) {
    mpz_class tk;
    mpz_pow_ui(tk.get_mpz_t(), ctx->T().get_mpz_t(), ctx->k());
    mpz_class num = tk - 1;
    return exact_div(num, ctx->r());
}

// ---- field-info ----

int cmd_field_info(const std::string& file, bool as_json) {
    const FieldPtr field = field_from_json(load_text(file));
    Report rep;
    rep.add("p", int_json(field->p()));
    rep.add("k", field->k());
    rep.add("modulus", list_json(field->modulus()));
    rep.add("order", int_json(field->order()));
    rep.add("unit_order", int_json(field->unit_order()));
    rep.print(as_json);
    return 0;
}

// ---- curve-info ----

int cmd_curve_info(const std::string& file, bool as_json) {
    const CurvePtr curve = curve_from_json(load_text(file));
    Report rep;
    rep.add("field_p", int_json(curve->field()->p()));
    rep.add("field_k", curve->field()->k());
    json a = json::array();
    for (const FieldElement& ai :
         {curve->a1(), curve->a2(), curve->a3(), curve->a4(), curve->a6()})
        a.push_back(element_json(ai));
    rep.add("a", a);
    rep.add("discriminant", element_json(curve->discriminant()));
    if (curve->order())
        rep.add("order", int_json(*curve->order()));
    else if (curve->field()->order() <= (mpz_class(1) << 20))
        rep.add("order", int_json(curve->count_points()));
    else
        rep.add("order", "unknown");
    rep.print(as_json);
    return 0;
}

// ---- context-new ----

int cmd_context_new(const std::string& curve_file, const std::string& r_text, unsigned k,
                    bool torsion, std::uint64_t seed, const std::string& out,
                    bool as_json) {
    CurvePtr curve = curve_from_json(load_text(curve_file));
    const mpz_class r = parse_int(r_text, "r");
    if (torsion == (k != 0))
        fail(Errc::InvalidParameters, "give exactly one of --k or --torsion");

    ContextPtr ctx;
    std::string text;
    if (torsion) {
        ctx = PairingContext::make_torsion(curve, r);
        text = torsion_context_to_json(curve, r);
    } else {
        // a missing order annotation is filled by counting when feasible
        if (!curve->order() && curve->field()->order() <= (mpz_class(1) << 20))
            curve = curve->with_order(curve->count_points());
        Rng rng(seed);
        ctx = PairingContext::make(curve, r, k, rng);
        text = context_to_json(curve, r, k, seed);
    }

    Report rep;
    rep.add("structured", ctx->structured());
    rep.add("q", int_json(ctx->q()));
    rep.add("k", ctx->k());
    rep.add("r", int_json(ctx->r()));
    rep.add("trace", int_json(ctx->trace_of_frobenius()));
    rep.add("order_base", int_json(ctx->order_base()));
    rep.add("order_ext", int_json(ctx->order_ext()));
    if (ctx->twist_degree())
        rep.add("twist_degree", *ctx->twist_degree());
    rep.add("g1", point_json(ctx->g1()));
    rep.add("g2", point_json(ctx->g2()));
    if (out.empty()) {
        rep.add("context", json::parse(text));
    } else {
        write_text(out, text);
        rep.add("out", out);
    }
    rep.print(as_json);
    return 0;
}

// ---- pair ----

struct PairArgs {
    std::string context_file, request_file, pairing;
    std::string p_spec, q_spec, t_spec, y_spec;
    std::string t0, t1, l0, l1;
    int definition = 2;
    unsigned i = 1;
    bool twisted = false;
    bool reduced = false;
    std::uint64_t seed = 0;
    bool as_json = false;
};

// Fill arguments from a request file:
//   {context: <path>, pairing: <name>, definition: N, i: N, twisted: b,
//    reduced: b, P: <point>, Q: <point>, t: [...], y: N, t0..l1: N}
void apply_request(PairArgs& args) {
    json j;
    try {
        j = json::parse(load_text(args.request_file));
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        fail(Errc::InvalidParameters, std::string("bad request file: ") + e.what());
    }
    if (!j.is_object()) fail(Errc::InvalidParameters, "request must be a JSON object");
    try {
        args.context_file = j.at("context").get<std::string>();
        args.pairing = j.at("pairing").get<std::string>();
        if (j.contains("definition")) args.definition = j.at("definition").get<int>();
        if (j.contains("i")) args.i = j.at("i").get<unsigned>();
        if (j.contains("twisted")) args.twisted = j.at("twisted").get<bool>();
        if (j.contains("reduced")) args.reduced = j.at("reduced").get<bool>();
        if (j.contains("P")) args.p_spec = j.at("P").dump();
        if (j.contains("Q")) args.q_spec = j.at("Q").dump();
        if (j.contains("t")) args.t_spec = j.at("t").dump();
        if (j.contains("y")) args.y_spec = j.at("y").dump();
        if (j.contains("t0")) args.t0 = j.at("t0").dump();
        if (j.contains("t1")) args.t1 = j.at("t1").dump();
        if (j.contains("l0")) args.l0 = j.at("l0").dump();
        if (j.contains("l1")) args.l1 = j.at("l1").dump();
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        fail(Errc::InvalidParameters, std::string("bad request field: ") + e.what());
    }
}

int cmd_pair(PairArgs args) {
    if (!args.request_file.empty()) apply_request(args);
    if (args.context_file.empty())
        fail(Errc::InvalidParameters, "pair needs --context (or a request file naming one)");
    if (args.pairing.empty()) fail(Errc::InvalidParameters, "pair needs --pairing");

    const ContextPtr ctx = load_context(args.context_file);
    Rng rng(args.seed);
    const Point P = args.p_spec.empty() ? ctx->g1() : parse_point_arg(ctx, args.p_spec);
    const Point Q = args.q_spec.empty() ? ctx->g2() : parse_point_arg(ctx, args.q_spec);

    Report rep;
    rep.add("pairing", args.pairing);
    PairingValue value;

    if (args.pairing == "weil") {
        if (args.definition < 1 || args.definition > 3)
            fail(Errc::InvalidParameters, "weil definitions are 1, 2, 3");
        rep.add("definition", args.definition);
        value = weil(ctx, P, Q, args.definition, rng);
    } else if (args.pairing == "tate") {
        if (args.definition < 1 || args.definition > 2)
            fail(Errc::InvalidParameters, "tate definitions are 1, 2");
        rep.add("definition", args.definition);
        value = tate(ctx, P, Q, args.definition, args.reduced, rng);
    } else if (args.pairing == "ate" || args.pairing == "twisted_ate" ||
               args.pairing == "ate_i") {
        const bool twisted = args.twisted || args.pairing == "twisted_ate";
        rep.add("i", args.i);
        rep.add("twisted", twisted);
        value = ate_family(ctx, P, Q, args.i, twisted, args.reduced);
    } else if (args.pairing == "r_ate") {
        if (args.t0.empty() || args.t1.empty() || args.l0.empty() || args.l1.empty())
            fail(Errc::InvalidParameters, "r_ate needs --t0 --t1 --l0 --l1");
        const PoweredPairing out =
            r_ate(ctx, P, Q, parse_int(args.t0, "t0"), parse_int(args.t1, "t1"),
                  parse_int(args.l0, "l0"), parse_int(args.l1, "l1"), args.reduced);
        rep.add("tate_exponent", int_json(out.tate_exponent));
        value = out.pairing;
    } else if (args.pairing == "hess" || args.pairing == "vercauteren") {
        const std::vector<mpz_class> t =
            args.t_spec.empty() ? optimal_vector(ctx) : parse_coeffs(args.t_spec);
        mpz_class y = args.y_spec.empty() ? ctx->q() : parse_int(args.y_spec, "y");
        HessMode mode = HessMode::Generic;
        if (args.pairing == "vercauteren") {
            if (!args.y_spec.empty() && y != ctx->q())
                fail(Errc::InvalidParameters, "vercauteren mode fixes y = q");
            y = ctx->q();
            mode = HessMode::Vercauteren;
        } else if (args.twisted) {
            mode = HessMode::Twisted;
        }
        rep.add("t", list_json(t));
        rep.add("y", int_json(y));
        const PoweredPairing out = hess(ctx, P, Q, t, y, mode, args.reduced);
        rep.add("tate_exponent", int_json(out.tate_exponent));
        value = out.pairing;
    } else {
        fail(Errc::InvalidParameters, "unknown pairing: " + args.pairing);
    }

    rep.add("value", element_json(value.value));
    rep.add("reduced", value.reduced);
    rep.add("loop_bits", value.loop_bits);
    rep.add("miller_calls", value.miller_calls);
    rep.print(args.as_json);
    return 0;
}

// ---- verify suites ----

struct SuiteRun {
    Report& rep;
    bool all_pass = true;

    void property(const std::string& name, bool pass) {
        all_pass = all_pass && pass;
        rep.add(name, pass ? "pass" : "fail");
    }
    void skip(const std::string& name, const std::string& why) {
        rep.add(name, "skip (" + why + ")");
    }
};

Point random_torsion(const ContextPtr& ctx, Rng& rng) {
    if (!ctx->torsion_points().empty()) {
        const auto& pts = ctx->torsion_points();
        const mpz_class idx = rng.below(mpz_class(pts.size()));
        return pts[idx.get_ui()];
    }
    const mpz_class a = rng.below(ctx->r());
    const mpz_class b = rng.below(ctx->r());
    return ctx->ext()->add_points(ctx->ext()->mul(a, ctx->g1()),
                                  ctx->ext()->mul(b, ctx->g2()));
}

mpz_class nonzero_scalar(const ContextPtr& ctx, Rng& rng) {
    mpz_class bound = ctx->r() - 1;
    mpz_class out = 1 + rng.below(bound);
    return out;
}

void suite_weil_equivalence(const ContextPtr& ctx, Rng& rng, int trials, SuiteRun& run) {
    bool agree23 = true, alternation = true, rth = true;
    for (int n = 0; n < trials; ++n) {
        const Point P = random_torsion(ctx, rng);
        const Point Q = random_torsion(ctx, rng);
        const FieldElement w2 = weil(ctx, P, Q, 2, rng).value;
        const FieldElement w3 = weil(ctx, P, Q, 3, rng).value;
        agree23 = agree23 && w2 == w3;
        alternation = alternation && (w2 * weil(ctx, Q, P, 2, rng).value).is_one();
        rth = rth && pow(w2, ctx->r()).is_one();
    }
    run.property("def-2-3-agree", agree23);
    run.property("alternation", alternation);
    run.property("rth-root", rth);

    bool identity = true;
    for (int n = 0; n < 3; ++n) {
        const Point P = random_torsion(ctx, rng);
        identity = identity && weil(ctx, P, P, 2, rng).value.is_one();
        identity = identity && weil(ctx, Point::infinity(), P, 2, rng).value.is_one();
        identity = identity && weil(ctx, P, Point::infinity(), 2, rng).value.is_one();
    }
    run.property("identity", identity);

    try {
        bool agree1 = true;
        const int few = trials < 4 ? trials : 4;
        for (int n = 0; n < few; ++n) {
            const Point P = random_torsion(ctx, rng);
            const Point Q = random_torsion(ctx, rng);
            agree1 = agree1 && weil(ctx, P, Q, 1, rng).value == weil(ctx, P, Q, 2, rng).value;
        }
        run.property("def-1-2-agree", agree1);
    } catch (const Error& e) {
        if (e.code() != Errc::Def1Infeasible) throw;
        run.skip("def-1-2-agree", "definition 1 infeasible on this context");
    }
}

void suite_reciprocity(const ContextPtr& ctx, Rng& rng, int trials, SuiteRun& run) {
    const CurvePtr& curve = ctx->ext();
    const auto random_product = [&](const std::vector<Point>& pool) {
        LineProduct f(curve);
        const unsigned chords = 1 + rng.below(mpz_class(3)).get_ui();
        for (unsigned n = 0; n < chords; ++n) {
            const Point& a = pool[rng.below(mpz_class(pool.size())).get_ui()];
            const Point& b = pool[rng.below(mpz_class(pool.size())).get_ui()];
            const auto sum = curve->add(a, b);
            const mpz_class e = 1 + rng.below(mpz_class(2));
            f.mul_line(sum.ell, e);
            f.mul_line(sum.vee, -e);
        }
        return f;
    };

    bool disjointish = true;
    for (int n = 0; n < trials; ++n) {
        std::vector<Point> pool;
        for (int m = 0; m < 5; ++m) pool.push_back(random_point(curve, rng));
        const LineProduct f = random_product(pool);
        const LineProduct g = random_product(pool);
        disjointish = disjointish && weil_reciprocity_product(f, g, rng).is_one();
    }
    run.property("product-is-one", disjointish);

    // a two-point pool forces overlapping supports and tame-symbol use
    bool shared = true;
    for (int n = 0; n < trials; ++n) {
        std::vector<Point> pool{random_point(curve, rng), random_point(curve, rng)};
        const LineProduct f = random_product(pool);
        const LineProduct g = random_product(pool);
        shared = shared && weil_reciprocity_product(f, g, rng).is_one();
    }
    run.property("shared-support", shared);
}

void suite_ate_relation(const ContextPtr& ctx, Rng& rng, int trials, SuiteRun& run) {
    require_structured(ctx, "the ate-relation suite");
    const Point P = ctx->g1();
    const Point Q = ctx->g2();
    const FieldElement rtQP = tate(ctx, Q, P, 2, true, rng).value;
    const mpz_class kq = k_q_pow(ctx);

    try {
        const PairingValue ate = ate_family(ctx, P, Q, 1, false, true);
        run.property("ate-tate-relation",
                     pow(ate.value, kq) == pow(rtQP, ate_exponent(ctx)));

        bool bilinear = true;
        for (int n = 0; n < trials; ++n) {
            const mpz_class a = nonzero_scalar(ctx, rng);
            const mpz_class b = nonzero_scalar(ctx, rng);
            const mpz_class ab = a * b;
            const PairingValue lhs = ate_family(ctx, ctx->ext()->mul(a, P),
                                                ctx->ext()->mul(b, Q), 1, false, true);
            bilinear = bilinear && lhs.value == pow(ate.value, ab);
        }
        run.property("ate-bilinear", bilinear);
    } catch (const Error& e) {
        if (e.code() != Errc::DegeneratePairing) throw;
        run.skip("ate-tate-relation", "degenerate ate instance");
        run.skip("ate-bilinear", "degenerate ate instance");
    }

    bool powers = true;
    bool any_power = false;
    for (unsigned i = 2; i < ctx->k() && i <= 5; ++i) {
        try {
            const PairingValue atei = ate_family(ctx, P, Q, i, false, true);
            mpz_class ti;
            mpz_pow_ui(ti.get_mpz_t(), ctx->T().get_mpz_t(), i);
            const mpz_class lambda = mod_floor(ti, ctx->r());
            powers = powers && atei.value == pow(rtQP, f_tate_exponent(ctx, lambda));
            any_power = true;
        } catch (const Error& e) {
            if (e.code() != Errc::DegeneratePairing) throw;
        }
    }
    if (any_power)
        run.property("ate-i-tate-consistent", powers);
    else
        run.skip("ate-i-tate-consistent", "no non-degenerate i in range");

    if (!ctx->twist_degree()) {
        run.skip("twisted-ate-bilinear", "no twist on this curve");
        return;
    }
    try {
        const PairingValue tw = ate_family(ctx, P, Q, 1, true, true);
        bool bilinear = true;
        for (int n = 0; n < trials; ++n) {
            const mpz_class a = nonzero_scalar(ctx, rng);
            const mpz_class b = nonzero_scalar(ctx, rng);
            const mpz_class ab = a * b;
            const PairingValue lhs = ate_family(ctx, ctx->ext()->mul(a, P),
                                                ctx->ext()->mul(b, Q), 1, true, true);
            bilinear = bilinear && lhs.value == pow(tw.value, ab);
        }
        run.property("twisted-ate-bilinear", bilinear);
        if (*ctx->twist_degree() == ctx->k()) {
            const FieldElement rtPQ = tate(ctx, P, Q, 2, true, rng).value;
            run.property("twisted-ate-relation",
                         pow(tw.value, kq) == pow(rtPQ, ate_exponent(ctx)));
        }
    } catch (const Error& e) {
        if (e.code() != Errc::DegeneratePairing) throw;
        run.skip("twisted-ate-bilinear", "degenerate twisted instance");
    }
}

void suite_hess_relation(const ContextPtr& ctx, Rng& rng, int trials, SuiteRun& run) {
    require_structured(ctx, "the hess-relation suite");
    const Point P = ctx->g1();
    const Point Q = ctx->g2();
    const FieldElement rtQP = tate(ctx, Q, P, 2, true, rng).value;
    const mpz_class kq = k_q_pow(ctx);

    const std::vector<mpz_class> constant{ctx->r()};
    run.property("constant-exponent",
                 nondegeneracy_exponent(constant, ctx->q(), ctx->q(), ctx->k(), ctx->r()) == kq);
    const PoweredPairing hc = hess(ctx, P, Q, constant, ctx->q(), HessMode::Generic, true);
    run.property("constant-is-tate", hc.pairing.value == rtQP);
    run.property("constant-relation",
                 pow(hc.pairing.value, kq) == pow(rtQP, hc.tate_exponent));

    // t = Y - T at y = T is the ate instance: t(y) = 0 pins N exactly
    const std::vector<mpz_class> linear{-ctx->T(), 1};
    const mpz_class n_linear =
        nondegeneracy_exponent(linear, ctx->T(), ctx->q(), ctx->k(), ctx->r());
    mpz_class neg_ate = -ate_exponent(ctx);
    run.property("linear-exponent", n_linear == neg_ate);
    if (euler_phi(ctx->k()) >= 2) {
        const PoweredPairing hl = hess(ctx, P, Q, linear, ctx->T(), HessMode::Generic, true);
        run.property("linear-relation", pow(hl.pairing.value, kq) == pow(rtQP, n_linear));
        const PoweredPairing hlv =
            hess(ctx, P, Q, linear, ctx->q(), HessMode::Vercauteren, true);
        run.property("vercauteren-agrees", hlv.pairing.value == hl.pairing.value);
    } else {
        run.skip("linear-relation", "degree 1 needs phi(k) >= 2");
        run.skip("vercauteren-agrees", "degree 1 needs phi(k) >= 2");
    }

    // exact discrete-log law: value = rtate(Q,P)^E with
    // E = t(q)/r - sum_i t_i Mt(q^i) mod r
    const std::vector<mpz_class> t = optimal_vector(ctx);
    const auto law_exponent = [&](const std::vector<mpz_class>& poly) {
        mpz_class ty = 0;
        for (std::size_t i = poly.size(); i-- > 0;) ty = ty * ctx->q() + poly[i];
        mpz_class e = mod_floor(exact_div(ty, ctx->r()), ctx->r());
        for (std::size_t i = 0; i < poly.size(); ++i) {
            mpz_class yi;
            mpz_pow_ui(yi.get_mpz_t(), ctx->q().get_mpz_t(), static_cast<unsigned long>(i));
            e = mod_floor(e - poly[i] * f_tate_exponent(ctx, yi), ctx->r());
        }
        return e;
    };
    const PoweredPairing ho = hess(ctx, P, Q, t, ctx->q(), HessMode::Vercauteren, true);
    run.property("exponent-law", ho.pairing.value == pow(rtQP, law_exponent(t)));

    bool bilinear = true;
    for (int n = 0; n < trials; ++n) {
        const mpz_class a = nonzero_scalar(ctx, rng);
        const mpz_class b = nonzero_scalar(ctx, rng);
        const mpz_class ab = a * b;
        const PoweredPairing lhs = hess(ctx, ctx->ext()->mul(a, P), ctx->ext()->mul(b, Q),
                                        t, ctx->q(), HessMode::Vercauteren, true);
        bilinear = bilinear && lhs.pairing.value == pow(ho.pairing.value, ab);
    }
    run.property("bilinear", bilinear);
}

void suite_bkls(const ContextPtr& ctx, Rng& rng, int trials, SuiteRun& run) {
    require_structured(ctx, "the bkls suite");
    const Distortion dist = make_distortion(ctx->base(), ctx->ext()->field());

    bool matches = true, reduced_flag = true;
    for (int n = 0; n < trials; ++n) {
        const mpz_class a = nonzero_scalar(ctx, rng);
        const Point P = ctx->ext()->mul(a, ctx->g1());
        const Point Q = dist.apply(P);
        const PairingValue bk = tate_bkls(ctx, P, Q);
        matches = matches && bk.value == tate(ctx, P, Q, 2, true, rng).value;
        reduced_flag = reduced_flag && bk.reduced;
    }
    run.property("matches-full-computation", matches);
    run.property("reduced-flag", reduced_flag);

    const Point P = ctx->g1();
    run.property("nondegenerate", !tate_bkls(ctx, P, dist.apply(P)).value.is_one());
}

void suite_trace(const ContextPtr& ctx, Rng& rng, int trials, SuiteRun& run) {
    require_structured(ctx, "the trace suite");
    run.property("g2-kernel", ctx->trace_map(ctx->g2()).is_infinity());
    run.property("g1-scaling",
                 ctx->trace_map(ctx->g1()) ==
                     ctx->ext()->mul(mpz_class(ctx->k()), ctx->g1()));

    bool lands = true, invariant = true, additive = true;
    for (int n = 0; n < trials; ++n) {
        const Point R = random_torsion(ctx, rng);
        const Point S = random_torsion(ctx, rng);
        const Point tr = ctx->trace_map(R);
        lands = lands && (tr.is_infinity() || ctx->in_g1(tr));
        invariant = invariant && ctx->trace_map(ctx->frobenius_map(R, 1)) == tr;
        additive = additive &&
                   ctx->trace_map(ctx->ext()->add_points(R, S)) ==
                       ctx->ext()->add_points(tr, ctx->trace_map(S));
    }
    run.property("lands-in-g1", lands);
    run.property("frobenius-invariant", invariant);
    run.property("additive", additive);
}

int cmd_verify(const std::string& suite, const std::string& context_file, int trials,
               std::uint64_t seed, bool as_json) {
    const ContextPtr ctx = load_context(context_file);
    Rng rng(seed);
    Report rep;
    rep.add("suite", suite);
    rep.add("trials", trials);
    SuiteRun run{rep};

    if (suite == "weil-equivalence")
        suite_weil_equivalence(ctx, rng, trials, run);
    else if (suite == "reciprocity")
        suite_reciprocity(ctx, rng, trials, run);
    else if (suite == "ate-relation")
        suite_ate_relation(ctx, rng, trials, run);
    else if (suite == "hess-relation")
        suite_hess_relation(ctx, rng, trials, run);
    else if (suite == "bkls")
        suite_bkls(ctx, rng, trials, run);
    else if (suite == "trace")
        suite_trace(ctx, rng, trials, run);
    else
        fail(Errc::InvalidParameters, "unknown suite: " + suite);

    rep.add("result", run.all_pass ? "pass" : "fail");
    rep.print(as_json);
    return run.all_pass ? 0 : 1;
}

// ---- lattice ----

int cmd_lattice(const std::string& context_file, const std::string& r_text,
                const std::string& y_text, unsigned dim, unsigned k, bool as_json) {
    mpz_class r, y;
    if (!context_file.empty()) {
        const ContextPtr ctx = load_context(context_file);
        require_structured(ctx, "the lattice command");
        r = ctx->r();
        y = ctx->q();
        dim = euler_phi(ctx->k());
    } else {
        if (r_text.empty() || y_text.empty())
            fail(Errc::InvalidParameters, "lattice needs --context, or --r and --y");
        r = parse_int(r_text, "r");
        y = parse_int(y_text, "y");
        if (dim == 0 && k == 0)
            fail(Errc::InvalidParameters, "lattice needs --dim or --k");
        if (dim == 0) dim = euler_phi(k);
    }

    const RootLattice lattice = build_lattice(r, y, dim);
    const IntMatrix reduced = lll_reduce(lattice.basis);
    const std::vector<mpz_class> t = shortest_vector(lattice.basis);
    mpz_class max_abs = 0;
    for (const auto& c : t) {
        mpz_class a = abs(c);
        if (a > max_abs) max_abs = a;
    }

    Report rep;
    rep.add("r", int_json(r));
    rep.add("y", int_json(y));
    rep.add("dim", dim);
    rep.add("basis", matrix_json(lattice.basis));
    rep.add("reduced", matrix_json(reduced));
    rep.add("lovasz", lovasz_holds(reduced));
    rep.add("shortest", list_json(t));
    rep.add("max_coefficient_bits", bit_length(max_abs));
    rep.add("r_bits", bit_length(r));
    rep.print(as_json);
    return 0;
}

// ---- family ----

int cmd_family(const std::string& family_file, const std::string& max_x_text,
               std::uint64_t seed, const std::string& out, bool as_json) {
    const CurveFamily family =
        family_file.empty() ? freeman_family() : family_from_json(load_text(family_file));
    const mpz_class max_x = parse_int(max_x_text, "max-x");
    Rng rng(seed);
    const FamilyInstance inst = family_instantiate(family, max_x, rng);
    const ContextPtr& ctx = inst.context;

    const std::vector<mpz_class> t = optimal_vector(ctx);
    mpz_class max_abs = 0;
    for (const auto& c : t) {
        mpz_class a = abs(c);
        if (a > max_abs) max_abs = a;
    }

    Report rep;
    rep.add("x0", int_json(inst.x0));
    rep.add("p", int_json(ctx->q()));
    rep.add("r", int_json(ctx->r()));
    rep.add("k", ctx->k());
    rep.add("trace", int_json(ctx->trace_of_frobenius()));
    rep.add("order_base", int_json(ctx->order_base()));
    rep.add("order_ext", int_json(ctx->order_ext()));
    if (ctx->twist_degree())
        rep.add("twist_degree", *ctx->twist_degree());
    rep.add("t", list_json(t));
    rep.add("loop_bits", bit_length(max_abs));
    rep.add("r_bits", bit_length(ctx->r()));
    if (!out.empty()) {
        write_text(out, context_to_json(ctx->base(), ctx->r(), ctx->k(), seed));
        rep.add("out", out);
    }
    rep.print(as_json);
    return 0;
}

// ---- bench ----

int cmd_bench(const std::string& context_file, std::uint64_t seed, bool as_json) {
    const ContextPtr ctx = load_context(context_file);
    Rng rng(seed);
    const Point P = ctx->g1();
    const Point Q = ctx->g2();

    Report rep;
    rep.add("r_bits", bit_length(ctx->r()));
    rep.add("tate_bits", tate(ctx, P, Q, 2, true, rng).loop_bits);

    const auto loop_bits_of = [&](const std::function<PairingValue()>& fn,
                                  const std::string& key) {
        try {
            rep.add(key, fn().loop_bits);
        } catch (const Error& e) {
            rep.add(key, std::string("unavailable (") + errc_name(e.code()) + ")");
        }
    };
    loop_bits_of([&] { return ate_family(ctx, P, Q, 1, false, true); }, "ate_bits");
    loop_bits_of([&] { return ate_family(ctx, P, Q, 1, true, true); }, "twisted_ate_bits");
    loop_bits_of(
        [&] {
            const std::vector<mpz_class> t = optimal_vector(ctx);
            return hess(ctx, P, Q, t, ctx->q(), HessMode::Vercauteren, true).pairing;
        },
        "hess_bits");
    rep.print(as_json);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pairkit: exact-arithmetic bilinear pairings on elliptic curves"};
    app.require_subcommand(1);

    std::string field_file;
    bool field_json = false;
    auto* field_info = app.add_subcommand("field-info", "describe a field file");
    field_info->add_option("file", field_file, "field JSON file")->required();
    field_info->add_flag("--json", field_json, "emit one JSON object");

    std::string curve_file;
    bool curve_json = false;
    auto* curve_info = app.add_subcommand("curve-info", "describe a curve file");
    curve_info->add_option("file", curve_file, "curve JSON file")->required();
    curve_info->add_flag("--json", curve_json, "emit one JSON object");

    std::string cn_curve, cn_r, cn_out;
    unsigned cn_k = 0;
    bool cn_torsion = false, cn_json = false;
    std::uint64_t cn_seed = 0;
    auto* context_new = app.add_subcommand("context-new", "build and save a pairing context");
    context_new->add_option("--curve", cn_curve, "curve JSON file")->required();
    context_new->add_option("--r", cn_r, "pairing order r")->required();
    context_new->add_option("--k", cn_k, "embedding degree (structured context)");
    context_new->add_flag("--torsion", cn_torsion, "torsion context over the given curve");
    context_new->add_option("--seed", cn_seed, "generator-search seed");
    context_new->add_option("--out", cn_out, "write the context file here");
    context_new->add_flag("--json", cn_json, "emit one JSON object");

    PairArgs pa;
    auto* pair = app.add_subcommand("pair", "compute one pairing value");
    pair->add_option("--context", pa.context_file, "context JSON file");
    pair->add_option("--request", pa.request_file, "pairing request JSON file");
    pair->add_option("--pairing", pa.pairing,
                     "weil|tate|ate|twisted_ate|ate_i|r_ate|hess|vercauteren");
    pair->add_option("--def", pa.definition, "definition number (weil 1-3, tate 1-2)");
    pair->add_option("--i", pa.i, "ate family power");
    pair->add_flag("--twisted", pa.twisted, "twisted variant");
    pair->add_flag("--reduced", pa.reduced, "apply the final exponentiation");
    pair->add_option("--P", pa.p_spec, "point: infinity|g1|g2|<json>|<file> (default g1)");
    pair->add_option("--Q", pa.q_spec, "point: infinity|g1|g2|<json>|<file> (default g2)");
    pair->add_option("--t", pa.t_spec, "hess polynomial, constant first: 1,2,-2,-2");
    pair->add_option("--y", pa.y_spec, "hess root of unity (default q)");
    pair->add_option("--t0", pa.t0, "r_ate t0");
    pair->add_option("--t1", pa.t1, "r_ate t1");
    pair->add_option("--l0", pa.l0, "r_ate l0");
    pair->add_option("--l1", pa.l1, "r_ate l1");
    pair->add_option("--seed", pa.seed, "randomization seed");
    pair->add_flag("--json", pa.as_json, "emit one JSON object");

    std::string vf_suite, vf_context;
    int vf_trials = 16;
    std::uint64_t vf_seed = 0;
    bool vf_json = false;
    auto* verify = app.add_subcommand("verify", "run an invariant suite");
    verify
        ->add_option("suite", vf_suite,
                     "weil-equivalence|reciprocity|ate-relation|hess-relation|bkls|trace")
        ->required();
    verify->add_option("--context", vf_context, "context JSON file")->required();
    verify->add_option("--trials", vf_trials, "randomized trials per property")
        ->check(CLI::PositiveNumber);
    verify->add_option("--seed", vf_seed, "randomization seed");
    verify->add_flag("--json", vf_json, "emit one JSON object");

    std::string lt_context, lt_r, lt_y;
    unsigned lt_dim = 0, lt_k = 0;
    bool lt_json = false;
    auto* lattice = app.add_subcommand("lattice", "reduce the root lattice of (r, y)");
    lattice->add_option("--context", lt_context, "take r, y = q, dim = phi(k) from a context");
    lattice->add_option("--r", lt_r, "subgroup order r");
    lattice->add_option("--y", lt_y, "k-th root of unity mod r");
    lattice->add_option("--dim", lt_dim, "lattice dimension");
    lattice->add_option("--k", lt_k, "embedding degree (dim = phi(k))");
    lattice->add_flag("--json", lt_json, "emit one JSON object");

    std::string fm_family, fm_max_x = "16", fm_out;
    std::uint64_t fm_seed = 0;
    bool fm_json = false;
    auto* family = app.add_subcommand("family", "instantiate a polynomial curve family");
    family->add_option("--family", fm_family, "family JSON file (default: Freeman k=10)");
    family->add_option("--max-x", fm_max_x, "bound on |x0|");
    family->add_option("--seed", fm_seed, "curve-search seed");
    family->add_option("--out", fm_out, "write the instantiated context here");
    family->add_flag("--json", fm_json, "emit one JSON object");

    std::string bn_context;
    std::uint64_t bn_seed = 0;
    bool bn_json = false;
    auto* bench = app.add_subcommand("bench", "report Miller loop lengths per pairing");
    bench->add_option("--context", bn_context, "context JSON file")->required();
    bench->add_option("--seed", bn_seed, "randomization seed");
    bench->add_flag("--json", bn_json, "emit one JSON object");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (field_info->parsed()) return cmd_field_info(field_file, field_json);
        if (curve_info->parsed()) return cmd_curve_info(curve_file, curve_json);
        if (context_new->parsed())
            return cmd_context_new(cn_curve, cn_r, cn_k, cn_torsion, cn_seed, cn_out, cn_json);
        if (pair->parsed()) return cmd_pair(pa);
        if (verify->parsed())
            return cmd_verify(vf_suite, vf_context, vf_trials, vf_seed, vf_json);
        if (lattice->parsed())
            return cmd_lattice(lt_context, lt_r, lt_y, lt_dim, lt_k, lt_json);
        if (family->parsed()) return cmd_family(fm_family, fm_max_x, fm_seed, fm_out, fm_json);
        if (bench->parsed()) return cmd_bench(bn_context, bn_seed, bn_json);
    } catch (const pairkit::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
