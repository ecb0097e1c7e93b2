// pairkit: exact-arithmetic bilinear pairings on elliptic curves
// Copyright 2026 The pairkit Authors.
// SPDX-License-Identifier: Apache-2.0

#include "pairkit/serialize.hpp"

#include <exception>
#include <utility>

#include <json.hpp>

#include "pairkit/errors.hpp"
#include "pairkit/rng.hpp"

namespace pairkit {

namespace {

using nlohmann::json;

json mpz_out(const mpz_class& x) {
    if (x.fits_slong_p()) return json(static_cast<std::int64_t>(x.get_si()));
    return json(x.get_str());
}

mpz_class mpz_in(const json& j) {
    if (j.is_number_integer()) return mpz_class(std::int64_t(j.get<std::int64_t>()));
    if (j.is_number_unsigned()) return mpz_class(std::to_string(j.get<std::uint64_t>()));
    if (j.is_string()) return mpz_class(j.get<std::string>());
    fail(Errc::InvalidParameters, "expected an integer (number or decimal string)");
}

unsigned unsigned_in(const json& j) {
    mpz_class x = mpz_in(j);
    if (x < 0 || !x.fits_uint_p())
        fail(Errc::InvalidParameters, "integer out of range for an unsigned field");
    return static_cast<unsigned>(x.get_ui());
}

std::vector<mpz_class> mpz_list_in(const json& j) {
    if (!j.is_array()) fail(Errc::InvalidParameters, "expected an array of integers");
    std::vector<mpz_class> out;
    out.reserve(j.size());
    for (const auto& item : j) out.push_back(mpz_in(item));
    return out;
}

json mpz_list_out(const std::vector<mpz_class>& xs) {
    json arr = json::array();
    for (const auto& x : xs) arr.push_back(mpz_out(x));
    return arr;
}

json field_out(const FieldPtr& field) {
    json j;
    j["p"] = mpz_out(field->p());
    j["k"] = field->k();
    j["modulus"] = mpz_list_out(field->modulus());
    return j;
}

FieldPtr field_in(const json& j) {
    if (!j.is_object()) fail(Errc::InvalidParameters, "field descriptor must be an object");
    mpz_class p = mpz_in(j.at("p"));
    unsigned k = unsigned_in(j.at("k"));
    if (j.contains("modulus")) {
        std::vector<mpz_class> modulus = mpz_list_in(j.at("modulus"));
        if (modulus.size() != std::size_t(k) + 1)
            fail(Errc::InvalidParameters, "the modulus must have k + 1 coefficients");
        return Field::make(p, std::move(modulus));
    }
    return Field::make(p, k);
}

json element_out(const FieldElement& x) { return mpz_list_out(x.coeffs()); }

FieldElement element_in(const FieldPtr& field, const json& j) {
    return field->element(mpz_list_in(j));
}

json curve_out(const CurvePtr& curve) {
    json j;
    j["field"] = field_out(curve->field());
    j["a"] = json::array({element_out(curve->a1()), element_out(curve->a2()),
                          element_out(curve->a3()), element_out(curve->a4()),
                          element_out(curve->a6())});
    if (curve->order()) j["order"] = mpz_out(*curve->order());
    return j;
}

CurvePtr curve_in(const json& j) {
    if (!j.is_object()) fail(Errc::InvalidParameters, "curve descriptor must be an object");
    FieldPtr field = field_in(j.at("field"));
    const json& a = j.at("a");
    if (!a.is_array() || a.size() != 5)
        fail(Errc::InvalidParameters, "curve coefficients must be [a1, a2, a3, a4, a6]");
    std::optional<mpz_class> order;
    if (j.contains("order")) order = mpz_in(j.at("order"));
    return Curve::make(field, element_in(field, a[0]), element_in(field, a[1]),
                       element_in(field, a[2]), element_in(field, a[3]),
                       element_in(field, a[4]), std::move(order));
}

json point_out(const Point& p) {
    if (p.is_infinity()) return json("infinity");
    json j;
    j["x"] = element_out(p.x());
    j["y"] = element_out(p.y());
    return j;
}

Point point_in(const CurvePtr& curve, const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "infinity") return Point::infinity();
        fail(Errc::InvalidParameters, "the only point string form is \"infinity\"");
    }
    if (!j.is_object()) fail(Errc::InvalidParameters, "point must be an object or \"infinity\"");
    const FieldPtr& field = curve->field();
    return curve->point(element_in(field, j.at("x")), element_in(field, j.at("y")));
}

json family_out(const CurveFamily& family) {
    json j;
    j["k"] = family.k;
    j["p"] = mpz_list_out(family.p_poly);
    j["u"] = mpz_list_out(family.u_poly);
    j["r"] = mpz_list_out(family.r_poly);
    return j;
}

CurveFamily family_in(const json& j) {
    if (!j.is_object()) fail(Errc::InvalidParameters, "family descriptor must be an object");
    CurveFamily fam;
    fam.k = unsigned_in(j.at("k"));
    fam.p_poly = mpz_list_in(j.at("p"));
    fam.u_poly = mpz_list_in(j.at("u"));
    fam.r_poly = mpz_list_in(j.at("r"));
    return fam;
}

json parse(const std::string& text) {
    return json::parse(text); // exceptions translated by the callers
}

// Runs fn, translating JSON and parse failures to InvalidParameters while
// letting domain errors through untouched.
template <typename Fn>
auto guarded(Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        fail(Errc::InvalidParameters, e.what());
    }
}

} // namespace

std::string field_to_json(const FieldPtr& field) { return field_out(field).dump(); }

FieldPtr field_from_json(const std::string& text) {
    return guarded([&] { return field_in(parse(text)); });
}

std::string element_to_json(const FieldElement& x) { return element_out(x).dump(); }

FieldElement element_from_json(const FieldPtr& field, const std::string& text) {
    return guarded([&] { return element_in(field, parse(text)); });
}

std::string curve_to_json(const CurvePtr& curve) { return curve_out(curve).dump(); }

CurvePtr curve_from_json(const std::string& text) {
    return guarded([&] { return curve_in(parse(text)); });
}

std::string point_to_json(const Point& p) { return point_out(p).dump(); }

Point point_from_json(const CurvePtr& curve, const std::string& text) {
    return guarded([&] { return point_in(curve, parse(text)); });
}

std::string family_to_json(const CurveFamily& family) { return family_out(family).dump(); }

CurveFamily family_from_json(const std::string& text) {
    return guarded([&] { return family_in(parse(text)); });
}

std::string context_to_json(const CurvePtr& base, const mpz_class& r, unsigned k,
                            std::uint64_t seed) {
    json j;
    j["curve"] = curve_out(base);
    j["r"] = mpz_out(r);
    j["k"] = k;
    j["seed"] = seed;
    return j.dump();
}

std::string torsion_context_to_json(const CurvePtr& curve, const mpz_class& r) {
    json j;
    j["curve"] = curve_out(curve);
    j["r"] = mpz_out(r);
    j["torsion"] = true;
    return j.dump();
}

ContextPtr context_from_json(const std::string& text) {
    return guarded([&]() -> ContextPtr {
        json j = parse(text);
        if (!j.is_object())
            fail(Errc::InvalidParameters, "context descriptor must be an object");
        CurvePtr curve = curve_in(j.at("curve"));
        mpz_class r = mpz_in(j.at("r"));
        if (j.value("torsion", false)) return PairingContext::make_torsion(curve, r);
        unsigned k = unsigned_in(j.at("k"));
        Rng rng(j.at("seed").get<std::uint64_t>());
        return PairingContext::make(curve, r, k, rng);
    });
}

} // namespace pairkit
