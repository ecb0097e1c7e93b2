// pairkit: exact-arithmetic bilinear pairings on elliptic curves
// Copyright 2026 The pairkit Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>

#include "pairkit/curve.hpp"
#include "pairkit/field.hpp"
#include "pairkit/lattice.hpp"
#include "pairkit/pairing.hpp"

namespace pairkit {

// JSON text codecs for the file formats:
//   field    {"p": ..., "k": ..., "modulus": [...]}
//   element  [c0, c1, ...]                      (constant term first)
//   curve    {"field": ..., "a": [a1,a2,a3,a4,a6], "order": ...?}
//   point    {"x": [...], "y": [...]} or "infinity"
//   family   {"k": ..., "p": [...], "u": [...], "r": [...]}
//   context  {"curve": ..., "r": ..., "k": ..., "seed": ...}
//            or {"curve": ..., "r": ..., "torsion": true}
// Integers are emitted as JSON numbers when they fit in a signed 64-bit
// value and as decimal strings otherwise; input accepts both forms.
// Emission is deterministic (sorted keys, compact separators), so equal
// objects serialize to identical bytes. All *_from_json raise
// Error(InvalidParameters) on malformed text; domain validation errors
// from the reconstructed objects pass through unchanged.

std::string field_to_json(const FieldPtr& field);
FieldPtr field_from_json(const std::string& text);

std::string element_to_json(const FieldElement& x);
FieldElement element_from_json(const FieldPtr& field, const std::string& text);

std::string curve_to_json(const CurvePtr& curve);
CurvePtr curve_from_json(const std::string& text);

std::string point_to_json(const Point& p);
Point point_from_json(const CurvePtr& curve, const std::string& text);

std::string family_to_json(const CurveFamily& family);
CurveFamily family_from_json(const std::string& text);

// A context file records the inputs that rebuild the context
// deterministically: the annotated base curve, r, and either the embedding
// degree plus the generator-search seed (structured) or a torsion marker.
std::string context_to_json(const CurvePtr& base, const mpz_class& r, unsigned k,
                            std::uint64_t seed);
std::string torsion_context_to_json(const CurvePtr& curve, const mpz_class& r);
ContextPtr context_from_json(const std::string& text);

} // namespace pairkit
