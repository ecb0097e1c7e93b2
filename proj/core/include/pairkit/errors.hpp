// pairkit: exact-arithmetic bilinear pairings on elliptic curves
// Copyright 2026 The pairkit Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace pairkit {

// Failure vocabulary shared by every module. Each enumerator names one
// contract violation; Error::what() always starts with the enumerator name.
enum class Errc {
    // fields
    CompositeModulus,
    IrreducibleSearchExhausted,
    DivisionByZero,
    FieldMismatch,
    ZeroInput,
    // curves
    SingularCurve,
    CurveMismatch,
    NotOnCurve,
    FieldTooLarge,
    UnsupportedShape,
    BadResidueStructure,
    UnsupportedCurve,
    HashFailure,
    // function field
    ZeroFunction,
    SupportCollision,
    NonRationalSupport,
    NotPrincipal,
    // miller
    UnreachableTarget,
    RandomizationExhausted,
    // pairings
    InvalidParameters,
    NotTorsion,
    Def1Infeasible,
    NotInjective,
    MissingTwist,
    DegeneratePairing,
    BadDecomposition,
    NotRootOfUnity,
    NotInLatticeKernel,
    DivisibilityViolation,
    // lattices and families
    RankDeficient,
    NoInstanceInRange,
    CurveSearchFailed,
};

constexpr const char* errc_name(Errc code) noexcept {
    switch (code) {
    case Errc::CompositeModulus: return "CompositeModulus";
    case Errc::IrreducibleSearchExhausted: return "IrreducibleSearchExhausted";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::ZeroInput: return "ZeroInput";
    case Errc::SingularCurve: return "SingularCurve";
    case Errc::CurveMismatch: return "CurveMismatch";
    case Errc::NotOnCurve: return "NotOnCurve";
    case Errc::FieldTooLarge: return "FieldTooLarge";
    case Errc::UnsupportedShape: return "UnsupportedShape";
    case Errc::BadResidueStructure: return "BadResidueStructure";
    case Errc::UnsupportedCurve: return "UnsupportedCurve";
    case Errc::HashFailure: return "HashFailure";
    case Errc::ZeroFunction: return "ZeroFunction";
    case Errc::SupportCollision: return "SupportCollision";
    case Errc::NonRationalSupport: return "NonRationalSupport";
    case Errc::NotPrincipal: return "NotPrincipal";
    case Errc::UnreachableTarget: return "UnreachableTarget";
    case Errc::RandomizationExhausted: return "RandomizationExhausted";
    case Errc::InvalidParameters: return "InvalidParameters";
    case Errc::NotTorsion: return "NotTorsion";
    case Errc::Def1Infeasible: return "Def1Infeasible";
    case Errc::NotInjective: return "NotInjective";
    case Errc::MissingTwist: return "MissingTwist";
    case Errc::DegeneratePairing: return "DegeneratePairing";
    case Errc::BadDecomposition: return "BadDecomposition";
    case Errc::NotRootOfUnity: return "NotRootOfUnity";
    case Errc::NotInLatticeKernel: return "NotInLatticeKernel";
    case Errc::DivisibilityViolation: return "DivisibilityViolation";
    case Errc::RankDeficient: return "RankDeficient";
    case Errc::NoInstanceInRange: return "NoInstanceInRange";
    case Errc::CurveSearchFailed: return "CurveSearchFailed";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
    throw Error(code, message);
}

} // namespace pairkit
