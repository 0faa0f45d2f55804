// Copyright 2026 The phocs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "phocs/error.hpp"

namespace phocs {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::SingularMatrix: return "SingularMatrix";
        case ErrorCode::NonHermitian: return "NonHermitian";
        case ErrorCode::IdentityExponent: return "IdentityExponent";
        case ErrorCode::PositionOutOfRange: return "PositionOutOfRange";
        case ErrorCode::NotClifford: return "NotClifford";
        case ErrorCode::DecompositionFailure: return "DecompositionFailure";
        case ErrorCode::UnknownGate: return "UnknownGate";
        case ErrorCode::QubitOutOfRange: return "QubitOutOfRange";
        case ErrorCode::InvalidAssignment: return "InvalidAssignment";
        case ErrorCode::TooManyQubits: return "TooManyQubits";
        case ErrorCode::FreeOnNonZeroQubit: return "FreeOnNonZeroQubit";
        case ErrorCode::FreeOnEntangledQubit: return "FreeOnEntangledQubit";
        case ErrorCode::MalformedCondition: return "MalformedCondition";
        case ErrorCode::HintNotStabilizer: return "HintNotStabilizer";
        case ErrorCode::HintCommutes: return "HintCommutes";
        case ErrorCode::ResidualEntanglement: return "ResidualEntanglement";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::UndeclaredQubit: return "UndeclaredQubit";
        case ErrorCode::ForwardOutcomeReference: return "ForwardOutcomeReference";
        case ErrorCode::DuplicateRotationLabel: return "DuplicateRotationLabel";
        case ErrorCode::NotCanonical: return "NotCanonical";
        case ErrorCode::RotationCountMismatch: return "RotationCountMismatch";
        case ErrorCode::OutputArityMismatch: return "OutputArityMismatch";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::FormatError: return "FormatError";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {
}

void fail(ErrorCode code, const std::string &message) {
    throw Error(code, message);
}

}  // namespace phocs
