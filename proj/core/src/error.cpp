// Copyright 2026 The sublat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sublat/error.hpp"

namespace sublat {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotDivisor: return "NotDivisor";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotPSD: return "NotPSD";
    case ErrorCode::TraceNotOne: return "TraceNotOne";
    case ErrorCode::NegativeProbability: return "NegativeProbability";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::EmptyEvidenceSet: return "EmptyEvidenceSet";
    case ErrorCode::NotSubsetOfFrame: return "NotSubsetOfFrame";
    case ErrorCode::InvalidSelection: return "InvalidSelection";
    case ErrorCode::ChainCondition: return "ChainCondition";
    case ErrorCode::MissingValue: return "MissingValue";
    case ErrorCode::Parse: return "Parse";
    }
    return "Unknown";
}

} // namespace sublat
