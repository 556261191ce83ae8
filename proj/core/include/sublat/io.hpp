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

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "sublat/dempster.hpp"
#include "sublat/measures.hpp"
#include "sublat/quantum.hpp"
#include "sublat/sampling.hpp"

/// Text formats. Parse failures throw Error(ErrorCode::Parse), and
/// semantically invalid content throws the code of the violated invariant.
namespace sublat::io {

[[nodiscard]] std::string read_file(const std::filesystem::path& path);

/// {"n": N, "diagonal": [...]} or {"n": N, "entries": [[[re, im], ...], ...]}.
/// When expected_n is given the file must agree with it.
[[nodiscard]] DensityMatrix density_from_json(std::string_view text,
                                              std::optional<std::uint64_t> expected_n = {});
[[nodiscard]] std::string density_to_json(const DensityMatrix& rho);

[[nodiscard]] std::string report_to_json(const ProbabilityReport& report, int indent = 2);
[[nodiscard]] ProbabilityReport report_from_json(std::string_view text);
/// Header m,l,lt,u,ut,d and one row per divisor.
[[nodiscard]] std::string report_to_csv(const ProbabilityReport& report);

[[nodiscard]] std::string checks_to_json(const CheckTable& checks, int indent = 2);

/// {"n": N, "seed": S, "algorithm": "...", "counts": [...]}.
[[nodiscard]] std::string record_to_json(const MeasurementRecord& record, int indent = 2);
[[nodiscard]] MeasurementRecord record_from_json(std::string_view text);

/// {"frame": {"min": a, "max": b} | [labels...], "sets": [[...] | "lo..hi", ...]}.
[[nodiscard]] ds::Evidence evidence_from_json(std::string_view text);
[[nodiscard]] std::string evidence_to_json(const ds::Evidence& evidence);

/// Comma-separated items, each a label or an inclusive range "lo..hi",
/// e.g. "60..69" or "1,4,10..12". Labels must lie in the frame.
[[nodiscard]] ds::LabelSet parse_label_set(std::string_view spec, const ds::Frame& frame);

/// "1/4" style text for an exact fraction; integers print without a denominator.
[[nodiscard]] std::string format_rational(const ds::Rational& r);

/// Shortest text that parses back to the same double (%.17g trimmed).
[[nodiscard]] std::string format_double(double x);

} // namespace sublat::io
