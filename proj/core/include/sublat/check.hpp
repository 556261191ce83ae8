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

#include <cstdint>
#include <map>
#include <string>

namespace sublat {

/// Outcome of one family of numeric checks.
///
/// worst_slack is the smallest margin seen: rhs - lhs for an inequality
/// lhs <= rhs, and -|lhs - rhs| for an identity. A check passes while the
/// worst slack stays >= -tolerance.
struct CheckResult {
    bool pass = true;
    double worst_slack = 0.0;
    std::uint64_t samples = 0;

    void record_slack(double slack, double tolerance);
    void record_le(double lhs, double rhs, double tolerance) { record_slack(rhs - lhs, tolerance); }
    void record_eq(double lhs, double rhs, double tolerance);
    void record(bool ok) { record_slack(ok ? 0.0 : -1.0, 0.0); }

    void merge(const CheckResult& other);

    friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

using CheckTable = std::map<std::string, CheckResult>;

void merge_checks(CheckTable& into, const CheckTable& from);
[[nodiscard]] bool all_pass(const CheckTable& checks) noexcept;

} // namespace sublat
