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

#include "sublat/check.hpp"

#include <algorithm>
#include <cmath>

namespace sublat {

void CheckResult::record_slack(double slack, double tolerance) {
    worst_slack = samples == 0 ? slack : std::min(worst_slack, slack);
    ++samples;
    if (!(slack >= -tolerance)) {
        pass = false;
    }
}

void CheckResult::record_eq(double lhs, double rhs, double tolerance) {
    record_slack(-std::abs(lhs - rhs), tolerance);
}

void CheckResult::merge(const CheckResult& other) {
    if (other.samples == 0) {
        return;
    }
    worst_slack = samples == 0 ? other.worst_slack : std::min(worst_slack, other.worst_slack);
    samples += other.samples;
    pass = pass && other.pass;
}

void merge_checks(CheckTable& into, const CheckTable& from) {
    for (const auto& [name, result] : from) {
        into[name].merge(result);
    }
}

bool all_pass(const CheckTable& checks) noexcept {
    return std::all_of(checks.begin(), checks.end(),
                       [](const auto& entry) { return entry.second.pass; });
}

} // namespace sublat
