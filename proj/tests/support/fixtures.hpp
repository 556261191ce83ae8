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
#include <filesystem>
#include <numeric>
#include <vector>

#include "sublat/quantum.hpp"

namespace sublat::testing {

inline std::filesystem::path data_path(const char* name) {
    return std::filesystem::path(SUBLAT_TEST_DATA_DIR) / name;
}

/// a_nu = (nu + 1) / 171 for nu = 0..17; the bundled rho18.json holds these.
inline std::vector<double> rho18_weights() {
    std::vector<double> a(18);
    for (std::size_t nu = 0; nu < a.size(); ++nu) {
        a[nu] = static_cast<double>(nu + 1) / 171.0;
    }
    return a;
}

/// Sum of a[nu] over the listed indices, in the order given.
inline double sum_at(const std::vector<double>& a, std::initializer_list<std::size_t> idx) {
    double s = 0.0;
    for (std::size_t i : idx) {
        s += a[i];
    }
    return s;
}

/// Brute-force divisor list of n by scanning 1..n.
inline std::vector<std::uint64_t> brute_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 1; d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
        }
    }
    return out;
}

} // namespace sublat::testing
