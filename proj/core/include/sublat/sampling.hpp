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
#include <string>
#include <vector>

#include "sublat/lattice.hpp"
#include "sublat/quantum.hpp"

namespace sublat {

/// Outcome counts of repeated position measurements on copies of rho.
struct MeasurementRecord {
    std::uint64_t n = 1;
    std::vector<std::uint64_t> counts; ///< counts[r] = times the state collapsed to |X_n; r>
    std::uint64_t total = 0;
    std::uint64_t seed = 0;
    std::string algorithm;

    friend bool operator==(const MeasurementRecord&, const MeasurementRecord&) = default;
};

/// Name stored in every record produced by simulate().
inline constexpr const char* kSamplerAlgorithm = "mt19937_64+inverse-cdf";

/// Draws `shots` i.i.d. outcomes with Pr(r) = Re(rho_rr). Deterministic in seed.
[[nodiscard]] MeasurementRecord simulate(const DensityMatrix& rho, std::uint64_t shots,
                                         std::uint64_t seed);

/// Outcomes counted toward l(m): the support of P(m).
[[nodiscard]] std::vector<std::uint64_t> lower_outcomes(const DivisorLattice& lattice, Divisor m);
/// Outcomes counted toward u(m): everything outside the support of P~(not m).
[[nodiscard]] std::vector<std::uint64_t> upper_outcomes(const DivisorLattice& lattice, Divisor m);

[[nodiscard]] double estimate_lower(const MeasurementRecord& record, const DivisorLattice& lattice,
                                    Divisor m);
[[nodiscard]] double estimate_upper(const MeasurementRecord& record, const DivisorLattice& lattice,
                                    Divisor m);
/// Frequency of outcomes in U(m) - L(m).
[[nodiscard]] double estimate_dont_know(const MeasurementRecord& record,
                                        const DivisorLattice& lattice, Divisor m);
/// Frequency on the support of P(k) for m | k | not not m; lies between the
/// lower and upper estimates of m for every record. Throws ChainCondition.
[[nodiscard]] double estimate_intermediate(const MeasurementRecord& record,
                                           const DivisorLattice& lattice, Divisor m, Divisor k);

/// Divisors k with m | k | not not m, ascending.
[[nodiscard]] std::vector<Divisor> intermediate_divisors(const DivisorLattice& lattice, Divisor m);

/// 5 sigma binomial band 5 sqrt(p (1 - p) / shots).
[[nodiscard]] double binomial_band(double p, std::uint64_t shots, double sigmas = 5.0);

} // namespace sublat
