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

#include "sublat/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "sublat/error.hpp"

namespace sublat {

namespace {

double frequency(const MeasurementRecord& record, const std::vector<std::uint64_t>& outcomes) {
    if (record.total == 0) {
        throw Error(ErrorCode::InvalidArgument, "measurement record has no shots");
    }
    std::uint64_t hits = 0;
    for (std::uint64_t r : outcomes) {
        hits += record.counts.at(r);
    }
    return static_cast<double>(hits) / static_cast<double>(record.total);
}

void require_context(const MeasurementRecord& record, const DivisorLattice& lattice) {
    if (record.n != lattice.n() || record.counts.size() != record.n) {
        throw Error(ErrorCode::DimensionMismatch, "record for n = " + std::to_string(record.n) +
                                                      " used with lattice of " +
                                                      std::to_string(lattice.n()));
    }
}

} // namespace

MeasurementRecord simulate(const DensityMatrix& rho, std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0) {
        throw Error(ErrorCode::InvalidArgument, "shots must be >= 1");
    }
    const std::vector<double>& diag = rho.diagonal();
    std::vector<double> cdf(diag.size());
    double running = 0.0;
    for (std::size_t r = 0; r < diag.size(); ++r) {
        running += std::max(diag[r], 0.0);
        cdf[r] = running;
    }
    for (double& c : cdf) {
        c /= running;
    }
    const auto last_positive = static_cast<std::size_t>(
        std::find_if(diag.rbegin(), diag.rend(), [](double p) { return p > 0.0; }).base() -
        diag.begin() - 1);

    MeasurementRecord record;
    record.n = rho.dim();
    record.counts.assign(diag.size(), 0);
    record.total = shots;
    record.seed = seed;
    record.algorithm = kSamplerAlgorithm;

    std::mt19937_64 rng(seed);
    for (std::uint64_t shot = 0; shot < shots; ++shot) {
        // 53 random bits -> uniform double in [0, 1).
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        const auto r = it == cdf.end() ? last_positive : static_cast<std::size_t>(it - cdf.begin());
        ++record.counts[r];
    }
    return record;
}

std::vector<std::uint64_t> lower_outcomes(const DivisorLattice& lattice, Divisor m) {
    return projector(lattice, m).indices();
}

std::vector<std::uint64_t> upper_outcomes(const DivisorLattice& lattice, Divisor m) {
    const auto excluded = projector_tilde(lattice, lattice.negation(m));
    std::vector<std::uint64_t> out;
    for (std::uint64_t r = 0; r < lattice.n(); ++r) {
        if (!excluded.contains(r)) {
            out.push_back(r);
        }
    }
    return out;
}

double estimate_lower(const MeasurementRecord& record, const DivisorLattice& lattice, Divisor m) {
    require_context(record, lattice);
    return frequency(record, lower_outcomes(lattice, m));
}

double estimate_upper(const MeasurementRecord& record, const DivisorLattice& lattice, Divisor m) {
    require_context(record, lattice);
    return frequency(record, upper_outcomes(lattice, m));
}

double estimate_dont_know(const MeasurementRecord& record, const DivisorLattice& lattice,
                          Divisor m) {
    require_context(record, lattice);
    const auto lower = lower_outcomes(lattice, m);
    const auto upper = upper_outcomes(lattice, m);
    std::vector<std::uint64_t> diff;
    std::set_difference(upper.begin(), upper.end(), lower.begin(), lower.end(),
                        std::back_inserter(diff));
    return frequency(record, diff);
}

std::vector<Divisor> intermediate_divisors(const DivisorLattice& lattice, Divisor m) {
    const Divisor closure = lattice.negation(lattice.negation(m));
    std::vector<Divisor> out;
    for (Divisor k : lattice.elements()) {
        if (k % m == 0 && closure % k == 0) {
            out.push_back(k);
        }
    }
    return out;
}

double estimate_intermediate(const MeasurementRecord& record, const DivisorLattice& lattice,
                             Divisor m, Divisor k) {
    require_context(record, lattice);
    lattice.require(m);
    lattice.require(k);
    const Divisor closure = lattice.negation(lattice.negation(m));
    if (k % m != 0 || closure % k != 0) {
        throw Error(ErrorCode::ChainCondition,
                    "need " + std::to_string(m) + " | " + std::to_string(k) + " | " +
                        std::to_string(closure) + " (not not m)");
    }
    return frequency(record, projector(lattice, k).indices());
}

double binomial_band(double p, std::uint64_t shots, double sigmas) {
    const double q = std::clamp(p, 0.0, 1.0);
    return sigmas * std::sqrt(q * (1.0 - q) / static_cast<double>(shots));
}

} // namespace sublat
