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

#include "sublat/check.hpp"
#include "sublat/lattice.hpp"
#include "sublat/measures.hpp"

namespace sublat {

/// Exhaustive lattice-law checks on D(n): commutativity, associativity,
/// absorption, idempotence, distributivity, the Heyting laws, the
/// implication/negation agreement, Boolean behaviour on D^B(n), and the
/// maximal-chain length and count.
[[nodiscard]] CheckTable check_lattice_laws(const DivisorLattice& lattice);

/// Support-level identities of the projector family: P(m ^ k) = P(m)P(k),
/// P(m)P(not m) = P(1), inclusion along divisibility, the T/S partition of
/// P(m1 v m2), the dimension of S, D(m)P(m) = 0, and the subgroup embedding.
[[nodiscard]] CheckTable check_projector_identities(const DivisorLattice& lattice);

/// Mixes (seed, n, trial) into an independent 64-bit seed (splitmix64).
[[nodiscard]] std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t n, std::uint64_t trial);

struct SweepConfig {
    std::uint64_t n_min = 1;
    std::uint64_t n_max = 2;
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
    bool lattice_laws = true;
    bool projector_identities = true;
    VerifyOptions verify;
    /// 0 = std::thread::hardware_concurrency().
    unsigned threads = 0;
};

struct SweepSummary {
    CheckTable checks;
    std::uint64_t contexts = 0;  ///< number of n values visited
    std::uint64_t densities = 0; ///< random density matrices examined
    double min_sigma = 0.0;      ///< smallest sigma(m1, m2) seen
    double max_sigma_identity_error = 0.0;

    [[nodiscard]] bool pass() const noexcept { return all_pass(checks); }
};

/// For every n in [n_min, n_max]: the lattice and projector checks once, then
/// verify_propositions on `trials` random densities seeded by derive_seed.
/// Contexts run concurrently; results merge in n order, so the summary does
/// not depend on the thread count.
[[nodiscard]] SweepSummary run_sweep(const SweepConfig& config);

} // namespace sublat
