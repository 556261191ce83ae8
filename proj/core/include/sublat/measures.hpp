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

#include <functional>
#include <map>
#include <span>
#include <vector>

#include "sublat/check.hpp"
#include "sublat/lattice.hpp"
#include "sublat/quantum.hpp"

namespace sublat {

/// Lower/upper probabilities of the subsystems Sigma(m), m | n, in a state rho.
///
///   l(m)  = Tr[rho P(m)]              l~(m) = l(m) - l(1)
///   u(m)  = 1 - l(not m) + l(1)       u~(m) = u(m) - l(1)
///   d(m)  = u(m) - l(m) = Tr[rho D(m)]
///
/// l is supermodular and u submodular on the divisor lattice; their
/// modularity defects are Tr[rho S(m1, m2)] and -Tr[rho S(not m1, not m2)].
class SubsystemProbabilities {
public:
    /// Throws DimensionMismatch unless rho.dim() == lattice.n().
    SubsystemProbabilities(DivisorLattice lattice, DensityMatrix rho);

    [[nodiscard]] const DivisorLattice& lattice() const noexcept { return lattice_; }
    [[nodiscard]] const DensityMatrix& rho() const noexcept { return rho_; }
    [[nodiscard]] std::uint64_t n() const noexcept { return lattice_.n(); }

    [[nodiscard]] double lower(Divisor m) const;
    [[nodiscard]] double lower_tilde(Divisor m) const;
    [[nodiscard]] double upper(Divisor m) const;
    [[nodiscard]] double upper_tilde(Divisor m) const;
    [[nodiscard]] double dont_know(Divisor m) const;
    /// Tr[rho D(m)], the projector route to dont_know.
    [[nodiscard]] double dont_know_trace(Divisor m) const;

    /// l~(not m), the counterpart of l(complement A).
    [[nodiscard]] double negbar_lower(Divisor m) const;
    /// 1 - l(not not m), the counterpart of u(complement A).
    [[nodiscard]] double negbar_upper(Divisor m) const;

    /// Modularity defect of l at (m1, m2).
    [[nodiscard]] double sigma(Divisor m1, Divisor m2) const;
    /// Tr[rho S(m1, m2)], the projector route to sigma.
    [[nodiscard]] double sigma_trace(Divisor m1, Divisor m2) const;
    /// Modularity defect of u at (m1, m2).
    [[nodiscard]] double upper_defect(Divisor m1, Divisor m2) const;

    /// l(lcm A), with l(empty) = 0. Elements must divide n.
    [[nodiscard]] double capacity_lower(std::span<const Divisor> subset) const;
    [[nodiscard]] double capacity_upper(std::span<const Divisor> subset) const;

    /// L(m; k) = l(m v k) - l(k): what Sigma(m) adds when merged with Sigma(k).
    [[nodiscard]] double added_value(Divisor m, Divisor k) const;

private:
    [[nodiscard]] Divisor lcm_of(std::span<const Divisor> subset) const;

    DivisorLattice lattice_;
    DensityMatrix rho_;
    std::vector<double> lower_; ///< indexed like lattice_.elements()
};

/// A real function on D(n), keyed by divisor.
using LatticeFunction = std::map<Divisor, double>;

[[nodiscard]] LatticeFunction tabulate(const DivisorLattice& lattice,
                                       const std::function<double(Divisor)>& f);

/// F(m1, m2) = f(m1 v m2) + f(m1 ^ m2) - f(m1) - f(m2). Written so that it is
/// exactly zero in floating point whenever m1 and m2 are comparable.
/// Throws MissingValue if f lacks any of the four values.
[[nodiscard]] double modularity_defect(const DivisorLattice& lattice, const LatticeFunction& f,
                                       Divisor m1, Divisor m2);

enum class Modularity { Supermodular, Modular, Submodular, Neither };

[[nodiscard]] const char* to_string(Modularity m) noexcept;

/// Scans all pairs. Modular wins when every |F| <= tolerance.
[[nodiscard]] Modularity classify(const DivisorLattice& lattice, const LatticeFunction& f,
                                  double tolerance = 1e-10);

struct VerifyOptions {
    double tolerance = 1e-10;
    /// Negates sigma inside the checks. Exists only to exercise the failure path.
    bool flip_sigma_sign = false;
};

/// Runs every lattice-probability proposition over all divisors and pairs.
///
/// Keys: endpoints, ordering, lower_monotone, upper_monotone, negation_bound,
/// supermodularity, sigma_identity, upper_defect_identity, submodularity_upper,
/// complement_sandwich, double_negation_upper, intermediate_sandwich,
/// full_support_upper, dont_know_identity, chain_modularity, added_value_identity.
[[nodiscard]] CheckTable verify_propositions(const SubsystemProbabilities& probabilities,
                                             const VerifyOptions& options = {});

struct DivisorRow {
    Divisor m = 1;
    double lower = 0;
    double lower_tilde = 0;
    double upper = 0;
    double upper_tilde = 0;
    double dont_know = 0;

    friend bool operator==(const DivisorRow&, const DivisorRow&) = default;
};

/// Everything the CLI prints for one (n, rho): per-divisor rows, the sigma and
/// upper-defect tables (indexed like the ascending divisor list) and checks.
struct ProbabilityReport {
    std::uint64_t n = 1;
    std::vector<DivisorRow> rows;
    std::vector<std::vector<double>> sigma;
    std::vector<std::vector<double>> upper_defect;
    CheckTable checks;

    friend bool operator==(const ProbabilityReport&, const ProbabilityReport&) = default;
};

[[nodiscard]] ProbabilityReport make_report(const SubsystemProbabilities& probabilities,
                                            const VerifyOptions& options = {});

} // namespace sublat
