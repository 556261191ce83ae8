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

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "sublat/lattice.hpp"

namespace sublat {

using Complex = std::complex<double>;

namespace tol {
inline constexpr double norm = 1e-10;
inline constexpr double hermitian = 1e-10;
inline constexpr double trace = 1e-10;
inline constexpr double psd = 1e-9;
inline constexpr double unitary = 1e-12;
} // namespace tol

/// Normalized vector in H(dim), expressed in the position basis |X_dim; r>.
class StateVector {
public:
    /// Throws InvalidArgument if the squared norm differs from 1 by more than tol::norm.
    explicit StateVector(Eigen::VectorXcd amplitudes);

    /// Position eigenstate |X_dim; r>.
    static StateVector basis(std::uint64_t dim, std::uint64_t r);

    [[nodiscard]] std::uint64_t dim() const noexcept {
        return static_cast<std::uint64_t>(amplitudes_.size());
    }
    [[nodiscard]] const Eigen::VectorXcd& amplitudes() const noexcept { return amplitudes_; }
    [[nodiscard]] Complex inner(const StateVector& other) const;

private:
    Eigen::VectorXcd amplitudes_;
};

/// Plain n x n operator; no invariants beyond being square.
struct DenseOperator {
    Eigen::MatrixXcd entries;

    [[nodiscard]] std::uint64_t dim() const noexcept {
        return static_cast<std::uint64_t>(entries.rows());
    }
    /// Max-norm deviation of U U^dagger from the identity.
    [[nodiscard]] double unitarity_defect() const;
};

/// F_n with entries n^{-1/2} exp(2 pi i r s / n).
[[nodiscard]] DenseOperator fourier(std::uint64_t n);

/// Places amplitude a_r of a state of Sigma(m) at index (k/m) r of Sigma(k).
[[nodiscard]] StateVector embed_state(const StateVector& v, std::uint64_t k);

/// Validated density matrix: Hermitian, unit trace, positive semidefinite.
class DensityMatrix {
public:
    [[nodiscard]] std::uint64_t dim() const noexcept {
        return static_cast<std::uint64_t>(diagonal_.size());
    }
    /// Full matrix; diagonal states are materialized on demand.
    [[nodiscard]] Eigen::MatrixXcd to_dense() const;
    /// Re(rho_rr), the outcome distribution of a position measurement.
    [[nodiscard]] const std::vector<double>& diagonal() const noexcept { return diagonal_; }
    [[nodiscard]] bool is_diagonal() const noexcept { return diagonal_only_; }

private:
    friend DensityMatrix make_density(const Eigen::MatrixXcd&);
    friend DensityMatrix make_diagonal_density(std::span<const double>);

    DensityMatrix(Eigen::MatrixXcd entries, std::vector<double> diagonal);

    Eigen::MatrixXcd entries_; ///< empty for diagonal states
    std::vector<double> diagonal_;
    bool diagonal_only_ = false;
};

/// Throws NotHermitian, TraceNotOne or NotPSD (checked in that order).
[[nodiscard]] DensityMatrix make_density(const Eigen::MatrixXcd& entries);
/// Throws NegativeProbability or TraceNotOne.
[[nodiscard]] DensityMatrix make_diagonal_density(std::span<const double> probabilities);

/// G G^dagger / Tr(G G^dagger) for a complex Gaussian G drawn from `seed`.
[[nodiscard]] DensityMatrix random_density(std::uint64_t n, std::uint64_t seed);

/// Which of the diagonal projector families a support set belongs to.
struct ProjectorLabel {
    enum class Kind { P, PTilde, T, S, D };

    Kind kind = Kind::P;
    Divisor first = 1;
    Divisor second = 0; ///< only used by T and S

    [[nodiscard]] std::string to_string() const;
    friend bool operator==(const ProjectorLabel&, const ProjectorLabel&) = default;
};

/// A projector diagonal in the position basis, stored as its support.
class ProjectorSupport {
public:
    ProjectorSupport(std::uint64_t context, std::vector<std::uint64_t> indices,
                     ProjectorLabel label);

    [[nodiscard]] std::uint64_t context() const noexcept { return context_; }
    /// Ascending, duplicate-free.
    [[nodiscard]] const std::vector<std::uint64_t>& indices() const noexcept { return indices_; }
    [[nodiscard]] const ProjectorLabel& label() const noexcept { return label_; }
    /// Rank of the projector.
    [[nodiscard]] std::size_t size() const noexcept { return indices_.size(); }
    [[nodiscard]] bool empty() const noexcept { return indices_.empty(); }
    [[nodiscard]] bool contains(std::uint64_t r) const noexcept;

    /// Dense 0/1 diagonal matrix; for cross-checks only.
    [[nodiscard]] Eigen::MatrixXcd to_dense() const;

private:
    std::uint64_t context_;
    std::vector<std::uint64_t> indices_;
    ProjectorLabel label_;
};

/// Projector onto the embedded subsystem Sigma(m): support {r n/m}.
[[nodiscard]] ProjectorSupport projector(const DivisorLattice& lattice, Divisor m);
/// P(m) with the vacuum index 0 removed.
[[nodiscard]] ProjectorSupport projector_tilde(const DivisorLattice& lattice, Divisor m);
/// Projector onto span[H(m1) u H(m2)].
[[nodiscard]] ProjectorSupport projector_T(const DivisorLattice& lattice, Divisor m1, Divisor m2);
/// Projector onto the part of H(m1 v m2) orthogonal to T(m1, m2).
[[nodiscard]] ProjectorSupport projector_S(const DivisorLattice& lattice, Divisor m1, Divisor m2);
/// "Don't know" projector 1 - P(m) - P~(not m).
[[nodiscard]] ProjectorSupport projector_D(const DivisorLattice& lattice, Divisor m);

/// Raw Tr[rho P] = sum of Re(rho_rr) over the support; not clamped.
/// Throws DimensionMismatch.
[[nodiscard]] double trace_against(const DensityMatrix& rho, const ProjectorSupport& projector);

/// Clamps a probability computed in floating point into [0, 1] for display.
[[nodiscard]] double clamp_probability(double p) noexcept;

} // namespace sublat
