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

#include "sublat/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <numbers>
#include <random>

#include "sublat/error.hpp"

namespace sublat {

StateVector::StateVector(Eigen::VectorXcd amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() == 0) {
        throw Error(ErrorCode::InvalidArgument, "state vector must have dimension >= 1");
    }
    const double norm2 = amplitudes_.squaredNorm();
    if (std::abs(norm2 - 1.0) > tol::norm) {
        throw Error(ErrorCode::InvalidArgument,
                    "state vector is not normalized (|v|^2 = " + std::to_string(norm2) + ")");
    }
}

StateVector StateVector::basis(std::uint64_t dim, std::uint64_t r) {
    if (r >= dim) {
        throw Error(ErrorCode::InvalidArgument, "basis index out of range");
    }
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
    v(static_cast<Eigen::Index>(r)) = 1.0;
    return StateVector(std::move(v));
}

Complex StateVector::inner(const StateVector& other) const {
    if (other.dim() != dim()) {
        throw Error(ErrorCode::DimensionMismatch, "inner product of states of different dimension");
    }
    // Sequential sum, so zero padding from embed_state leaves the result bit-identical.
    Complex sum(0.0, 0.0);
    for (Eigen::Index r = 0; r < amplitudes_.size(); ++r) {
        sum += std::conj(amplitudes_(r)) * other.amplitudes_(r);
    }
    return sum;
}

double DenseOperator::unitarity_defect() const {
    const Eigen::MatrixXcd product = entries * entries.adjoint();
    const auto identity = Eigen::MatrixXcd::Identity(entries.rows(), entries.cols());
    return (product - identity).cwiseAbs().maxCoeff();
}

DenseOperator fourier(std::uint64_t n) {
    if (n == 0) {
        throw Error(ErrorCode::InvalidArgument, "Fourier transform needs n >= 1");
    }
    const auto size = static_cast<Eigen::Index>(n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    Eigen::MatrixXcd f(size, size);
    for (std::uint64_t r = 0; r < n; ++r) {
        for (std::uint64_t s = 0; s < n; ++s) {
            // Reduce rs mod n before taking the angle so large products stay exact.
            const auto phase = static_cast<double>((r * s) % n);
            const double angle = 2.0 * std::numbers::pi * phase / static_cast<double>(n);
            f(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(s)) =
                scale * Complex(std::cos(angle), std::sin(angle));
        }
    }
    return DenseOperator{std::move(f)};
}

StateVector embed_state(const StateVector& v, std::uint64_t k) {
    const std::uint64_t m = v.dim();
    if (k == 0 || k % m != 0) {
        throw Error(ErrorCode::NotDivisor,
                    std::to_string(m) + " does not divide " + std::to_string(k));
    }
    const std::uint64_t step = k / m;
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(k));
    for (std::uint64_t r = 0; r < m; ++r) {
        out(static_cast<Eigen::Index>(r * step)) = v.amplitudes()(static_cast<Eigen::Index>(r));
    }
    return StateVector(std::move(out));
}

DensityMatrix::DensityMatrix(Eigen::MatrixXcd entries, std::vector<double> diagonal)
    : entries_(std::move(entries)), diagonal_(std::move(diagonal)),
      diagonal_only_(entries_.size() == 0) {}

Eigen::MatrixXcd DensityMatrix::to_dense() const {
    if (!diagonal_only_) {
        return entries_;
    }
    Eigen::VectorXcd d(static_cast<Eigen::Index>(diagonal_.size()));
    for (std::size_t i = 0; i < diagonal_.size(); ++i) {
        d(static_cast<Eigen::Index>(i)) = diagonal_[i];
    }
    return d.asDiagonal();
}

DensityMatrix make_density(const Eigen::MatrixXcd& entries) {
    if (entries.rows() == 0 || entries.rows() != entries.cols()) {
        throw Error(ErrorCode::DimensionMismatch, "density matrix must be square and non-empty");
    }
    const double asym = (entries - entries.adjoint()).cwiseAbs().maxCoeff();
    if (asym > tol::hermitian) {
        throw Error(ErrorCode::NotHermitian,
                    "max |rho - rho^dagger| = " + std::to_string(asym));
    }
    const double trace = entries.trace().real();
    if (std::abs(trace - 1.0) > tol::trace) {
        throw Error(ErrorCode::TraceNotOne, "trace = " + std::to_string(trace));
    }
    const Eigen::MatrixXcd symmetrized = 0.5 * (entries + entries.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(symmetrized, Eigen::EigenvaluesOnly);
    const double min_eigenvalue = solver.eigenvalues().minCoeff();
    if (min_eigenvalue < -tol::psd) {
        throw Error(ErrorCode::NotPSD, "minimum eigenvalue " + std::to_string(min_eigenvalue));
    }
    std::vector<double> diagonal(static_cast<std::size_t>(entries.rows()));
    for (Eigen::Index i = 0; i < entries.rows(); ++i) {
        diagonal[static_cast<std::size_t>(i)] = entries(i, i).real();
    }
    return DensityMatrix(entries, std::move(diagonal));
}

DensityMatrix make_diagonal_density(std::span<const double> probabilities) {
    if (probabilities.empty()) {
        throw Error(ErrorCode::DimensionMismatch, "diagonal density needs at least one entry");
    }
    double total = 0.0;
    for (std::size_t i = 0; i < probabilities.size(); ++i) {
        const double p = probabilities[i];
        if (!std::isfinite(p) || p < 0.0) {
            throw Error(ErrorCode::NegativeProbability,
                        "a_" + std::to_string(i) + " = " + std::to_string(p));
        }
        total += p;
    }
    if (std::abs(total - 1.0) > tol::trace) {
        throw Error(ErrorCode::TraceNotOne, "sum of diagonal = " + std::to_string(total));
    }
    return DensityMatrix(Eigen::MatrixXcd(),
                         std::vector<double>(probabilities.begin(), probabilities.end()));
}

DensityMatrix random_density(std::uint64_t n, std::uint64_t seed) {
    if (n == 0) {
        throw Error(ErrorCode::InvalidArgument, "random density needs n >= 1");
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const auto size = static_cast<Eigen::Index>(n);
    Eigen::MatrixXcd g(size, size);
    for (Eigen::Index j = 0; j < size; ++j) {
        for (Eigen::Index i = 0; i < size; ++i) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            g(i, j) = Complex(re, im);
        }
    }
    Eigen::MatrixXcd rho = g * g.adjoint();
    rho /= rho.trace().real();
    // Round-off leaves rho Hermitian only to ~1e-16; make it exact.
    rho = 0.5 * (rho + rho.adjoint()).eval();
    return make_density(rho);
}

std::string ProjectorLabel::to_string() const {
    const auto one = [](const char* name, Divisor a) {
        return std::string(name) + "(" + std::to_string(a) + ")";
    };
    const auto two = [](const char* name, Divisor a, Divisor b) {
        return std::string(name) + "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    };
    switch (kind) {
    case Kind::P: return one("P", first);
    case Kind::PTilde: return one("P~", first);
    case Kind::T: return two("T", first, second);
    case Kind::S: return two("S", first, second);
    case Kind::D: return one("D", first);
    }
    return "?";
}

ProjectorSupport::ProjectorSupport(std::uint64_t context, std::vector<std::uint64_t> indices,
                                   ProjectorLabel label)
    : context_(context), indices_(std::move(indices)), label_(label) {
    std::sort(indices_.begin(), indices_.end());
    indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
    if (!indices_.empty() && indices_.back() >= context_) {
        throw Error(ErrorCode::InvalidArgument, "projector index outside {0..n-1}");
    }
}

bool ProjectorSupport::contains(std::uint64_t r) const noexcept {
    return std::binary_search(indices_.begin(), indices_.end(), r);
}

Eigen::MatrixXcd ProjectorSupport::to_dense() const {
    const auto size = static_cast<Eigen::Index>(context_);
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(size, size);
    for (std::uint64_t r : indices_) {
        out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r)) = 1.0;
    }
    return out;
}

namespace {

using Support = std::vector<std::uint64_t>;

Support multiples(std::uint64_t n, Divisor m) {
    Support out;
    out.reserve(m);
    const std::uint64_t step = n / m;
    for (std::uint64_t r = 0; r < m; ++r) {
        out.push_back(r * step);
    }
    return out;
}

Support set_union(const Support& a, const Support& b) {
    Support out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Support set_difference(const Support& a, const Support& b) {
    Support out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Support without_vacuum(Support s) {
    if (!s.empty() && s.front() == 0) {
        s.erase(s.begin());
    }
    return s;
}

} // namespace

ProjectorSupport projector(const DivisorLattice& lattice, Divisor m) {
    lattice.require(m);
    return ProjectorSupport(lattice.n(), multiples(lattice.n(), m),
                            {ProjectorLabel::Kind::P, m, 0});
}

ProjectorSupport projector_tilde(const DivisorLattice& lattice, Divisor m) {
    lattice.require(m);
    return ProjectorSupport(lattice.n(), without_vacuum(multiples(lattice.n(), m)),
                            {ProjectorLabel::Kind::PTilde, m, 0});
}

ProjectorSupport projector_T(const DivisorLattice& lattice, Divisor m1, Divisor m2) {
    lattice.require(m1);
    lattice.require(m2);
    return ProjectorSupport(lattice.n(),
                            set_union(multiples(lattice.n(), m1), multiples(lattice.n(), m2)),
                            {ProjectorLabel::Kind::T, m1, m2});
}

ProjectorSupport projector_S(const DivisorLattice& lattice, Divisor m1, Divisor m2) {
    const Divisor top = lattice.join(m1, m2);
    const Support t = set_union(multiples(lattice.n(), m1), multiples(lattice.n(), m2));
    return ProjectorSupport(lattice.n(), set_difference(multiples(lattice.n(), top), t),
                            {ProjectorLabel::Kind::S, m1, m2});
}

ProjectorSupport projector_D(const DivisorLattice& lattice, Divisor m) {
    const Divisor neg = lattice.negation(m);
    Support all(lattice.n());
    for (std::uint64_t r = 0; r < lattice.n(); ++r) {
        all[r] = r;
    }
    const Support excluded =
        set_union(multiples(lattice.n(), m), without_vacuum(multiples(lattice.n(), neg)));
    return ProjectorSupport(lattice.n(), set_difference(all, excluded),
                            {ProjectorLabel::Kind::D, m, 0});
}

double trace_against(const DensityMatrix& rho, const ProjectorSupport& projector) {
    if (rho.dim() != projector.context()) {
        throw Error(ErrorCode::DimensionMismatch,
                    "density of dimension " + std::to_string(rho.dim()) +
                        " against projector " + projector.label().to_string() + " in context " +
                        std::to_string(projector.context()));
    }
    const auto& diag = rho.diagonal();
    double sum = 0.0;
    for (std::uint64_t r : projector.indices()) {
        sum += diag[r];
    }
    return sum;
}

double clamp_probability(double p) noexcept { return std::clamp(p, 0.0, 1.0); }

} // namespace sublat
