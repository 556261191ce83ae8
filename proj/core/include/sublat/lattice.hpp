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
#include <span>
#include <utility>
#include <vector>

namespace sublat {

/// Element of the divisor lattice of some context n.
using Divisor = std::uint64_t;

/// Prime factorization of a positive integer, primes in ascending order.
class Factorization {
public:
    using PrimeMap = std::map<std::uint64_t, unsigned>;

    Factorization() = default;
    Factorization(std::uint64_t value, PrimeMap primes);

    [[nodiscard]] std::uint64_t value() const noexcept { return value_; }
    [[nodiscard]] const PrimeMap& primes() const noexcept { return primes_; }

    /// Exponent of p in value; 0 when p does not divide it.
    [[nodiscard]] unsigned exponent(std::uint64_t p) const noexcept;

    /// Sum of all exponents; the length of every maximal chain of D(value).
    [[nodiscard]] unsigned total_exponent() const noexcept;

    /// Number of divisors, prod (e_p + 1).
    [[nodiscard]] std::uint64_t divisor_count() const noexcept;

    friend bool operator==(const Factorization&, const Factorization&) = default;

private:
    std::uint64_t value_ = 1;
    PrimeMap primes_;
};

/// Trial division up to sqrt(n). Throws ErrorCode::InvalidArgument for n <= 0.
[[nodiscard]] Factorization factorize(std::int64_t n);

/// Exponent of prime p in the (not necessarily prime-power) value d.
[[nodiscard]] unsigned prime_exponent(std::uint64_t d, std::uint64_t p) noexcept;

/// The lattice of divisors of n: meet = GCD, join = LCM, O = 1, I = n.
///
/// Negation is the Heyting pseudocomplement: the largest divisor coprime
/// to k, i.e. the product of the full prime powers of n whose prime does
/// not divide k. The Hall divisors (gcd(r, n/r) = 1) form the Boolean
/// sublattice on which negation is an involution.
class DivisorLattice {
public:
    explicit DivisorLattice(std::uint64_t n);
    explicit DivisorLattice(Factorization factorization);

    [[nodiscard]] std::uint64_t n() const noexcept { return factorization_.value(); }
    [[nodiscard]] const Factorization& factorization() const noexcept { return factorization_; }

    /// Ascending list of all divisors.
    [[nodiscard]] std::span<const Divisor> elements() const noexcept { return elements_; }
    [[nodiscard]] std::size_t size() const noexcept { return elements_.size(); }

    [[nodiscard]] bool contains(Divisor d) const noexcept;
    /// Position of d in elements(); throws NotDivisor.
    [[nodiscard]] std::size_t index_of(Divisor d) const;
    /// Throws ErrorCode::NotDivisor unless d | n.
    void require(Divisor d) const;

    [[nodiscard]] Divisor bottom() const noexcept { return 1; }
    [[nodiscard]] Divisor top() const noexcept { return n(); }

    [[nodiscard]] Divisor meet(Divisor k, Divisor m) const;
    [[nodiscard]] Divisor join(Divisor k, Divisor m) const;
    [[nodiscard]] Divisor negation(Divisor k) const;
    /// Relative pseudocomplement k -> m: the largest d with gcd(k, d) | m.
    [[nodiscard]] Divisor implication(Divisor k, Divisor m) const;
    /// Partial order k | m.
    [[nodiscard]] bool precedes(Divisor k, Divisor m) const;

    [[nodiscard]] bool is_hall(Divisor r) const;
    /// D^B(n), ascending.
    [[nodiscard]] std::vector<Divisor> boolean_sublattice() const;

    /// Covering pairs (lower, upper) with upper / lower prime, ordered by lower then upper.
    [[nodiscard]] std::vector<std::pair<Divisor, Divisor>> covering_edges() const;

    /// All maximal chains, each written from n down to 1. Chains are listed
    /// in lexicographically descending order of those sequences.
    [[nodiscard]] std::vector<std::vector<Divisor>> maximal_chains() const;

private:
    Factorization factorization_;
    std::vector<Divisor> elements_;
};

/// Builds D(n); throws InvalidArgument for n <= 0.
[[nodiscard]] DivisorLattice divisors(std::int64_t n);

/// Cyclic subgroup of Z(n) isomorphic to Z(m): {r * (n/m) mod n}.
class SubgroupView {
public:
    SubgroupView(std::uint64_t order, std::uint64_t context);

    [[nodiscard]] std::uint64_t order() const noexcept { return order_; }
    [[nodiscard]] std::uint64_t context() const noexcept { return context_; }
    /// Ascending element list.
    [[nodiscard]] const std::vector<std::uint64_t>& elements() const noexcept { return elements_; }
    [[nodiscard]] bool contains(std::uint64_t a) const noexcept;

private:
    std::uint64_t order_;
    std::uint64_t context_;
    std::vector<std::uint64_t> elements_;
};

/// Embedding Z(m) -> Z(k), a -> (k/m) a. Requires m | k and a < m.
[[nodiscard]] std::uint64_t embed_group(std::uint64_t a, std::uint64_t m, std::uint64_t k);

/// Units of Z(m). For m = 1 returns {0} (Z(1) is the zero ring).
[[nodiscard]] std::vector<std::uint64_t> reduced_residues(std::uint64_t m);

} // namespace sublat
