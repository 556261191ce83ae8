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

#include "sublat/lattice.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "sublat/error.hpp"

namespace sublat {

namespace {

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
    std::uint64_t r = 1;
    while (exp-- > 0) {
        r *= base;
    }
    return r;
}

} // namespace

Factorization::Factorization(std::uint64_t value, PrimeMap primes)
    : value_(value), primes_(std::move(primes)) {}

unsigned Factorization::exponent(std::uint64_t p) const noexcept {
    auto it = primes_.find(p);
    return it == primes_.end() ? 0 : it->second;
}

unsigned Factorization::total_exponent() const noexcept {
    unsigned total = 0;
    for (const auto& [p, e] : primes_) {
        total += e;
    }
    return total;
}

std::uint64_t Factorization::divisor_count() const noexcept {
    std::uint64_t count = 1;
    for (const auto& [p, e] : primes_) {
        count *= e + 1;
    }
    return count;
}

Factorization factorize(std::int64_t n) {
    if (n <= 0) {
        throw Error(ErrorCode::InvalidArgument,
                    "factorize requires a positive integer, got " + std::to_string(n));
    }
    auto rest = static_cast<std::uint64_t>(n);
    Factorization::PrimeMap primes;
    for (std::uint64_t p = 2; p * p <= rest; p += (p == 2 ? 1 : 2)) {
        while (rest % p == 0) {
            ++primes[p];
            rest /= p;
        }
    }
    if (rest > 1) {
        ++primes[rest];
    }
    return Factorization(static_cast<std::uint64_t>(n), std::move(primes));
}

unsigned prime_exponent(std::uint64_t d, std::uint64_t p) noexcept {
    if (d == 0 || p < 2) {
        return 0;
    }
    unsigned e = 0;
    while (d % p == 0) {
        d /= p;
        ++e;
    }
    return e;
}

DivisorLattice::DivisorLattice(std::uint64_t n)
    : DivisorLattice(factorize(static_cast<std::int64_t>(n))) {}

DivisorLattice::DivisorLattice(Factorization factorization)
    : factorization_(std::move(factorization)) {
    elements_.push_back(1);
    for (const auto& [p, e] : factorization_.primes()) {
        const std::size_t base = elements_.size();
        std::uint64_t power = 1;
        for (unsigned i = 1; i <= e; ++i) {
            power *= p;
            for (std::size_t j = 0; j < base; ++j) {
                elements_.push_back(elements_[j] * power);
            }
        }
    }
    std::sort(elements_.begin(), elements_.end());
}

DivisorLattice divisors(std::int64_t n) { return DivisorLattice(factorize(n)); }

bool DivisorLattice::contains(Divisor d) const noexcept {
    return d != 0 && n() % d == 0;
}

std::size_t DivisorLattice::index_of(Divisor d) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), d);
    if (it == elements_.end() || *it != d) {
        require(d);
    }
    return static_cast<std::size_t>(it - elements_.begin());
}

void DivisorLattice::require(Divisor d) const {
    if (!contains(d)) {
        throw Error(ErrorCode::NotDivisor,
                    std::to_string(d) + " is not a divisor of " + std::to_string(n()));
    }
}

Divisor DivisorLattice::meet(Divisor k, Divisor m) const {
    require(k);
    require(m);
    return std::gcd(k, m);
}

Divisor DivisorLattice::join(Divisor k, Divisor m) const {
    require(k);
    require(m);
    return std::lcm(k, m);
}

Divisor DivisorLattice::negation(Divisor k) const {
    require(k);
    Divisor result = 1;
    for (const auto& [p, e] : factorization_.primes()) {
        if (k % p != 0) {
            result *= ipow(p, e);
        }
    }
    return result;
}

Divisor DivisorLattice::implication(Divisor k, Divisor m) const {
    require(k);
    require(m);
    Divisor result = 1;
    for (const auto& [p, e] : factorization_.primes()) {
        const unsigned ek = prime_exponent(k, p);
        const unsigned em = prime_exponent(m, p);
        result *= ipow(p, ek <= em ? e : em);
    }
    return result;
}

bool DivisorLattice::precedes(Divisor k, Divisor m) const {
    require(k);
    require(m);
    return m % k == 0;
}

bool DivisorLattice::is_hall(Divisor r) const {
    require(r);
    return std::gcd(r, n() / r) == 1;
}

std::vector<Divisor> DivisorLattice::boolean_sublattice() const {
    std::vector<Divisor> out;
    std::copy_if(elements_.begin(), elements_.end(), std::back_inserter(out),
                 [this](Divisor d) { return std::gcd(d, n() / d) == 1; });
    return out;
}

std::vector<std::pair<Divisor, Divisor>> DivisorLattice::covering_edges() const {
    std::vector<std::pair<Divisor, Divisor>> edges;
    for (Divisor d : elements_) {
        for (const auto& [p, e] : factorization_.primes()) {
            if ((n() / d) % p == 0) {
                edges.emplace_back(d, d * p);
            }
        }
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

std::vector<std::vector<Divisor>> DivisorLattice::maximal_chains() const {
    std::vector<std::vector<Divisor>> chains;
    std::vector<Divisor> path{n()};
    // DFS down the covering relations.
    std::function<void(Divisor)> descend = [&](Divisor d) {
        if (d == 1) {
            chains.push_back(path);
            return;
        }
        for (const auto& [p, e] : factorization_.primes()) {
            if (d % p == 0) {
                path.push_back(d / p);
                descend(d / p);
                path.pop_back();
            }
        }
    };
    descend(n());
    std::sort(chains.begin(), chains.end(), std::greater<>());
    return chains;
}

SubgroupView::SubgroupView(std::uint64_t order, std::uint64_t context)
    : order_(order), context_(context) {
    if (order == 0 || context == 0 || context % order != 0) {
        throw Error(ErrorCode::NotDivisor, "subgroup order " + std::to_string(order) +
                                               " does not divide " + std::to_string(context));
    }
    elements_.reserve(order);
    const std::uint64_t step = context / order;
    for (std::uint64_t r = 0; r < order; ++r) {
        elements_.push_back(r * step);
    }
}

bool SubgroupView::contains(std::uint64_t a) const noexcept {
    return a < context_ && a % (context_ / order_) == 0;
}

std::uint64_t embed_group(std::uint64_t a, std::uint64_t m, std::uint64_t k) {
    if (m == 0 || k == 0 || k % m != 0) {
        throw Error(ErrorCode::NotDivisor,
                    std::to_string(m) + " does not divide " + std::to_string(k));
    }
    if (a >= m) {
        throw Error(ErrorCode::InvalidArgument,
                    std::to_string(a) + " is not an element of Z(" + std::to_string(m) + ")");
    }
    return (k / m) * a;
}

std::vector<std::uint64_t> reduced_residues(std::uint64_t m) {
    if (m == 0) {
        throw Error(ErrorCode::InvalidArgument, "Z(0) has no residue system");
    }
    if (m == 1) {
        return {0};
    }
    std::vector<std::uint64_t> out;
    for (std::uint64_t a = 1; a < m; ++a) {
        if (std::gcd(a, m) == 1) {
            out.push_back(a);
        }
    }
    return out;
}

} // namespace sublat
