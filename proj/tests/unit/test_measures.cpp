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

#include <cmath>
#include <numeric>

#include "doctest.h"
#include "fixtures.hpp"
#include "sublat/error.hpp"
#include "sublat/measures.hpp"

using namespace sublat;
using sublat::testing::rho18_weights;
using sublat::testing::sum_at;

namespace {

template <typename F>
ErrorCode error_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected sublat::Error");
    return ErrorCode::InvalidArgument;
}

SubsystemProbabilities rho18() {
    const auto a = rho18_weights();
    return SubsystemProbabilities(divisors(18), make_diagonal_density(a));
}

SubsystemProbabilities uniform(std::uint64_t n) {
    const std::vector<double> a(n, 1.0 / static_cast<double>(n));
    return SubsystemProbabilities(divisors(static_cast<std::int64_t>(n)), make_diagonal_density(a));
}

SubsystemProbabilities vacuum(std::uint64_t n) {
    std::vector<double> a(n, 0.0);
    a[0] = 1.0;
    return SubsystemProbabilities(divisors(static_cast<std::int64_t>(n)), make_diagonal_density(a));
}

double odd_sum(const std::vector<double>& a) {
    return sum_at(a, {1, 3, 5, 7, 9, 11, 13, 15, 17});
}

double even_sum(const std::vector<double>& a) {
    return sum_at(a, {0, 2, 4, 6, 8, 10, 12, 14, 16});
}

double all_but_9(const std::vector<double>& a) {
    return sum_at(a, {0, 1, 2, 3, 4, 5, 6, 7, 8, 10, 11, 12, 13, 14, 15, 16, 17});
}

constexpr double kTight = 1e-12;

} // namespace

TEST_CASE("lower and upper for the diagonal n = 18 state") {
    const auto p = rho18();
    const auto a = rho18_weights();
    CHECK(p.lower(1) == doctest::Approx(a[0]).epsilon(kTight));
    CHECK(std::abs(p.lower(2) - sum_at(a, {0, 9})) < kTight);
    CHECK(std::abs(p.lower(3) - sum_at(a, {0, 6, 12})) < kTight);
    CHECK(std::abs(p.lower(6) - sum_at(a, {0, 3, 6, 9, 12, 15})) < kTight);
    CHECK(std::abs(p.lower(9) - even_sum(a)) < kTight);
    CHECK(std::abs(p.lower(18) - 1.0) < kTight);

    CHECK(std::abs(p.upper(1) - a[0]) < kTight);
    CHECK(std::abs(p.upper(2) - (a[0] + odd_sum(a))) < kTight);
    CHECK(std::abs(p.upper(3) - all_but_9(a)) < kTight);
    CHECK(std::abs(p.upper(6) - 1.0) < kTight);
    CHECK(std::abs(p.upper(9) - all_but_9(a)) < kTight);
    CHECK(std::abs(p.upper(18) - 1.0) < kTight);
    CHECK(error_of([&] { (void)p.lower(4); }) == ErrorCode::NotDivisor);
}

TEST_CASE("tilde, don't-know and negation-bar quantities") {
    const auto p = rho18();
    const auto a = rho18_weights();
    CHECK(std::abs(p.lower_tilde(2) - a[9]) < kTight);
    CHECK(std::abs(p.upper_tilde(1)) < kTight);
    CHECK(std::abs(p.dont_know(18)) < kTight);
    CHECK(std::abs(p.dont_know(2) - sum_at(a, {1, 3, 5, 7, 11, 13, 15, 17})) < kTight);
    CHECK(std::abs(p.negbar_lower(18)) < kTight);
    CHECK(std::abs(p.negbar_lower(2) - (even_sum(a) - a[0])) < kTight);
    for (Divisor m : p.lattice().elements()) {
        CHECK(p.lower(m) + p.negbar_lower(m) <= 1.0 + 1e-10);
        CHECK(p.upper(m) + p.negbar_upper(m) >= 1.0 - 1e-10);
        CHECK(std::abs(p.dont_know(m) - p.dont_know_trace(m)) < 1e-10);
    }

    const auto v = vacuum(12);
    for (Divisor m : v.lattice().elements()) {
        CHECK(v.lower(m) == 1.0);
        CHECK(v.upper(m) == 1.0);
        CHECK(v.dont_know(m) == 0.0);
    }
}

TEST_CASE("maximally mixed state gives l(m) = m / n") {
    for (std::uint64_t n : {6u, 12u, 30u, 36u}) {
        const auto p = uniform(n);
        for (Divisor m : p.lattice().elements()) {
            CHECK(std::abs(p.lower(m) - static_cast<double>(m) / static_cast<double>(n)) <
                  kTight);
        }
    }
}

TEST_CASE("sigma closed forms and comparability") {
    const auto p = rho18();
    const auto a = rho18_weights();
    CHECK(std::abs(p.sigma(9, 6) - sum_at(a, {1, 5, 7, 11, 13, 17})) < kTight);
    CHECK(std::abs(p.sigma(9, 2) - sum_at(a, {1, 3, 5, 7, 11, 13, 15, 17})) < kTight);
    CHECK(std::abs(p.sigma(2, 3) - sum_at(a, {3, 15})) < kTight);
    const auto& lat = p.lattice();
    for (Divisor m1 : lat.elements()) {
        for (Divisor m2 : lat.elements()) {
            CHECK(std::abs(p.sigma(m1, m2) - p.sigma_trace(m1, m2)) < 1e-10);
            if (m1 % m2 == 0 || m2 % m1 == 0) {
                CHECK(p.sigma(m1, m2) == 0.0);
            }
        }
        CHECK(p.sigma(1, m1) == 0.0);
        CHECK(p.sigma(18, m1) == 0.0);
    }
}

TEST_CASE("chain modularity is exact for dense states") {
    for (std::uint64_t n : {12u, 36u, 60u, 120u}) {
        const SubsystemProbabilities p(divisors(static_cast<std::int64_t>(n)),
                                       random_density(n, n));
        for (Divisor m1 : p.lattice().elements()) {
            for (Divisor m2 : p.lattice().elements()) {
                if (m2 % m1 == 0) {
                    CHECK(p.sigma(m1, m2) == 0.0);
                    CHECK(p.sigma(m2, m1) == 0.0);
                }
            }
        }
    }
}

TEST_CASE("capacities on subsets of D(n)") {
    const auto p = rho18();
    const std::vector<Divisor> two_three{2, 3};
    CHECK(p.capacity_lower(two_three) == p.lower(6));
    CHECK(p.capacity_upper(two_three) == p.upper(6));
    CHECK(p.capacity_lower({}) == 0.0);
    CHECK(p.capacity_upper({}) == 0.0);
    for (Divisor m : p.lattice().elements()) {
        const std::vector<Divisor> single{m};
        CHECK(p.capacity_lower(single) == p.lower(m));
    }
    const std::vector<Divisor> bad{2, 4};
    CHECK(error_of([&] { (void)p.capacity_lower(bad); }) == ErrorCode::NotDivisor);

    const auto el = p.lattice().elements();
    std::vector<std::vector<Divisor>> subsets{{}};
    for (std::size_t i = 0; i < el.size(); ++i) {
        subsets.push_back({el[i]});
        for (std::size_t j = i + 1; j < el.size(); ++j) {
            subsets.push_back({el[i], el[j]});
            for (std::size_t k = j + 1; k < el.size(); ++k) {
                subsets.push_back({el[i], el[j], el[k]});
            }
        }
    }
    for (const auto& A : subsets) {
        for (const auto& B : subsets) {
            if (std::includes(B.begin(), B.end(), A.begin(), A.end())) {
                CHECK(p.capacity_lower(A) <= p.capacity_lower(B) + 1e-12);
            }
        }
    }
}

TEST_CASE("added value") {
    const auto p = rho18();
    const auto a = rho18_weights();
    CHECK(std::abs(p.added_value(2, 3) - sum_at(a, {3, 9, 15})) < kTight);
    CHECK(std::abs(p.added_value(2, 3) - p.lower_tilde(2) - sum_at(a, {3, 15})) < kTight);
    const auto& lat = p.lattice();
    const auto f = tabulate(lat, [&](Divisor m) { return p.lower(m); });
    for (Divisor m : lat.elements()) {
        for (Divisor k : lat.elements()) {
            if (k % m == 0) {
                CHECK(p.added_value(m, k) == 0.0);
            }
            CHECK(std::abs(p.added_value(m, k) - p.added_value(m, lat.meet(k, m)) -
                           modularity_defect(lat, f, m, k)) < 1e-10);
        }
    }
}

TEST_CASE("modularity classification") {
    const auto lat = divisors(18);
    const auto p = rho18();
    CHECK(classify(lat, tabulate(lat, [&](Divisor m) { return p.lower(m); })) ==
          Modularity::Supermodular);
    CHECK(classify(lat, tabulate(lat, [&](Divisor m) { return p.upper(m); })) ==
          Modularity::Submodular);
    CHECK(classify(lat, tabulate(lat, [](Divisor) { return 0.3; })) == Modularity::Modular);
    const auto mixed =
        tabulate(lat, [](Divisor m) { return m == 6 ? 1.0 : (m == 18 ? -1.0 : 0.0); });
    CHECK(classify(lat, mixed) == Modularity::Neither);
    CHECK(std::string(to_string(Modularity::Submodular)) == "submodular");

    LatticeFunction partial{{1, 0.0}, {2, 0.5}, {3, 0.5}};
    CHECK(error_of([&] { (void)modularity_defect(lat, partial, 2, 3); }) ==
          ErrorCode::MissingValue);

    const auto f = tabulate(lat, [&](Divisor m) { return p.lower(m); });
    for (Divisor m : lat.elements()) {
        CHECK(modularity_defect(lat, f, 1, m) == 0.0);
        CHECK(modularity_defect(lat, f, 18, m) == 0.0);
    }

    const auto prime = uniform(13);
    const auto& plat = prime.lattice();
    CHECK(classify(plat, tabulate(plat, [&](Divisor m) { return prime.lower(m); })) ==
          Modularity::Modular);
}

TEST_CASE("proposition checks pass on random states") {
    for (std::uint64_t n : {1u, 2u, 12u, 18u, 30u, 36u, 64u, 97u, 120u, 180u}) {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            const SubsystemProbabilities p(divisors(static_cast<std::int64_t>(n)),
                                           random_density(n, seed * 1000 + n));
            const auto checks = verify_propositions(p);
            for (const auto& [name, c] : checks) {
                INFO("n = " << n << ", check " << name << ", slack " << c.worst_slack);
                CHECK(c.pass);
            }
            for (Divisor m : p.lattice().elements()) {
                const Divisor nn = p.lattice().negation(p.lattice().negation(m));
                CHECK(p.upper(nn) == p.upper(m));
            }
        }
    }
    const auto p = rho18();
    CHECK(all_pass(verify_propositions(p)));
    CHECK(p.upper(6) == 1.0);
    CHECK(p.upper(18) == 1.0);
}

TEST_CASE("prime context has zero sigma everywhere") {
    const SubsystemProbabilities p(divisors(31), random_density(31, 5));
    for (Divisor m1 : p.lattice().elements()) {
        for (Divisor m2 : p.lattice().elements()) {
            CHECK(p.sigma(m1, m2) == 0.0);
        }
    }
}

TEST_CASE("a flipped sigma sign is caught") {
    const SubsystemProbabilities p(divisors(18), random_density(18, 3));
    VerifyOptions faulty;
    faulty.flip_sigma_sign = true;
    const auto checks = verify_propositions(p, faulty);
    CHECK_FALSE(all_pass(checks));
    CHECK_FALSE(checks.at("supermodularity").pass);
}

TEST_CASE("report rows obey the endpoint invariants") {
    const auto p = rho18();
    const auto report = make_report(p);
    CHECK(report.n == 18);
    REQUIRE(report.rows.size() == 6);
    CHECK(std::abs(report.rows.front().lower - report.rows.front().upper) < kTight);
    CHECK(std::abs(report.rows.back().lower - 1.0) < kTight);
    CHECK(std::abs(report.rows.back().upper - 1.0) < kTight);
    for (const auto& row : report.rows) {
        CHECK(row.lower >= 0.0);
        CHECK(row.lower <= row.upper);
        CHECK(row.upper <= 1.0);
        CHECK(std::abs(row.dont_know - (row.upper - row.lower)) < 1e-15);
    }
    REQUIRE(report.sigma.size() == 6);
    CHECK(std::abs(report.sigma[1][2] - p.sigma(2, 3)) < 1e-15);
    CHECK(std::abs(report.upper_defect[1][2] + p.sigma(9, 2)) < 1e-10);
    CHECK(all_pass(report.checks));
}
