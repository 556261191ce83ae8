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

#include <set>

#include "doctest.h"
#include "sublat/verify.hpp"

using namespace sublat;

TEST_CASE("lattice laws and projector identities hold for small n") {
    for (std::uint64_t n = 1; n <= 80; ++n) {
        const auto lat = divisors(static_cast<std::int64_t>(n));
        for (const auto& table : {check_lattice_laws(lat), check_projector_identities(lat)}) {
            for (const auto& [name, c] : table) {
                INFO("n = " << n << ", " << name);
                CHECK(c.pass);
                CHECK(c.samples > 0);
            }
        }
    }
    const auto laws = check_lattice_laws(divisors(18));
    for (const char* key : {"distributivity", "heyting", "negation_is_implication",
                            "boolean_sublattice", "maximal_chains", "associativity"}) {
        CHECK(laws.count(key) == 1);
    }
    const auto ids = check_projector_identities(divisors(18));
    for (const char* key :
         {"projector_meet", "projector_negation", "s_dimension", "ts_partition"}) {
        CHECK(ids.count(key) == 1);
    }
}

TEST_CASE("derived seeds are distinct") {
    std::set<std::uint64_t> seen;
    for (std::uint64_t n = 1; n <= 50; ++n) {
        for (std::uint64_t t = 0; t < 20; ++t) {
            seen.insert(derive_seed(7, n, t));
        }
    }
    CHECK(seen.size() == 1000);
    CHECK(derive_seed(7, 3, 4) == derive_seed(7, 3, 4));
    CHECK(derive_seed(7, 3, 4) != derive_seed(8, 3, 4));
}

TEST_CASE("sweep summary does not depend on the thread count") {
    SweepConfig config;
    config.n_min = 1;
    config.n_max = 40;
    config.trials = 4;
    config.seed = 5;
    config.threads = 1;
    const auto serial = run_sweep(config);
    config.threads = 4;
    const auto parallel = run_sweep(config);
    CHECK(serial.pass());
    CHECK(serial.checks == parallel.checks);
    CHECK(serial.contexts == 40);
    CHECK(serial.densities == 160);
    CHECK(serial.min_sigma == parallel.min_sigma);
    CHECK(serial.min_sigma >= -1e-10);
    CHECK(serial.max_sigma_identity_error <= 1e-10);
}

TEST_CASE("sweep reports injected faults") {
    SweepConfig config;
    config.n_max = 20;
    config.trials = 2;
    config.verify.flip_sigma_sign = true;
    CHECK_FALSE(run_sweep(config).pass());
}
