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

#include "sublat/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <iterator>
#include <mutex>
#include <numeric>
#include <thread>
#include <vector>

#include "sublat/quantum.hpp"

namespace sublat {

namespace {

using Support = std::vector<std::uint64_t>;

Support intersect(const Support& a, const Support& b) {
    Support out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Support unite(const Support& a, const Support& b) {
    Support out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

/// (sum e)! / prod e!, the number of maximal chains of D(n).
std::uint64_t multinomial(const Factorization& f) {
    std::uint64_t result = 1;
    unsigned placed = 0;
    for (const auto& [p, e] : f.primes()) {
        for (unsigned i = 1; i <= e; ++i) {
            ++placed;
            result = result * placed / i;
        }
    }
    return result;
}

bool is_prime(std::uint64_t x) {
    if (x < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= x; ++d) {
        if (x % d == 0) {
            return false;
        }
    }
    return true;
}

} // namespace

CheckTable check_lattice_laws(const DivisorLattice& lat) {
    CheckTable checks;
    const Divisor n = lat.n();
    const auto elems = lat.elements();

    std::uint64_t brute_count = 0;
    for (std::uint64_t d = 1; d <= n; ++d) {
        brute_count += n % d == 0 ? 1 : 0;
    }
    checks["divisor_count"].record(brute_count == lat.size() &&
                                   lat.factorization().divisor_count() == lat.size() &&
                                   std::is_sorted(elems.begin(), elems.end()));

    for (Divisor k : elems) {
        const Divisor nk = lat.negation(k);
        const Divisor nnk = lat.negation(nk);

        checks["idempotence"].record(lat.meet(k, k) == k && lat.join(k, k) == k);

        auto& heyting = checks["heyting"];
        heyting.record(nnk % k == 0);
        heyting.record(std::gcd(k, nk) == 1);
        heyting.record(n % std::lcm(k, nk) == 0);

        Divisor brute_neg = 1;
        for (Divisor d : elems) {
            if (std::gcd(k, d) == 1) {
                brute_neg = std::max(brute_neg, d);
            }
        }
        checks["negation_maximal"].record(brute_neg == nk);
        checks["negation_is_implication"].record(lat.implication(k, 1) == nk);

        if (lat.is_hall(k)) {
            auto& boolean = checks["boolean_sublattice"];
            boolean.record(nnk == k);
            boolean.record(std::lcm(k, nk) == n);
            boolean.record(lat.is_hall(nk));
        }

        for (Divisor m : elems) {
            checks["commutativity"].record(lat.meet(k, m) == lat.meet(m, k) &&
                                           lat.join(k, m) == lat.join(m, k));
            checks["absorption"].record(lat.meet(k, lat.join(k, m)) == k &&
                                        lat.join(k, lat.meet(k, m)) == k);

            const Divisor imp = lat.implication(k, m);
            Divisor brute_imp = 1;
            for (Divisor d : elems) {
                if (m % std::gcd(k, d) == 0) {
                    brute_imp = std::max(brute_imp, d);
                }
            }
            auto& implication = checks["implication_maximal"];
            implication.record(imp == brute_imp);
            for (Divisor d : elems) {
                // Residuation: d <= (k -> m) iff d ^ k <= m.
                implication.record((imp % d == 0) == (m % std::gcd(d, k) == 0));
            }

            for (Divisor l : elems) {
                checks["associativity"].record(
                    lat.meet(k, lat.meet(m, l)) == lat.meet(lat.meet(k, m), l) &&
                    lat.join(k, lat.join(m, l)) == lat.join(lat.join(k, m), l));
                checks["distributivity"].record(
                    lat.meet(k, lat.join(m, l)) == lat.join(lat.meet(k, m), lat.meet(k, l)) &&
                    lat.join(k, lat.meet(m, l)) == lat.meet(lat.join(k, m), lat.join(k, l)));
            }
        }
    }

    const auto hall = lat.boolean_sublattice();
    auto& boolean = checks["boolean_sublattice"];
    boolean.record(hall.size() == (std::size_t{1} << lat.factorization().primes().size()));
    for (Divisor a : hall) {
        for (Divisor b : hall) {
            boolean.record(lat.is_hall(lat.meet(a, b)) && lat.is_hall(lat.join(a, b)));
        }
    }
    const bool squarefree = std::all_of(lat.factorization().primes().begin(),
                                        lat.factorization().primes().end(),
                                        [](const auto& pe) { return pe.second == 1; });
    if (squarefree) {
        boolean.record(hall.size() == lat.size());
    }

    const auto chains = lat.maximal_chains();
    auto& chain_check = checks["maximal_chains"];
    chain_check.record(chains.size() == multinomial(lat.factorization()));
    chain_check.record(std::is_sorted(chains.begin(), chains.end(), std::greater<>()));
    for (const auto& chain : chains) {
        chain_check.record(chain.size() == lat.factorization().total_exponent() + 1);
        chain_check.record(chain.front() == n && chain.back() == 1);
        for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
            chain_check.record(chain[i] % chain[i + 1] == 0 && is_prime(chain[i] / chain[i + 1]));
        }
    }
    return checks;
}

CheckTable check_projector_identities(const DivisorLattice& lat) {
    CheckTable checks;
    const Divisor n = lat.n();
    Support all(n);
    std::iota(all.begin(), all.end(), std::uint64_t{0});

    for (Divisor m : lat.elements()) {
        const Support pm = projector(lat, m).indices();
        const Support pneg = projector(lat, lat.negation(m)).indices();
        checks["projector_rank"].record(pm.size() == m);
        checks["projector_negation"].record(intersect(pm, pneg) == Support{0});

        const Support dm = projector_D(lat, m).indices();
        const Support ptneg = projector_tilde(lat, lat.negation(m)).indices();
        auto& dk = checks["dont_know_projector"];
        dk.record(intersect(dm, pm).empty());
        dk.record(intersect(dm, ptneg).empty() && intersect(pm, ptneg).empty());
        dk.record(unite(unite(dm, pm), ptneg) == all);

        std::vector<std::uint64_t> embedded;
        for (std::uint64_t r = 0; r < m; ++r) {
            embedded.push_back(embed_group(r, m, n));
        }
        const SubgroupView group(m, n);
        auto& sg = checks["subgroup_embedding"];
        sg.record(group.elements() == embedded && embedded == pm);
        for (std::uint64_t a : group.elements()) {
            for (std::uint64_t b : group.elements()) {
                sg.record(group.contains((a + b) % n));
            }
        }

        for (Divisor k : lat.elements()) {
            const Support pk = projector(lat, k).indices();
            checks["projector_meet"].record(intersect(pm, pk) ==
                                            projector(lat, lat.meet(m, k)).indices());
            if (k % m == 0) {
                checks["projector_inclusion"].record(std::includes(pk.begin(), pk.end(),
                                                                   pm.begin(), pm.end()));
            }

            const Support t = projector_T(lat, m, k).indices();
            const Support s = projector_S(lat, m, k).indices();
            const Support top = projector(lat, lat.join(m, k)).indices();
            auto& ts = checks["ts_partition"];
            ts.record(intersect(t, s).empty());
            ts.record(unite(t, s) == top);
            const auto expected = static_cast<std::int64_t>(lat.join(m, k)) -
                                  static_cast<std::int64_t>(m) - static_cast<std::int64_t>(k) +
                                  static_cast<std::int64_t>(lat.meet(m, k));
            checks["s_dimension"].record(static_cast<std::int64_t>(s.size()) == expected);
            if (k % m == 0 || m % k == 0) {
                checks["s_empty_on_chains"].record(s.empty());
            }
        }
    }
    return checks;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t n, std::uint64_t trial) {
    const auto mix = [](std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    return mix(mix(mix(seed) ^ n) ^ trial);
}

namespace {

struct ContextResult {
    CheckTable checks;
    std::uint64_t densities = 0;
    double min_sigma = 0.0;
    double max_identity_error = 0.0;
};

ContextResult run_context(std::uint64_t n, const SweepConfig& config) {
    ContextResult out;
    const DivisorLattice lat(n);
    if (config.lattice_laws) {
        merge_checks(out.checks, check_lattice_laws(lat));
    }
    if (config.projector_identities) {
        merge_checks(out.checks, check_projector_identities(lat));
    }
    for (std::uint64_t trial = 0; trial < config.trials; ++trial) {
        const SubsystemProbabilities p(lat, random_density(n, derive_seed(config.seed, n, trial)));
        merge_checks(out.checks, verify_propositions(p, config.verify));
        for (Divisor a : lat.elements()) {
            for (Divisor b : lat.elements()) {
                const double s = config.verify.flip_sigma_sign ? -p.sigma(a, b) : p.sigma(a, b);
                out.min_sigma = std::min(out.min_sigma, s);
                out.max_identity_error =
                    std::max(out.max_identity_error, std::abs(s - p.sigma_trace(a, b)));
            }
        }
        ++out.densities;
    }
    return out;
}

} // namespace

SweepSummary run_sweep(const SweepConfig& config) {
    SweepSummary summary;
    if (config.n_max < config.n_min) {
        return summary;
    }
    const std::uint64_t count = config.n_max - config.n_min + 1;
    std::vector<ContextResult> results(count);

    unsigned threads = config.threads != 0 ? config.threads : std::thread::hardware_concurrency();
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));

    // Largest n first: those contexts dominate the runtime.
    std::atomic<std::uint64_t> next{0};
    std::mutex failure_mutex;
    std::exception_ptr failure;
    const auto worker = [&] {
        try {
            for (std::uint64_t i = next++; i < count; i = next++) {
                const std::uint64_t slot = count - 1 - i;
                results[slot] = run_context(config.n_min + slot, config);
            }
        } catch (...) {
            const std::lock_guard lock(failure_mutex);
            if (!failure) {
                failure = std::current_exception();
            }
            next = count;
        }
    };
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) {
        pool.emplace_back(worker);
    }
    worker();
    pool.clear();
    if (failure) {
        std::rethrow_exception(failure);
    }

    for (const ContextResult& r : results) {
        merge_checks(summary.checks, r.checks);
        summary.densities += r.densities;
        summary.min_sigma = std::min(summary.min_sigma, r.min_sigma);
        summary.max_sigma_identity_error =
            std::max(summary.max_sigma_identity_error, r.max_identity_error);
    }
    summary.contexts = count;
    return summary;
}

} // namespace sublat
