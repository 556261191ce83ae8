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

#include "sublat/measures.hpp"

#include <numeric>
#include <string>

#include "sublat/error.hpp"

namespace sublat {

SubsystemProbabilities::SubsystemProbabilities(DivisorLattice lattice, DensityMatrix rho)
    : lattice_(std::move(lattice)), rho_(std::move(rho)) {
    if (rho_.dim() != lattice_.n()) {
        throw Error(ErrorCode::DimensionMismatch,
                    "density of dimension " + std::to_string(rho_.dim()) + " for n = " +
                        std::to_string(lattice_.n()));
    }
    lower_.reserve(lattice_.size());
    for (Divisor m : lattice_.elements()) {
        lower_.push_back(trace_against(rho_, projector(lattice_, m)));
    }
}

double SubsystemProbabilities::lower(Divisor m) const { return lower_[lattice_.index_of(m)]; }

double SubsystemProbabilities::lower_tilde(Divisor m) const { return lower(m) - lower_.front(); }

double SubsystemProbabilities::upper(Divisor m) const {
    return (1.0 - lower(lattice_.negation(m))) + lower_.front();
}

double SubsystemProbabilities::upper_tilde(Divisor m) const {
    return 1.0 - lower(lattice_.negation(m));
}

double SubsystemProbabilities::dont_know(Divisor m) const { return upper(m) - lower(m); }

double SubsystemProbabilities::dont_know_trace(Divisor m) const {
    return trace_against(rho_, projector_D(lattice_, m));
}

double SubsystemProbabilities::negbar_lower(Divisor m) const {
    return lower_tilde(lattice_.negation(m));
}

double SubsystemProbabilities::negbar_upper(Divisor m) const {
    return 1.0 - lower(lattice_.negation(lattice_.negation(m)));
}

double SubsystemProbabilities::sigma(Divisor m1, Divisor m2) const {
    const Divisor top = lattice_.join(m1, m2);
    const Divisor bottom = lattice_.meet(m1, m2);
    return (lower(top) + lower(bottom)) - (lower(m1) + lower(m2));
}

double SubsystemProbabilities::sigma_trace(Divisor m1, Divisor m2) const {
    return trace_against(rho_, projector_S(lattice_, m1, m2));
}

double SubsystemProbabilities::upper_defect(Divisor m1, Divisor m2) const {
    const Divisor top = lattice_.join(m1, m2);
    const Divisor bottom = lattice_.meet(m1, m2);
    return (upper(top) + upper(bottom)) - (upper(m1) + upper(m2));
}

Divisor SubsystemProbabilities::lcm_of(std::span<const Divisor> subset) const {
    Divisor acc = 1;
    for (Divisor m : subset) {
        acc = lattice_.join(acc, m);
    }
    return acc;
}

double SubsystemProbabilities::capacity_lower(std::span<const Divisor> subset) const {
    const Divisor top = lcm_of(subset);
    return subset.empty() ? 0.0 : lower(top);
}

double SubsystemProbabilities::capacity_upper(std::span<const Divisor> subset) const {
    const Divisor top = lcm_of(subset);
    return subset.empty() ? 0.0 : upper(top);
}

double SubsystemProbabilities::added_value(Divisor m, Divisor k) const {
    return lower(lattice_.join(m, k)) - lower(k);
}

LatticeFunction tabulate(const DivisorLattice& lattice, const std::function<double(Divisor)>& f) {
    LatticeFunction out;
    for (Divisor m : lattice.elements()) {
        out.emplace(m, f(m));
    }
    return out;
}

namespace {

double value_at(const LatticeFunction& f, Divisor m) {
    auto it = f.find(m);
    if (it == f.end()) {
        throw Error(ErrorCode::MissingValue, "no function value at " + std::to_string(m));
    }
    return it->second;
}

} // namespace

double modularity_defect(const DivisorLattice& lattice, const LatticeFunction& f, Divisor m1,
                         Divisor m2) {
    const Divisor top = lattice.join(m1, m2);
    const Divisor bottom = lattice.meet(m1, m2);
    return (value_at(f, top) + value_at(f, bottom)) - (value_at(f, m1) + value_at(f, m2));
}

const char* to_string(Modularity m) noexcept {
    switch (m) {
    case Modularity::Supermodular: return "supermodular";
    case Modularity::Modular: return "modular";
    case Modularity::Submodular: return "submodular";
    case Modularity::Neither: return "neither";
    }
    return "?";
}

Modularity classify(const DivisorLattice& lattice, const LatticeFunction& f, double tolerance) {
    bool super = true;
    bool sub = true;
    for (Divisor m1 : lattice.elements()) {
        for (Divisor m2 : lattice.elements()) {
            const double defect = modularity_defect(lattice, f, m1, m2);
            super = super && defect >= -tolerance;
            sub = sub && defect <= tolerance;
        }
    }
    if (super && sub) {
        return Modularity::Modular;
    }
    if (super) {
        return Modularity::Supermodular;
    }
    return sub ? Modularity::Submodular : Modularity::Neither;
}

CheckTable verify_propositions(const SubsystemProbabilities& p, const VerifyOptions& options) {
    const DivisorLattice& lat = p.lattice();
    const double tol = options.tolerance;
    const Divisor n = lat.n();
    const auto sigma = [&](Divisor a, Divisor b) {
        const double s = p.sigma(a, b);
        return options.flip_sigma_sign ? -s : s;
    };
    const auto neg = [&](Divisor m) { return lat.negation(m); };

    CheckTable checks;
    auto& endpoints = checks["endpoints"];
    endpoints.record_eq(p.lower(1), p.upper(1), tol);
    endpoints.record_eq(p.lower(n), 1.0, tol);
    endpoints.record_eq(p.upper(n), 1.0, tol);

    for (Divisor m : lat.elements()) {
        const Divisor nm = neg(m);
        const Divisor nnm = neg(nm);

        auto& ordering = checks["ordering"];
        ordering.record_le(0.0, p.lower(m), tol);
        ordering.record_le(p.lower(m), p.upper(m), tol);
        ordering.record_le(p.upper(m), 1.0, tol);

        auto& bound = checks["negation_bound"];
        bound.record_le(p.lower(m) + p.lower_tilde(nm), p.lower(nnm) + p.lower_tilde(nm), tol);
        bound.record_le(p.lower(nnm) + p.lower_tilde(nm), 1.0, tol);

        auto& sandwich = checks["complement_sandwich"];
        sandwich.record_le(p.lower(m) + p.negbar_lower(m), 1.0, tol);
        sandwich.record_le(1.0, p.upper(m) + p.negbar_upper(m), tol);

        auto& dn = checks["double_negation_upper"];
        dn.record_eq(p.upper(m), p.upper(nnm), tol);
        // Expanding u gives u(m) - u(not m) = l(not not m) - l(not m).
        dn.record_eq(p.upper(m) - p.upper(nm), p.lower(nnm) - p.lower(nm), tol);

        auto& intermediate = checks["intermediate_sandwich"];
        for (Divisor k : lat.elements()) {
            if (k % m == 0 && nnm % k == 0) {
                intermediate.record_le(p.lower(m), p.lower(k), tol);
                intermediate.record_le(p.lower(k), p.upper(m), tol);
            }
        }

        if (nm == 1) {
            checks["full_support_upper"].record_eq(p.upper(m), 1.0, tol);
        }

        auto& dk = checks["dont_know_identity"];
        dk.record_eq(p.dont_know(m), p.dont_know_trace(m), tol);
        dk.record_le(0.0, p.dont_know(m), tol);
    }

    for (Divisor m1 : lat.elements()) {
        for (Divisor m2 : lat.elements()) {
            if (m2 % m1 == 0) {
                checks["lower_monotone"].record_le(p.lower(m1), p.lower(m2), tol);
                checks["upper_monotone"].record_le(p.upper(m1), p.upper(m2), tol);
                auto& chain = checks["chain_modularity"];
                chain.record_eq(sigma(m1, m2), 0.0, 0.0);
                chain.record_eq(p.sigma_trace(m1, m2), 0.0, 0.0);
            }
            const double s = sigma(m1, m2);
            checks["supermodularity"].record_le(0.0, s, tol);
            checks["sigma_identity"].record_eq(s, p.sigma_trace(m1, m2), tol);

            const double ud = p.upper_defect(m1, m2);
            checks["upper_defect_identity"].record_eq(ud, -sigma(neg(m1), neg(m2)), tol);
            checks["submodularity_upper"].record_le(ud, 0.0, tol);

            const double added = p.added_value(m1, m2) - p.added_value(m1, lat.meet(m1, m2));
            checks["added_value_identity"].record_eq(added, s, tol);
        }
    }
    return checks;
}

ProbabilityReport make_report(const SubsystemProbabilities& p, const VerifyOptions& options) {
    const DivisorLattice& lat = p.lattice();
    ProbabilityReport report;
    report.n = lat.n();
    for (Divisor m : lat.elements()) {
        report.rows.push_back({m, clamp_probability(p.lower(m)),
                               clamp_probability(p.lower_tilde(m)),
                               clamp_probability(p.upper(m)), clamp_probability(p.upper_tilde(m)),
                               clamp_probability(p.dont_know(m))});
    }
    const std::size_t size = lat.size();
    report.sigma.assign(size, std::vector<double>(size, 0.0));
    report.upper_defect.assign(size, std::vector<double>(size, 0.0));
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) {
            const Divisor a = lat.elements()[i];
            const Divisor b = lat.elements()[j];
            report.sigma[i][j] = p.sigma(a, b);
            report.upper_defect[i][j] = p.upper_defect(a, b);
        }
    }
    report.checks = verify_propositions(p, options);
    return report;
}

} // namespace sublat
