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

#include "commands.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "json.hpp"
#include "sublat/dempster.hpp"
#include "sublat/error.hpp"
#include "sublat/io.hpp"
#include "sublat/lattice.hpp"
#include "sublat/quantum.hpp"
#include "sublat/sampling.hpp"
#include "sublat/verify.hpp"

namespace sublat::cli {

using nlohmann::json;

namespace {

std::string fixed(double x, int digits = 10) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, x == 0.0 ? 0.0 : x);
    if (std::string(buf).find_first_not_of("-0.") == std::string::npos) {
        std::snprintf(buf, sizeof(buf), "%.*f", digits, 0.0);
    }
    return buf;
}

std::string general(double x, int precision = 3) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", precision, x == 0.0 ? 0.0 : x);
    return buf;
}

std::string pad(const std::string& s, std::size_t width) {
    return s.size() + 1 >= width ? " " + s : std::string(width - s.size(), ' ') + s;
}

template <typename F>
CommandResult run_guarded(F&& body) {
    try {
        return body();
    } catch (const Error& e) {
        return {kExitInvalid, "", std::string("error: ") + e.what() + "\n"};
    } catch (const std::exception& e) {
        return {kExitInvalid, "", std::string("error: ") + e.what() + "\n"};
    }
}

std::string join(const std::vector<Divisor>& values, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        out += (i ? sep : "") + std::to_string(values[i]);
    }
    return out;
}

std::string checks_table(const CheckTable& checks) {
    std::ostringstream out;
    std::size_t width = 0;
    for (const auto& entry : checks) {
        width = std::max(width, entry.first.size());
    }
    for (const auto& [name, c] : checks) {
        out << "  " << name << std::string(width - name.size(), ' ') << "  "
            << (c.pass ? "pass" : "FAIL") << "  worst slack " << general(c.worst_slack)
            << "  (" << c.samples << " samples)\n";
    }
    return out.str();
}

} // namespace

std::optional<Format> parse_format(const std::string& text) {
    if (text == "json") {
        return Format::Json;
    }
    if (text == "csv") {
        return Format::Csv;
    }
    if (text == "table") {
        return Format::Table;
    }
    return std::nullopt;
}

std::uint64_t resolve_seed(std::optional<std::uint64_t> flag) {
    if (flag) {
        return *flag;
    }
    const char* env = std::getenv("SUBLAT_SEED");
    if (env == nullptr || *env == '\0') {
        return 0;
    }
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end == nullptr || *end != '\0' || *env == '-') {
        throw Error(ErrorCode::InvalidArgument,
                    std::string("SUBLAT_SEED is not an unsigned integer: ") + env);
    }
    return value;
}

CommandResult cmd_lattice(const LatticeOptions& options) {
    return run_guarded([&] {
        const DivisorLattice lat = divisors(options.n);
        const auto chains = lat.maximal_chains();
        const auto hall = lat.boolean_sublattice();
        const auto edges = lat.covering_edges();

        CommandResult result;
        if (options.format == Format::Json) {
            json doc;
            doc["n"] = lat.n();
            json fact = json::object();
            for (const auto& [p, e] : lat.factorization().primes()) {
                fact[std::to_string(p)] = e;
            }
            doc["factorization"] = fact;
            doc["divisors"] = std::vector<Divisor>(lat.elements().begin(), lat.elements().end());
            doc["covering_edges"] = edges;
            json rows = json::array();
            for (Divisor m : lat.elements()) {
                rows.push_back({{"m", m},
                                {"negation", lat.negation(m)},
                                {"double_negation", lat.negation(lat.negation(m))},
                                {"hall", lat.is_hall(m)}});
            }
            doc["negations"] = rows;
            doc["boolean_sublattice"] = hall;
            doc["maximal_chains"] = chains;
            result.out = doc.dump(2) + "\n";
        } else if (options.format == Format::Csv) {
            result.out = "m,negation,double_negation,hall,covers\n";
            for (Divisor m : lat.elements()) {
                std::vector<Divisor> up;
                for (const auto& [lo, hi] : edges) {
                    if (lo == m) {
                        up.push_back(hi);
                    }
                }
                result.out += std::to_string(m) + "," + std::to_string(lat.negation(m)) + "," +
                              std::to_string(lat.negation(lat.negation(m))) + "," +
                              (lat.is_hall(m) ? "1" : "0") + "," + join(up, ";") + "\n";
            }
        } else {
            std::ostringstream out;
            out << "n = " << lat.n();
            if (!lat.factorization().primes().empty()) {
                out << " =";
                bool first = true;
                for (const auto& [p, e] : lat.factorization().primes()) {
                    out << (first ? " " : " * ") << p << "^" << e;
                    first = false;
                }
            }
            out << "\ndivisors (" << lat.size() << "): "
                << join({lat.elements().begin(), lat.elements().end()}, " ") << "\n\n";
            out << pad("m", 8) << pad("not m", 10) << pad("not not m", 12) << pad("hall", 7)
                << "\n";
            for (Divisor m : lat.elements()) {
                out << pad(std::to_string(m), 8) << pad(std::to_string(lat.negation(m)), 10)
                    << pad(std::to_string(lat.negation(lat.negation(m))), 12)
                    << pad(lat.is_hall(m) ? "yes" : "no", 7) << "\n";
            }
            out << "\ncovering edges:";
            for (const auto& [lo, hi] : edges) {
                out << " " << lo << "-" << hi;
            }
            out << "\nboolean sublattice D^B(n): " << join(hall, " ") << "\n";
            out << "maximal chains (" << chains.size() << "):\n";
            for (const auto& chain : chains) {
                out << "  " << join(chain, " > ") << "\n";
            }
            result.out = out.str();
        }
        return result;
    });
}

CommandResult cmd_probabilities(const ProbabilitiesOptions& options) {
    return run_guarded([&] {
        const DivisorLattice lat = divisors(options.n);
        DensityMatrix rho = io::density_from_json(io::read_file(options.rho), lat.n());
        const SubsystemProbabilities probabilities(lat, std::move(rho));
        const ProbabilityReport report = make_report(probabilities, options.verify);

        CommandResult result;
        result.exit_code = all_pass(report.checks) ? kExitOk : kExitCheckFailed;
        if (options.format == Format::Json) {
            result.out = io::report_to_json(report) + "\n";
        } else if (options.format == Format::Csv) {
            result.out = io::report_to_csv(report);
        } else {
            std::ostringstream out;
            out << "n = " << report.n << "\n\n";
            out << pad("m", 6) << pad("l", 14) << pad("l~", 14) << pad("u", 14) << pad("u~", 14)
                << pad("d", 14) << "\n";
            for (const DivisorRow& r : report.rows) {
                out << pad(std::to_string(r.m), 6) << pad(fixed(r.lower), 14)
                    << pad(fixed(r.lower_tilde), 14) << pad(fixed(r.upper), 14)
                    << pad(fixed(r.upper_tilde), 14) << pad(fixed(r.dont_know), 14) << "\n";
            }
            out << "\nsigma(m1, m2):\n" << pad("", 6);
            for (const DivisorRow& r : report.rows) {
                out << pad(std::to_string(r.m), 12);
            }
            out << "\n";
            for (std::size_t i = 0; i < report.rows.size(); ++i) {
                out << pad(std::to_string(report.rows[i].m), 6);
                for (double s : report.sigma[i]) {
                    out << pad(fixed(s, 6), 12);
                }
                out << "\n";
            }
            out << "\nchecks:\n" << checks_table(report.checks);
            result.out = out.str();
        }
        if (result.exit_code != kExitOk) {
            result.err = "one or more proposition checks failed\n";
        }
        return result;
    });
}

CommandResult cmd_sample(const SampleOptions& options) {
    return run_guarded([&] {
        const DivisorLattice lat = divisors(options.n);
        lat.require(options.m);
        const std::uint64_t seed = resolve_seed(options.seed);
        DensityMatrix rho = io::density_from_json(io::read_file(options.rho), lat.n());
        const MeasurementRecord record = simulate(rho, options.shots, seed);
        const SubsystemProbabilities exact(lat, std::move(rho));

        const Divisor m = options.m;
        const double l_hat = estimate_lower(record, lat, m);
        const double u_hat = estimate_upper(record, lat, m);
        const double d_hat = estimate_dont_know(record, lat, m);
        std::optional<double> q_hat;
        if (options.k) {
            q_hat = estimate_intermediate(record, lat, m, *options.k);
        }
        const double l = exact.lower(m);
        const double u = exact.upper(m);
        const double l_band = binomial_band(l, record.total);
        const double u_band = binomial_band(u, record.total);

        CommandResult result;
        if (options.format == Format::Json) {
            json doc;
            doc["record"] = json::parse(io::record_to_json(record));
            doc["shots"] = record.total;
            doc["m"] = m;
            doc["estimates"] = {{"l", l_hat}, {"u", u_hat}, {"d", d_hat}};
            if (q_hat) {
                doc["estimates"]["k"] = *options.k;
                doc["estimates"]["q_k"] = *q_hat;
            }
            doc["exact"] = {{"l", l}, {"u", u}, {"d", u - l}};
            doc["band_5sigma"] = {{"l", l_band}, {"u", u_band}};
            doc["within_band"] = {{"l", std::abs(l_hat - l) <= l_band},
                                  {"u", std::abs(u_hat - u) <= u_band}};
            result.out = doc.dump(2) + "\n";
        } else if (options.format == Format::Csv) {
            result.out = "quantity,estimate,exact,band_5sigma\n";
            result.out += "l," + io::format_double(l_hat) + "," + io::format_double(l) + "," +
                          io::format_double(l_band) + "\n";
            result.out += "u," + io::format_double(u_hat) + "," + io::format_double(u) + "," +
                          io::format_double(u_band) + "\n";
            result.out += "d," + io::format_double(d_hat) + "," + io::format_double(u - l) + ",\n";
            if (q_hat) {
                result.out += "q_" + std::to_string(*options.k) + "," + io::format_double(*q_hat) +
                              ",,\n";
            }
        } else {
            std::ostringstream out;
            out << "n = " << lat.n() << ", m = " << m << ", shots = " << record.total
                << ", seed = " << record.seed << " (" << record.algorithm << ")\n\n";
            out << pad("", 10) << pad("estimate", 16) << pad("exact", 16) << pad("5 sigma", 16)
                << "\n";
            out << pad("l(m)", 10) << pad(fixed(l_hat), 16) << pad(fixed(l), 16)
                << pad(fixed(l_band, 5), 16) << "\n";
            out << pad("u(m)", 10) << pad(fixed(u_hat), 16) << pad(fixed(u), 16)
                << pad(fixed(u_band, 5), 16) << "\n";
            out << pad("d(m)", 10) << pad(fixed(d_hat), 16) << pad(fixed(u - l), 16) << "\n";
            if (q_hat) {
                out << pad("q_" + std::to_string(*options.k), 10) << pad(fixed(*q_hat), 16)
                    << "\n";
            }
            result.out = out.str();
        }
        return result;
    });
}

CommandResult cmd_ds(const DsOptions& options) {
    return run_guarded([&] {
        const ds::Evidence evidence = io::evidence_from_json(io::read_file(options.evidence));
        struct Row {
            std::string spec;
            ds::Rational l;
            ds::Rational u;
            ds::Categories c;
        };
        std::vector<Row> rows;
        for (const std::string& spec : options.sets) {
            const ds::LabelSet query = io::parse_label_set(spec, evidence.frame());
            rows.push_back({spec, ds::belief(evidence, query), ds::plausibility(evidence, query),
                            ds::categorize(evidence, query)});
        }

        CommandResult result;
        if (options.format == Format::Json) {
            json doc;
            doc["items"] = evidence.size();
            json queries = json::array();
            for (const Row& r : rows) {
                queries.push_back({{"set", r.spec},
                                   {"l", io::format_rational(r.l)},
                                   {"u", io::format_rational(r.u)},
                                   {"n1", r.c.inside},
                                   {"n2", r.c.dont_know},
                                   {"n3", r.c.outside}});
            }
            doc["queries"] = queries;
            result.out = doc.dump(2) + "\n";
        } else if (options.format == Format::Csv) {
            result.out = "set,l,u,n1,n2,n3\n";
            for (const Row& r : rows) {
                result.out += "\"" + r.spec + "\"," + io::format_rational(r.l) + "," +
                              io::format_rational(r.u) + "," + std::to_string(r.c.inside) + "," +
                              std::to_string(r.c.dont_know) + "," + std::to_string(r.c.outside) +
                              "\n";
            }
        } else {
            std::ostringstream out;
            out << evidence.size() << " evidence sets over a frame of " << evidence.frame().size()
                << " labels\n\n";
            out << pad("set", 16) << pad("l", 8) << pad("u", 8) << pad("n1", 5) << pad("n2", 5)
                << pad("n3", 5) << "\n";
            for (const Row& r : rows) {
                out << pad(r.spec, 16) << pad(io::format_rational(r.l), 8)
                    << pad(io::format_rational(r.u), 8) << pad(std::to_string(r.c.inside), 5)
                    << pad(std::to_string(r.c.dont_know), 5) << pad(std::to_string(r.c.outside), 5)
                    << "\n";
            }
            result.out = out.str();
        }
        return result;
    });
}

CommandResult cmd_check(const CheckOptions& options) {
    return run_guarded([&] {
        if (options.n_max < 2) {
            throw Error(ErrorCode::InvalidArgument, "--n-max must be >= 2");
        }
        if (options.trials < 1) {
            throw Error(ErrorCode::InvalidArgument, "--trials must be >= 1");
        }
        SweepConfig config;
        config.n_min = 1;
        config.n_max = options.n_max;
        config.trials = options.trials;
        config.seed = resolve_seed(options.seed);
        config.threads = options.threads;
        config.verify = options.verify;
        const SweepSummary summary = run_sweep(config);

        CommandResult result;
        result.exit_code = summary.pass() ? kExitOk : kExitCheckFailed;
        if (options.format == Format::Json) {
            json doc;
            doc["n_max"] = options.n_max;
            doc["trials"] = options.trials;
            doc["seed"] = config.seed;
            doc["contexts"] = summary.contexts;
            doc["densities"] = summary.densities;
            doc["pass"] = summary.pass();
            doc["min_sigma"] = summary.min_sigma;
            doc["max_sigma_identity_error"] = summary.max_sigma_identity_error;
            doc["checks"] = json::parse(io::checks_to_json(summary.checks));
            result.out = doc.dump(2) + "\n";
        } else if (options.format == Format::Csv) {
            result.out = "check,pass,worst_slack,samples\n";
            for (const auto& [name, c] : summary.checks) {
                result.out += name + "," + (c.pass ? "1" : "0") + "," +
                              io::format_double(c.worst_slack) + "," + std::to_string(c.samples) +
                              "\n";
            }
        } else {
            std::ostringstream out;
            out << "n = 1.." << options.n_max << ", " << options.trials
                << " random densities each, seed " << config.seed << "\n";
            out << summary.contexts << " contexts, " << summary.densities << " densities\n";
            out << "min sigma " << general(summary.min_sigma) << ", max |sigma - Tr[rho S]| "
                << general(summary.max_sigma_identity_error) << "\n\n";
            out << checks_table(summary.checks);
            out << "\n" << (summary.pass() ? "PASS" : "FAIL") << "\n";
            result.out = out.str();
        }
        if (result.exit_code != kExitOk) {
            result.err = "one or more checks failed\n";
        }
        return result;
    });
}

} // namespace sublat::cli
