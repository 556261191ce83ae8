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

#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

using sublat::cli::Format;

const std::map<std::string, Format> kFormats{
    {"json", Format::Json}, {"csv", Format::Csv}, {"table", Format::Table}};

void add_format(CLI::App* cmd, Format& target) {
    cmd->add_option("--format", target, "output format: json, csv or table")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
}

int emit(const sublat::cli::CommandResult& result) {
    std::cout << result.out;
    std::cerr << result.err;
    return result.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Subsystem lattices of Z(n): lattice structure, lower and upper "
                 "probabilities, sampling and Dempster-Shafer evidence"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "sublat 0.1.0");

    sublat::cli::LatticeOptions lattice;
    auto* lattice_cmd = app.add_subcommand("lattice", "divisor lattice D(n)");
    lattice_cmd->add_option("N", lattice.n, "order of Z(n)")->required();
    add_format(lattice_cmd, lattice.format);

    sublat::cli::ProbabilitiesOptions probs;
    auto* probs_cmd =
        app.add_subcommand("probabilities", "lower/upper probabilities for a density matrix");
    probs_cmd->add_option("--n", probs.n, "order of Z(n)")->required();
    probs_cmd->add_option("--rho", probs.rho, "density matrix JSON")->required();
    add_format(probs_cmd, probs.format);

    sublat::cli::SampleOptions sample;
    std::optional<std::uint64_t> sample_seed;
    std::optional<sublat::Divisor> sample_k;
    auto* sample_cmd = app.add_subcommand("sample", "simulate position measurements");
    sample_cmd->add_option("--n", sample.n, "order of Z(n)")->required();
    sample_cmd->add_option("--rho", sample.rho, "density matrix JSON")->required();
    sample_cmd->add_option("--shots", sample.shots, "number of measurements")
        ->capture_default_str();
    sample_cmd->add_option("--seed", sample_seed, "RNG seed (default $SUBLAT_SEED or 0)");
    sample_cmd->add_option("--m", sample.m, "divisor to estimate")->required();
    sample_cmd->add_option("--k", sample_k, "intermediate divisor, m | k | not not m");
    add_format(sample_cmd, sample.format);

    sublat::cli::DsOptions ds;
    auto* ds_cmd = app.add_subcommand("ds", "Dempster-Shafer lower/upper probabilities");
    ds_cmd->add_option("--evidence", ds.evidence, "evidence JSON")->required();
    ds_cmd->add_option("--set", ds.sets, "query set, e.g. 60..69 or 1,4,7 (repeatable)")
        ->required();
    add_format(ds_cmd, ds.format);

    sublat::cli::CheckOptions check;
    std::optional<std::uint64_t> check_seed;
    auto* check_cmd = app.add_subcommand("check", "randomized verification sweep");
    check_cmd->add_option("--n-max", check.n_max, "largest n")->capture_default_str();
    check_cmd->add_option("--trials", check.trials, "random densities per n")
        ->capture_default_str();
    check_cmd->add_option("--seed", check_seed, "RNG seed (default $SUBLAT_SEED or 0)");
    check_cmd->add_option("--threads", check.threads, "worker threads, 0 = all cores")
        ->capture_default_str();
    add_format(check_cmd, check.format);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : sublat::cli::kExitInvalid;
    }

    if (*lattice_cmd) {
        return emit(sublat::cli::cmd_lattice(lattice));
    }
    if (*probs_cmd) {
        return emit(sublat::cli::cmd_probabilities(probs));
    }
    if (*sample_cmd) {
        sample.seed = sample_seed;
        sample.k = sample_k;
        return emit(sublat::cli::cmd_sample(sample));
    }
    if (*ds_cmd) {
        return emit(sublat::cli::cmd_ds(ds));
    }
    check.seed = check_seed;
    return emit(sublat::cli::cmd_check(check));
}
