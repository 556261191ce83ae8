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
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "sublat/measures.hpp"

namespace sublat::cli {

enum class Format { Json, Csv, Table };

[[nodiscard]] std::optional<Format> parse_format(const std::string& text);

/// Exit codes: 0 success, 1 usage or validation error, 2 a mathematical
/// check failed. `out` goes to stdout, `err` to stderr.
struct CommandResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitCheckFailed = 2;

/// --seed if given, else $SUBLAT_SEED, else 0. Throws on a malformed variable.
[[nodiscard]] std::uint64_t resolve_seed(std::optional<std::uint64_t> flag);

struct LatticeOptions {
    std::int64_t n = 1;
    Format format = Format::Table;
};

struct ProbabilitiesOptions {
    std::int64_t n = 1;
    std::filesystem::path rho;
    Format format = Format::Table;
    VerifyOptions verify;
};

struct SampleOptions {
    std::int64_t n = 1;
    std::filesystem::path rho;
    std::uint64_t shots = 100000;
    std::optional<std::uint64_t> seed;
    Divisor m = 1;
    std::optional<Divisor> k;
    Format format = Format::Table;
};

struct DsOptions {
    std::filesystem::path evidence;
    std::vector<std::string> sets;
    Format format = Format::Table;
};

struct CheckOptions {
    std::uint64_t n_max = 60;
    std::uint64_t trials = 20;
    std::optional<std::uint64_t> seed;
    unsigned threads = 0;
    Format format = Format::Table;
    /// Not reachable from the command line; tests use it to force failures.
    VerifyOptions verify;
};

[[nodiscard]] CommandResult cmd_lattice(const LatticeOptions& options);
[[nodiscard]] CommandResult cmd_probabilities(const ProbabilitiesOptions& options);
[[nodiscard]] CommandResult cmd_sample(const SampleOptions& options);
[[nodiscard]] CommandResult cmd_ds(const DsOptions& options);
[[nodiscard]] CommandResult cmd_check(const CheckOptions& options);

} // namespace sublat::cli
