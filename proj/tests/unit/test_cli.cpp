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
#include <cstdlib>
#include <fstream>
#include <string>

#include "commands.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "json.hpp"
#include "sublat/io.hpp"

using namespace sublat;
using namespace sublat::cli;
using nlohmann::json;
using sublat::testing::data_path;

namespace {

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
    const auto dir = std::filesystem::temp_directory_path() / "sublat-cli-tests";
    std::filesystem::create_directories(dir);
    const auto path = dir / name;
    std::ofstream(path) << text;
    return path;
}

json parse(const CommandResult& r) {
    REQUIRE(r.exit_code == kExitOk);
    return json::parse(r.out);
}

class ScopedEnv {
public:
    ScopedEnv(const char* name, const char* value) : name_(name) {
        ::setenv(name, value, 1);
    }
    ~ScopedEnv() { ::unsetenv(name_); }
    ScopedEnv(const ScopedEnv&) = delete;
    ScopedEnv& operator=(const ScopedEnv&) = delete;

private:
    const char* name_;
};

} // namespace

TEST_CASE("formats") {
    CHECK(parse_format("json") == Format::Json);
    CHECK(parse_format("csv") == Format::Csv);
    CHECK(parse_format("table") == Format::Table);
    CHECK_FALSE(parse_format("xml").has_value());
}

TEST_CASE("lattice command") {
    LatticeOptions o;
    o.n = 18;
    o.format = Format::Json;
    const auto doc = parse(cmd_lattice(o));
    CHECK(doc["divisors"] == json::array({1, 2, 3, 6, 9, 18}));
    CHECK(doc["maximal_chains"].size() == 3);
    CHECK(doc["boolean_sublattice"] == json::array({1, 2, 9, 18}));
    CHECK(doc["covering_edges"].size() == 7);
    CHECK(doc["negations"][1]["negation"] == 9);
    CHECK(doc["negations"][2]["double_negation"] == 9);
    CHECK(cmd_lattice(o).out == cmd_lattice(o).out);

    o.n = 1;
    const auto one = parse(cmd_lattice(o));
    CHECK(one["divisors"] == json::array({1}));
    CHECK(one["covering_edges"].empty());

    o.n = 12;
    const auto twelve = parse(cmd_lattice(o));
    CHECK(twelve["divisors"].size() == 6);
    CHECK(twelve["maximal_chains"].size() == 3);

    o.format = Format::Table;
    o.n = 18;
    CHECK(cmd_lattice(o).out.find("maximal chains (3)") != std::string::npos);
    o.format = Format::Csv;
    CHECK(cmd_lattice(o).out.rfind("m,negation,double_negation,hall,covers\n", 0) == 0);

    o.n = 0;
    const auto bad = cmd_lattice(o);
    CHECK(bad.exit_code == kExitInvalid);
    CHECK_FALSE(bad.err.empty());
    CHECK(bad.out.empty());
}

TEST_CASE("probabilities command") {
    ProbabilitiesOptions o;
    o.n = 18;
    o.rho = data_path("rho18.json");
    o.format = Format::Json;
    const auto result = cmd_probabilities(o);
    CHECK(result.exit_code == kExitOk);
    const auto report = io::report_from_json(result.out);
    const auto rho = io::density_from_json(io::read_file(o.rho));
    CHECK(report == make_report(SubsystemProbabilities(divisors(18), rho)));
    CHECK(cmd_probabilities(o).out == result.out);

    o.format = Format::Csv;
    CHECK(cmd_probabilities(o).out == io::report_to_csv(report));
    o.format = Format::Table;
    CHECK(cmd_probabilities(o).out.find("checks:") != std::string::npos);

    const auto uniform = write_temp(
        "uniform12.json",
        R"({"n": 12, "diagonal": [0.08333333333333333, 0.08333333333333333, 0.08333333333333333,
            0.08333333333333333, 0.08333333333333333, 0.08333333333333333, 0.08333333333333333,
            0.08333333333333333, 0.08333333333333333, 0.08333333333333333, 0.08333333333333333,
            0.08333333333333333]})");
    o.n = 12;
    o.rho = uniform;
    o.format = Format::Json;
    for (const auto& row : io::report_from_json(cmd_probabilities(o).out).rows) {
        CHECK(std::abs(row.lower - static_cast<double>(row.m) / 12.0) < 1e-12);
    }

    o.n = 30;
    o.rho = write_temp("random30.json", io::density_to_json(random_density(30, 123)));
    CHECK(cmd_probabilities(o).exit_code == kExitOk);

    o.verify.flip_sigma_sign = true;
    const auto faulty = cmd_probabilities(o);
    CHECK(faulty.exit_code == kExitCheckFailed);
    CHECK_FALSE(faulty.err.empty());
    o.verify.flip_sigma_sign = false;

    o.n = 12;
    CHECK(cmd_probabilities(o).exit_code == kExitInvalid);
    o.rho = "/nonexistent.json";
    CHECK(cmd_probabilities(o).exit_code == kExitInvalid);
    o.rho = write_temp("broken.json", "{\"n\": 2, \"diagonal\": [0.9, 0.9]}");
    o.n = 2;
    CHECK(cmd_probabilities(o).exit_code == kExitInvalid);
}

TEST_CASE("sample command") {
    SampleOptions o;
    o.n = 18;
    o.rho = data_path("vacuum18.json");
    o.m = 6;
    o.seed = 1;
    o.format = Format::Json;
    auto doc = parse(cmd_sample(o));
    CHECK(doc["estimates"]["l"] == 1.0);
    CHECK(doc["estimates"]["u"] == 1.0);

    o.rho = data_path("rho18.json");
    o.m = 3;
    o.k = 9;
    const auto first = cmd_sample(o);
    doc = parse(first);
    CHECK(doc["within_band"]["l"] == true);
    CHECK(doc["within_band"]["u"] == true);
    CHECK(doc["estimates"]["l"].get<double>() <= doc["estimates"]["q_k"].get<double>());
    CHECK(doc["estimates"]["q_k"].get<double>() <= doc["estimates"]["u"].get<double>());
    CHECK(doc["shots"] == 100000);
    CHECK(cmd_sample(o).out == first.out);

    o.format = Format::Csv;
    CHECK(cmd_sample(o).out.rfind("quantity,estimate,exact,band_5sigma\n", 0) == 0);

    o.format = Format::Json;
    o.seed.reset();
    {
        ScopedEnv env("SUBLAT_SEED", "1");
        CHECK(cmd_sample(o).out == first.out);
    }
    {
        ScopedEnv env("SUBLAT_SEED", "12x");
        CHECK(cmd_sample(o).exit_code == kExitInvalid);
    }
    CHECK(parse(cmd_sample(o))["record"]["seed"] == 0);

    o.m = 2;
    o.k = 3;
    const auto chain = cmd_sample(o);
    CHECK(chain.exit_code == kExitInvalid);
    CHECK(chain.err.find("ChainCondition") != std::string::npos);

    o.k.reset();
    o.m = 4;
    CHECK(cmd_sample(o).exit_code == kExitInvalid);
    o.m = 2;
    o.shots = 0;
    CHECK(cmd_sample(o).exit_code == kExitInvalid);
}

TEST_CASE("ds command") {
    DsOptions o;
    o.evidence = data_path("marks.json");
    o.sets = {"60..69", "0..100", "65..75", "70..100", "60..100"};
    o.format = Format::Json;
    const auto result = cmd_ds(o);
    const auto doc = parse(result);
    const auto& q = doc["queries"];
    CHECK(q[0]["l"] == "1/4");
    CHECK(q[0]["u"] == "3/4");
    CHECK(q[0]["n1"] == 1);
    CHECK(q[0]["n2"] == 2);
    CHECK(q[0]["n3"] == 1);
    CHECK(q[1]["l"] == "1");
    CHECK(q[1]["u"] == "1");
    CHECK(q[2]["l"] == "1/4");
    CHECK(q[2]["u"] == "3/4");
    CHECK(q[3]["l"] == "1/4");
    CHECK(q[3]["u"] == "1/2");
    CHECK(q[4]["l"] == "3/4");
    CHECK(q[4]["u"] == "1");
    CHECK(cmd_ds(o).out == result.out);

    o.format = Format::Csv;
    CHECK(cmd_ds(o).out.find("\"60..69\",1/4,3/4,1,2,1\n") != std::string::npos);

    o.evidence =
        write_temp("empty_set.json", R"({"frame": {"min": 0, "max": 9}, "sets": [[1], []]})");
    const auto empty = cmd_ds(o);
    CHECK(empty.exit_code == kExitInvalid);
    CHECK(empty.err.find("nonempty") != std::string::npos);

    o.evidence = data_path("marks.json");
    o.sets = {"90..120"};
    CHECK(cmd_ds(o).exit_code == kExitInvalid);
}

TEST_CASE("check command") {
    CheckOptions o;
    o.n_max = 2;
    o.trials = 1;
    o.seed = 0;
    o.format = Format::Json;
    CHECK(parse(cmd_check(o))["pass"] == true);

    o.n_max = 60;
    o.trials = 20;
    const auto result = cmd_check(o);
    const auto doc = parse(result);
    CHECK(doc["pass"] == true);
    CHECK(doc["contexts"] == 60);
    CHECK(doc["densities"] == 1200);

    o.threads = 1;
    CHECK(cmd_check(o).out == result.out);
    o.threads = 3;
    CHECK(cmd_check(o).out == result.out);

    o.format = Format::Table;
    CHECK(cmd_check(o).out.find("PASS") != std::string::npos);

    o.n_max = 12;
    o.trials = 2;
    o.verify.flip_sigma_sign = true;
    const auto faulty = cmd_check(o);
    CHECK(faulty.exit_code == kExitCheckFailed);
    CHECK(faulty.out.find("FAIL") != std::string::npos);
    o.verify.flip_sigma_sign = false;

    o.n_max = 1;
    CHECK(cmd_check(o).exit_code == kExitInvalid);
    o.n_max = 10;
    o.trials = 0;
    CHECK(cmd_check(o).exit_code == kExitInvalid);
}
