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

#include <algorithm>
#include <string>

#include "doctest.h"
#include "fixtures.hpp"
#include "sublat/error.hpp"
#include "sublat/io.hpp"

using namespace sublat;

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

} // namespace

TEST_CASE("bundled density fixtures") {
    const auto rho =
        io::density_from_json(io::read_file(sublat::testing::data_path("rho18.json")), 18);
    CHECK(rho.is_diagonal());
    CHECK(rho.diagonal() == sublat::testing::rho18_weights());
    const auto vac =
        io::density_from_json(io::read_file(sublat::testing::data_path("vacuum18.json")));
    CHECK(vac.dim() == 18);
    CHECK(vac.diagonal()[0] == 1.0);
    CHECK(error_of([] { (void)io::read_file("/nonexistent/rho.json"); }) ==
          ErrorCode::InvalidArgument);
}

TEST_CASE("density JSON round trip and validation") {
    const auto dense = random_density(5, 17);
    const auto back = io::density_from_json(io::density_to_json(dense));
    CHECK(back.to_dense() == dense.to_dense());
    CHECK_FALSE(back.is_diagonal());

    const auto diag = io::density_from_json(R"({"n": 2, "diagonal": [0.25, 0.75]})");
    CHECK(io::density_from_json(io::density_to_json(diag)).diagonal() == diag.diagonal());

    const auto entries = io::density_from_json(
        R"({"n": 2, "entries": [[[0.5, 0], [0, 0.5]], [[0, -0.5], [0.5, 0]]]})");
    CHECK(entries.to_dense()(0, 1) == Complex(0, 0.5));

    CHECK(error_of([] { (void)io::density_from_json("{"); }) == ErrorCode::Parse);
    CHECK(error_of([] { (void)io::density_from_json(R"({"n": 1})"); }) == ErrorCode::Parse);
    CHECK(error_of([] {
              (void)io::density_from_json(
                  R"({"n": 1, "diagonal": [1], "entries": [[[1, 0]]]})");
          }) == ErrorCode::Parse);
    CHECK(error_of([] { (void)io::density_from_json(R"({"n": 3, "diagonal": [0.5, 0.5]})"); }) ==
          ErrorCode::DimensionMismatch);
    CHECK(error_of([] { (void)io::density_from_json(R"({"n": 2, "diagonal": [0.5, 0.5]})", 3); }) ==
          ErrorCode::DimensionMismatch);
    CHECK(error_of([] { (void)io::density_from_json(R"({"n": 2, "diagonal": [0.7, 0.7]})"); }) ==
          ErrorCode::TraceNotOne);
    CHECK(error_of([] {
              (void)io::density_from_json(
                  R"({"n": 2, "entries": [[[0.5, 0], [1, 0]], [[0, 0], [0.5, 0]]]})");
          }) == ErrorCode::NotHermitian);
    CHECK(error_of([] { (void)io::density_from_json(R"({"n": 1, "diagonal": ["x"]})"); }) ==
          ErrorCode::Parse);
}

TEST_CASE("probability report round trip") {
    for (std::uint64_t n : {1u, 18u, 60u}) {
        const SubsystemProbabilities p(divisors(static_cast<std::int64_t>(n)),
                                       random_density(n, n + 1));
        const auto report = make_report(p);
        const std::string text = io::report_to_json(report);
        CHECK(io::report_from_json(text) == report);
        CHECK(io::report_to_json(io::report_from_json(text)) == text);
    }
    const auto rho = io::density_from_json(io::read_file(sublat::testing::data_path("rho18.json")));
    const auto report = make_report(SubsystemProbabilities(divisors(18), rho));
    const std::string csv = io::report_to_csv(report);
    CHECK(csv.rfind("m,l,lt,u,ut,d\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 7);
    CHECK(csv.find("\n18,") != std::string::npos);
}

TEST_CASE("measurement record round trip") {
    const auto rho = random_density(12, 4);
    const auto rec = simulate(rho, 1000, 8);
    CHECK(io::record_from_json(io::record_to_json(rec)) == rec);
    CHECK(error_of([] {
              (void)io::record_from_json(
                  R"({"n": 3, "seed": 1, "algorithm": "x", "counts": [1, 2]})");
          }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("evidence JSON and label specs") {
    const ds::Frame frame = ds::Frame::range(0, 20);
    CHECK(io::parse_label_set("1,4,10..12", frame) == ds::LabelSet{1, 4, 10, 11, 12});
    CHECK(io::parse_label_set("3..3", frame) == ds::LabelSet{3});
    CHECK(io::parse_label_set(" 5 , 2 ", frame) == ds::LabelSet{2, 5});
    CHECK(error_of([&] { (void)io::parse_label_set("19..21", frame); }) ==
          ErrorCode::NotSubsetOfFrame);
    CHECK(error_of([&] { (void)io::parse_label_set("4..2", frame); }) == ErrorCode::Parse);
    CHECK(error_of([&] { (void)io::parse_label_set("a", frame); }) == ErrorCode::Parse);

    const auto ev = io::evidence_from_json(
        R"({"frame": [1, 2, 3, 5, 8], "sets": [[1, 2], "2..3", [8]]})");
    CHECK(ev.frame().elements() == ds::LabelSet{1, 2, 3, 5, 8});
    CHECK(ev.sets()[1] == ds::LabelSet{2, 3});
    CHECK(error_of([] {
              (void)io::evidence_from_json(R"({"frame": [1, 2, 3, 5], "sets": ["3..5"]})");
          }) == ErrorCode::NotSubsetOfFrame);
    CHECK(error_of([] {
              (void)io::evidence_from_json(R"({"frame": {"min": 0, "max": 3}, "sets": [[]]})");
          }) == ErrorCode::EmptyEvidenceSet);
    const auto marks =
        io::evidence_from_json(io::read_file(sublat::testing::data_path("marks.json")));
    const auto back = io::evidence_from_json(io::evidence_to_json(marks));
    CHECK(back.frame() == marks.frame());
    CHECK(back.sets() == marks.sets());
}

TEST_CASE("number formatting") {
    CHECK(io::format_rational(ds::Rational(1, 4)) == "1/4");
    CHECK(io::format_rational(ds::Rational(2, 2)) == "1");
    CHECK(io::format_rational(ds::Rational(0)) == "0");
    CHECK(io::format_double(0.1) == "0.1");
    CHECK(io::format_double(1.0) == "1");
    const double x = 1.0 / 171.0;
    CHECK(std::stod(io::format_double(x)) == x);
}
