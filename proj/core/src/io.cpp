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

#include "sublat/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "sublat/error.hpp"

namespace sublat::io {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::Parse, e.what());
    }
}

/// Runs a json accessor, converting type errors into Parse errors.
template <typename F>
auto guarded(F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw Error(ErrorCode::Parse, e.what());
    }
}

} // namespace

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::InvalidArgument, "cannot open " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

DensityMatrix density_from_json(std::string_view text, std::optional<std::uint64_t> expected_n) {
    const json doc = parse_json(text);
    return guarded([&] {
        if (!doc.is_object() || !doc.contains("n")) {
            throw Error(ErrorCode::Parse, "density file needs an object with \"n\"");
        }
        const auto n = doc.at("n").get<std::int64_t>();
        if (n < 1) {
            throw Error(ErrorCode::InvalidArgument, "density file has n < 1");
        }
        if (expected_n && static_cast<std::uint64_t>(n) != *expected_n) {
            throw Error(ErrorCode::DimensionMismatch,
                        "density file is for n = " + std::to_string(n) + ", expected " +
                            std::to_string(*expected_n));
        }
        const bool has_diag = doc.contains("diagonal");
        const bool has_entries = doc.contains("entries");
        if (has_diag == has_entries) {
            throw Error(ErrorCode::Parse,
                        "density file needs exactly one of \"diagonal\" or \"entries\"");
        }
        const auto size = static_cast<std::size_t>(n);
        if (has_diag) {
            const auto diag = doc.at("diagonal").get<std::vector<double>>();
            if (diag.size() != size) {
                throw Error(ErrorCode::DimensionMismatch, "diagonal has " +
                                                              std::to_string(diag.size()) +
                                                              " entries for n = " +
                                                              std::to_string(n));
            }
            return make_diagonal_density(diag);
        }
        const json& rows = doc.at("entries");
        if (!rows.is_array() || rows.size() != size) {
            throw Error(ErrorCode::DimensionMismatch, "entries must have n rows");
        }
        Eigen::MatrixXcd m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
        for (std::size_t i = 0; i < size; ++i) {
            if (!rows[i].is_array() || rows[i].size() != size) {
                throw Error(ErrorCode::DimensionMismatch,
                            "row " + std::to_string(i) + " must have n entries");
            }
            for (std::size_t j = 0; j < size; ++j) {
                const auto pair = rows[i][j].get<std::vector<double>>();
                if (pair.size() != 2) {
                    throw Error(ErrorCode::Parse, "matrix entries must be [re, im] pairs");
                }
                m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                    Complex(pair[0], pair[1]);
            }
        }
        return make_density(m);
    });
}

std::string density_to_json(const DensityMatrix& rho) {
    json doc;
    doc["n"] = rho.dim();
    if (rho.is_diagonal()) {
        doc["diagonal"] = rho.diagonal();
    } else {
        const Eigen::MatrixXcd m = rho.to_dense();
        json rows = json::array();
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            json row = json::array();
            for (Eigen::Index j = 0; j < m.cols(); ++j) {
                row.push_back({m(i, j).real(), m(i, j).imag()});
            }
            rows.push_back(std::move(row));
        }
        doc["entries"] = std::move(rows);
    }
    return doc.dump(2);
}

namespace {

json checks_json(const CheckTable& checks) {
    json out = json::object();
    for (const auto& [name, c] : checks) {
        out[name] = {{"pass", c.pass}, {"worst_slack", c.worst_slack}, {"samples", c.samples}};
    }
    return out;
}

CheckTable checks_from(const json& doc) {
    CheckTable out;
    for (const auto& [name, c] : doc.items()) {
        CheckResult r;
        r.pass = c.at("pass").get<bool>();
        r.worst_slack = c.at("worst_slack").get<double>();
        r.samples = c.value("samples", std::uint64_t{0});
        out.emplace(name, r);
    }
    return out;
}

} // namespace

std::string report_to_json(const ProbabilityReport& report, int indent) {
    json doc;
    doc["n"] = report.n;
    json rows = json::array();
    for (const DivisorRow& r : report.rows) {
        rows.push_back({{"m", r.m},
                        {"l", r.lower},
                        {"lt", r.lower_tilde},
                        {"u", r.upper},
                        {"ut", r.upper_tilde},
                        {"d", r.dont_know}});
    }
    doc["rows"] = std::move(rows);
    doc["sigma"] = report.sigma;
    doc["upper_defect"] = report.upper_defect;
    doc["checks"] = checks_json(report.checks);
    return doc.dump(indent);
}

ProbabilityReport report_from_json(std::string_view text) {
    const json doc = parse_json(text);
    return guarded([&] {
        ProbabilityReport report;
        report.n = doc.at("n").get<std::uint64_t>();
        for (const json& r : doc.at("rows")) {
            report.rows.push_back({r.at("m").get<Divisor>(), r.at("l").get<double>(),
                                   r.at("lt").get<double>(), r.at("u").get<double>(),
                                   r.at("ut").get<double>(), r.at("d").get<double>()});
        }
        report.sigma = doc.at("sigma").get<std::vector<std::vector<double>>>();
        report.upper_defect = doc.value("upper_defect", std::vector<std::vector<double>>{});
        report.checks = checks_from(doc.at("checks"));
        return report;
    });
}

std::string format_double(double x) {
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    return ec == std::errc() ? std::string(buf, end) : std::string("nan");
}

std::string report_to_csv(const ProbabilityReport& report) {
    std::string out = "m,l,lt,u,ut,d\n";
    for (const DivisorRow& r : report.rows) {
        out += std::to_string(r.m) + "," + format_double(r.lower) + "," +
               format_double(r.lower_tilde) + "," + format_double(r.upper) + "," +
               format_double(r.upper_tilde) + "," + format_double(r.dont_know) + "\n";
    }
    return out;
}

std::string checks_to_json(const CheckTable& checks, int indent) {
    return checks_json(checks).dump(indent);
}

std::string record_to_json(const MeasurementRecord& record, int indent) {
    json doc;
    doc["n"] = record.n;
    doc["seed"] = record.seed;
    doc["algorithm"] = record.algorithm;
    doc["counts"] = record.counts;
    return doc.dump(indent);
}

MeasurementRecord record_from_json(std::string_view text) {
    const json doc = parse_json(text);
    return guarded([&] {
        MeasurementRecord record;
        record.n = doc.at("n").get<std::uint64_t>();
        record.seed = doc.at("seed").get<std::uint64_t>();
        record.algorithm = doc.at("algorithm").get<std::string>();
        record.counts = doc.at("counts").get<std::vector<std::uint64_t>>();
        if (record.counts.size() != record.n) {
            throw Error(ErrorCode::DimensionMismatch, "counts must have n entries");
        }
        for (std::uint64_t c : record.counts) {
            record.total += c;
        }
        return record;
    });
}

namespace {

ds::Label parse_label(std::string_view token) {
    while (!token.empty() && token.front() == ' ') {
        token.remove_prefix(1);
    }
    while (!token.empty() && token.back() == ' ') {
        token.remove_suffix(1);
    }
    ds::Label value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
        throw Error(ErrorCode::Parse, "bad label \"" + std::string(token) + "\"");
    }
    return value;
}

ds::LabelSet parse_items(std::string_view spec) {
    std::vector<ds::Label> labels;
    while (!spec.empty()) {
        const auto comma = spec.find(',');
        const std::string_view item = spec.substr(0, comma);
        spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
        const auto dots = item.find("..");
        if (dots == std::string_view::npos) {
            labels.push_back(parse_label(item));
            continue;
        }
        const ds::Label lo = parse_label(item.substr(0, dots));
        const ds::Label hi = parse_label(item.substr(dots + 2));
        if (hi < lo) {
            throw Error(ErrorCode::Parse, "empty range \"" + std::string(item) + "\"");
        }
        for (ds::Label x = lo; x <= hi; ++x) {
            labels.push_back(x);
        }
    }
    return ds::make_label_set(std::move(labels));
}

} // namespace

ds::LabelSet parse_label_set(std::string_view spec, const ds::Frame& frame) {
    ds::LabelSet set = parse_items(spec);
    frame.require(set);
    return set;
}

ds::Evidence evidence_from_json(std::string_view text) {
    const json doc = parse_json(text);
    return guarded([&] {
        const json& frame_doc = doc.at("frame");
        std::optional<ds::Frame> frame;
        if (frame_doc.is_object()) {
            frame = ds::Frame::range(frame_doc.at("min").get<ds::Label>(),
                                     frame_doc.at("max").get<ds::Label>());
        } else {
            frame = ds::Frame(frame_doc.get<std::vector<ds::Label>>());
        }
        std::vector<ds::LabelSet> sets;
        for (const json& s : doc.at("sets")) {
            sets.push_back(s.is_string() ? parse_items(s.get<std::string>())
                                         : ds::make_label_set(s.get<std::vector<ds::Label>>()));
        }
        return ds::Evidence(std::move(*frame), std::move(sets));
    });
}

std::string evidence_to_json(const ds::Evidence& evidence) {
    json doc;
    doc["frame"] = evidence.frame().elements();
    doc["sets"] = evidence.sets();
    return doc.dump(2);
}

std::string format_rational(const ds::Rational& r) {
    if (r.denominator() == 1) {
        return std::to_string(r.numerator());
    }
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

} // namespace sublat::io
