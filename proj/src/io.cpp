// Copyright 2026 The qsched Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qsched/io.hpp"

#include <openssl/sha.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "qsched/error.hpp"

namespace qsched {

using nlohmann::ordered_json;

Instance parse_instance(const std::string &text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const ordered_json::exception &e) {
        throw Error(ErrorKind::InputFormat, std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("q_bits") || !doc.contains("times")) {
        throw Error(ErrorKind::InputFormat, "instance needs \"q_bits\" and \"times\"");
    }
    if (!doc["q_bits"].is_number_integer()) throw Error(ErrorKind::InputFormat, "\"q_bits\" must be an integer");
    if (!doc["times"].is_array()) throw Error(ErrorKind::InputFormat, "\"times\" must be an array of rows");
    std::vector<std::vector<std::uint64_t>> times;
    for (const auto &row : doc["times"]) {
        if (!row.is_array()) throw Error(ErrorKind::InputFormat, "every row of \"times\" must be an array");
        auto &out = times.emplace_back();
        for (const auto &v : row) {
            if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
                throw Error(ErrorKind::InputFormat, "processing times must be non-negative integers");
            }
            out.push_back(v.get<std::uint64_t>());
        }
    }
    try {
        return Instance(doc["q_bits"].get<int>(), std::move(times));
    } catch (const Error &e) {
        if (e.kind() == ErrorKind::InvalidArgument) throw Error(ErrorKind::InputFormat, e.what());
        throw;
    }
}

Instance load_instance(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::InputFormat, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_instance(ss.str());
}

std::string instance_json(const Instance &inst) {
    ordered_json doc;
    doc["q_bits"] = inst.q_bits();
    doc["times"] = inst.rows();
    return doc.dump();
}

std::string instance_digest(const Instance &inst) {
    const std::string text = instance_json(inst);
    unsigned char md[SHA256_DIGEST_LENGTH];
    SHA256(reinterpret_cast<const unsigned char *>(text.data()), text.size(), md);
    std::string hex;
    char buf[3];
    for (unsigned char c : md) {
        std::snprintf(buf, sizeof buf, "%02x", c);
        hex += buf;
    }
    return hex;
}

namespace {

ordered_json assignment_json(const Assignment &a) {
    ordered_json labels = ordered_json::array();
    for (std::uint32_t j : a.machine_of) labels.push_back("M" + std::to_string(j + 1));
    return labels;
}

Assignment assignment_from_json(const ordered_json &labels) {
    Assignment a;
    for (const auto &l : labels) {
        const std::string s = l.get<std::string>();
        if (s.size() < 2 || s[0] != 'M') throw Error(ErrorKind::InputFormat, "bad machine label " + s);
        a.machine_of.push_back(static_cast<std::uint32_t>(std::stoul(s.substr(1)) - 1));
    }
    return a;
}

template <typename T>
ordered_json optional_json(const std::optional<T> &v) {
    return v ? ordered_json(*v) : ordered_json(nullptr);
}

template <typename T>
std::optional<T> optional_from(const ordered_json &v) {
    if (v.is_null()) return std::nullopt;
    return v.get<T>();
}

}  // namespace

ordered_json to_json(const RunReport &report) {
    ordered_json doc;
    doc["instance_digest"] = report.instance_digest;
    doc["predicate"] = {{"metric", metric_name(report.predicate.metric)},
                        {"lo", report.predicate.lo},
                        {"hi", report.predicate.hi}};
    doc["backend"] = backend_name(report.backend);
    doc["params"] = {{"phi", report.params.phi},
                     {"varphi", report.params.varphi},
                     {"iterations", optional_json(report.params.iterations)},
                     {"mode", mode_name(report.params.mode)},
                     {"seed", report.params.seed}};
    const SearchReport &s = report.search;
    doc["result"] = {{"sigma", s.sigma},
                     {"solution_count", optional_json(s.solution_count)},
                     {"theta", optional_json(s.theta)},
                     {"iterations_run", s.iterations_run},
                     {"attempts", s.attempts},
                     {"predicted_success", optional_json(s.predicted_success)},
                     {"measured_index", s.measured_index.value},
                     {"measured_assignment", assignment_json(s.measured_assignment)},
                     {"metric_value", s.metric_value},
                     {"verified", s.verified}};
    if (report.wall_time_ms) doc["wall_time_ms"] = *report.wall_time_ms;
    return doc;
}

RunReport run_report_from_json(const ordered_json &doc, const Instance &inst) {
    RunReport r;
    try {
        r.instance_digest = doc.at("instance_digest").get<std::string>();
        const auto &p = doc.at("predicate");
        r.predicate = Predicate{parse_metric(p.at("metric").get<std::string>()), p.at("lo").get<std::uint64_t>(),
                                p.at("hi").get<std::uint64_t>()};
        r.backend = parse_backend(doc.at("backend").get<std::string>());
        const auto &params = doc.at("params");
        r.params.phi = params.at("phi").get<double>();
        r.params.varphi = params.at("varphi").get<double>();
        r.params.iterations = optional_from<std::uint64_t>(params.at("iterations"));
        r.params.mode = parse_mode(params.at("mode").get<std::string>());
        r.params.seed = params.at("seed").get<std::uint64_t>();
        const auto &s = doc.at("result");
        r.search.sigma = s.at("sigma").get<std::uint64_t>();
        r.search.solution_count = optional_from<std::uint64_t>(s.at("solution_count"));
        r.search.theta = optional_from<double>(s.at("theta"));
        r.search.iterations_run = s.at("iterations_run").get<std::uint64_t>();
        r.search.attempts = s.at("attempts").get<std::uint64_t>();
        r.search.predicted_success = optional_from<double>(s.at("predicted_success"));
        r.search.measured_index = ScheduleIndex{s.at("measured_index").get<std::uint64_t>()};
        r.search.measured_assignment = assignment_from_json(s.at("measured_assignment"));
        if (doc.contains("wall_time_ms")) r.wall_time_ms = doc.at("wall_time_ms").get<double>();
    } catch (const ordered_json::exception &e) {
        throw Error(ErrorKind::InputFormat, std::string("malformed run report: ") + e.what());
    }
    if (r.instance_digest != instance_digest(inst)) {
        throw Error(ErrorKind::InputFormat, "run report belongs to a different instance");
    }
    validate(r.search.measured_assignment, inst);
    if (assignment_to_index(r.search.measured_assignment, inst) != r.search.measured_index) {
        throw Error(ErrorKind::InputFormat, "measured index and assignment disagree");
    }
    r.search.metric_value = metric_value(r.predicate.metric, r.search.measured_assignment, inst);
    r.search.verified = r.predicate.accepts(r.search.metric_value);
    return r;
}

void write_text_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::InputFormat, "cannot write " + path);
    out << text;
}

}  // namespace qsched
