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

#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "qsched/bruteforce.hpp"
#include "qsched/instance.hpp"
#include "qsched/search.hpp"
#include "qsched/simulator.hpp"

namespace qsched {

/// Parses `{"q_bits": q, "times": [[...], ...]}`; rows are jobs, columns
/// machines. Shape and range problems raise InputFormat.
Instance parse_instance(const std::string &text);
Instance load_instance(const std::string &path);

/// Canonical single-line JSON of the instance (the digest input).
std::string instance_json(const Instance &inst);
/// SHA-256 of instance_json, lowercase hex.
std::string instance_digest(const Instance &inst);

struct RunReport {
    std::string instance_digest;
    Predicate predicate;
    Backend backend = Backend::Compact;
    SearchParams params;
    SearchReport search;
    std::optional<double> wall_time_ms;  // only when timing was requested
};

nlohmann::ordered_json to_json(const RunReport &report);
/// Inverse of to_json. `verified` and `metric_value` are recomputed from the
/// instance; InputFormat if the digest does not match it.
RunReport run_report_from_json(const nlohmann::ordered_json &doc, const Instance &inst);

void write_text_file(const std::string &path, const std::string &text);

}  // namespace qsched
