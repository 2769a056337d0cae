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

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qsched/instance.hpp"

namespace qsched {

/// Inclusive metric window [lo, hi]; a point target when lo == hi.
struct Predicate {
    Metric metric = Metric::Makespan;
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;

    bool accepts(std::uint64_t value) const { return lo <= value && value <= hi; }
};

/// Throws InvalidArgument unless 0 <= lo <= hi <= metric_ceiling.
void validate(const Predicate &pred, const Instance &inst);

/// "makespan:LO:HI"
std::string format_predicate(const Predicate &pred);

/// Largest schedule space the exhaustive oracle will walk.
inline constexpr int kEnumerationCapacityBits = 24;

struct MetricHistogram {
    Metric metric = Metric::Makespan;
    std::map<std::uint64_t, std::uint64_t> counts;
    std::uint64_t sigma = 0;
};

struct Optimum {
    std::uint64_t value = 0;
    ScheduleIndex index;
    Assignment witness;
};

/// Metric of every schedule, indexed by ScheduleIndex. CapacityExceeded past
/// 2^kEnumerationCapacityBits schedules.
std::vector<std::uint64_t> metric_table(const Instance &inst, Metric metric);

MetricHistogram enumerate_metrics(const Instance &inst, Metric metric);
std::uint64_t count_solutions(const Instance &inst, const Predicate &pred);
/// Minimum over all schedules; ties go to the lowest index.
Optimum optimum(const Instance &inst, Metric metric);

/// Every schedule index accepted by the predicate, ascending.
std::vector<ScheduleIndex> solution_set(const Instance &inst, const Predicate &pred);

/// `value,count` rows in ascending value order, with a header line.
std::string histogram_csv(const MetricHistogram &hist);

}  // namespace qsched
