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

#include "qsched/bruteforce.hpp"

#include <limits>

#include "qsched/error.hpp"
#include "qsched/parallel.hpp"

namespace qsched {

void validate(const Predicate &pred, const Instance &inst) {
    const std::uint64_t ceiling = metric_ceiling(pred.metric, inst);
    if (pred.lo > pred.hi || pred.hi > ceiling) {
        throw Error(ErrorKind::InvalidArgument, "predicate " + format_predicate(pred) + " must satisfy 0 <= lo <= hi <= " +
                                                    std::to_string(ceiling));
    }
}

std::string format_predicate(const Predicate &pred) {
    return std::string(metric_name(pred.metric)) + ":" + std::to_string(pred.lo) + ":" + std::to_string(pred.hi);
}

namespace {

void check_enumerable(const Instance &inst) {
    if (inst.schedule_bits() > kEnumerationCapacityBits) {
        throw Error(ErrorKind::CapacityExceeded, "exhaustive enumeration is capped at 2^" +
                                                     std::to_string(kEnumerationCapacityBits) + " schedules, instance has 2^" +
                                                     std::to_string(inst.schedule_bits()));
    }
}

}  // namespace

std::vector<std::uint64_t> metric_table(const Instance &inst, Metric metric) {
    check_enumerable(inst);
    const std::uint64_t sigma = inst.schedule_count();
    std::vector<std::uint64_t> table(sigma);
    parallel_chunks(sigma, [&](std::size_t, std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t k = begin; k < end; ++k) {
            table[k] = metric_value(metric, index_to_assignment(ScheduleIndex{k}, inst), inst);
        }
    });
    return table;
}

MetricHistogram enumerate_metrics(const Instance &inst, Metric metric) {
    check_enumerable(inst);
    const std::uint64_t sigma = inst.schedule_count();
    std::vector<std::map<std::uint64_t, std::uint64_t>> partial(chunk_count(sigma));
    parallel_chunks(sigma, [&](std::size_t c, std::uint64_t begin, std::uint64_t end) {
        auto &h = partial[c];
        for (std::uint64_t k = begin; k < end; ++k) {
            ++h[metric_value(metric, index_to_assignment(ScheduleIndex{k}, inst), inst)];
        }
    });
    MetricHistogram hist;
    hist.metric = metric;
    hist.sigma = sigma;
    for (const auto &h : partial) {
        for (const auto &[value, count] : h) hist.counts[value] += count;
    }
    return hist;
}

std::uint64_t count_solutions(const Instance &inst, const Predicate &pred) {
    const MetricHistogram hist = enumerate_metrics(inst, pred.metric);
    std::uint64_t total = 0;
    for (auto it = hist.counts.lower_bound(pred.lo); it != hist.counts.end() && it->first <= pred.hi; ++it) {
        total += it->second;
    }
    return total;
}

Optimum optimum(const Instance &inst, Metric metric) {
    const std::vector<std::uint64_t> table = metric_table(inst, metric);
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t best_k = 0;
    for (std::uint64_t k = 0; k < table.size(); ++k) {
        if (table[k] < best) {
            best = table[k];
            best_k = k;
        }
    }
    return Optimum{best, ScheduleIndex{best_k}, index_to_assignment(ScheduleIndex{best_k}, inst)};
}

std::vector<ScheduleIndex> solution_set(const Instance &inst, const Predicate &pred) {
    const std::vector<std::uint64_t> table = metric_table(inst, pred.metric);
    std::vector<ScheduleIndex> out;
    for (std::uint64_t k = 0; k < table.size(); ++k) {
        if (pred.accepts(table[k])) out.push_back(ScheduleIndex{k});
    }
    return out;
}

std::string histogram_csv(const MetricHistogram &hist) {
    std::string out = "value,count\n";
    for (const auto &[value, count] : hist.counts) out += std::to_string(value) + "," + std::to_string(count) + "\n";
    return out;
}

}  // namespace qsched
