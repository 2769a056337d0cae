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

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace qsched {

/// Scheduling objective evaluated per schedule.
enum class Metric { Makespan, Flowtime };

const char *metric_name(Metric metric);
Metric parse_metric(const std::string &name);

/// An R||Cmax problem: N = 2^n jobs on M = 2^m unrelated machines, with
/// processing times T[i][j] in [0, 2^q).
///
/// Immutable after construction; construction validates every invariant.
class Instance {
public:
    Instance(int q_bits, std::vector<std::vector<std::uint64_t>> times);

    std::uint32_t n_jobs() const { return n_jobs_; }
    std::uint32_t n_machines() const { return n_machines_; }
    int job_bits() const { return job_bits_; }          // n
    int machine_bits() const { return machine_bits_; }  // m
    int q_bits() const { return q_bits_; }

    std::uint64_t time(std::uint32_t job, std::uint32_t machine) const {
        return times_[static_cast<std::size_t>(job) * n_machines_ + machine];
    }
    const std::vector<std::vector<std::uint64_t>> &rows() const { return rows_; }

    /// log2 of the schedule count, m * N.
    int schedule_bits() const { return machine_bits_ * static_cast<int>(n_jobs_); }
    /// sigma = M^N. Throws CapacityExceeded when it does not fit in 63 bits.
    std::uint64_t schedule_count() const;

    /// Width of one machine-load register (and of the makespan register), n + q.
    int load_bits() const { return job_bits_ + q_bits_; }

private:
    std::uint32_t n_jobs_ = 0;
    std::uint32_t n_machines_ = 0;
    int job_bits_ = 0;
    int machine_bits_ = 0;
    int q_bits_ = 0;
    std::vector<std::uint64_t> times_;
    std::vector<std::vector<std::uint64_t>> rows_;
};

/// One schedule: machine_of[i] is the 0-based machine running job i.
struct Assignment {
    std::vector<std::uint32_t> machine_of;

    auto operator<=>(const Assignment &) const = default;
};

/// Position of a schedule in the canonical enumeration, in [0, M^N).
struct ScheduleIndex {
    std::uint64_t value = 0;

    auto operator<=>(const ScheduleIndex &) const = default;
};

/// Throws InvalidArgument unless the assignment has N entries, each < M.
void validate(const Assignment &a, const Instance &inst);

/// Base-M digits of k; job 0 is the most significant digit.
Assignment index_to_assignment(ScheduleIndex k, const Instance &inst);
ScheduleIndex assignment_to_index(const Assignment &a, const Instance &inst);

std::vector<std::uint64_t> machine_loads(const Assignment &a, const Instance &inst);
std::uint64_t makespan(const std::vector<std::uint64_t> &loads);

/// Sum of job completion times. Jobs sharing a machine run in SPT order,
/// ties broken by the lower job index.
std::uint64_t total_flowtime(const Assignment &a, const Instance &inst);

std::uint64_t metric_value(Metric metric, const Assignment &a, const Instance &inst);

/// Bits needed to hold any value of the metric: n + q for makespan,
/// 2n + q for flowtime (at most N(N+1)/2 * (2^q - 1)).
int metric_bits(Metric metric, const Instance &inst);

/// Largest representable metric value, 2^metric_bits - 1.
std::uint64_t metric_ceiling(Metric metric, const Instance &inst);

/// "M1,M2,..." style rendering with 1-based machine labels.
std::string format_assignment(const Assignment &a);

}  // namespace qsched
