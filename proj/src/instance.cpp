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

#include "qsched/instance.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "qsched/error.hpp"

namespace qsched {

const char *metric_name(Metric metric) {
    return metric == Metric::Makespan ? "makespan" : "flowtime";
}

Metric parse_metric(const std::string &name) {
    if (name == "makespan") return Metric::Makespan;
    if (name == "flowtime") return Metric::Flowtime;
    throw Error(ErrorKind::InvalidArgument, "unknown metric '" + name + "' (expected makespan|flowtime)");
}

namespace {

bool is_power_of_two(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

}  // namespace

Instance::Instance(int q_bits, std::vector<std::vector<std::uint64_t>> times) : rows_(std::move(times)) {
    if (q_bits < 1 || q_bits > 32) {
        throw Error(ErrorKind::InvalidArgument, "q_bits must be in [1, 32], got " + std::to_string(q_bits));
    }
    if (rows_.empty() || rows_.front().empty()) {
        throw Error(ErrorKind::InvalidArgument, "time matrix must have at least one job and one machine");
    }
    const std::size_t n_jobs = rows_.size();
    const std::size_t n_machines = rows_.front().size();
    for (std::size_t i = 0; i < n_jobs; ++i) {
        if (rows_[i].size() != n_machines) {
            throw Error(ErrorKind::InvalidArgument, "time matrix is not rectangular (row " + std::to_string(i + 1) +
                                                        " has " + std::to_string(rows_[i].size()) + " entries, expected " +
                                                        std::to_string(n_machines) + ")");
        }
    }
    if (!is_power_of_two(n_jobs) || !is_power_of_two(n_machines)) {
        throw Error(ErrorKind::InvalidArgument,
                    "job and machine counts must be powers of two (got " + std::to_string(n_jobs) + " jobs, " +
                        std::to_string(n_machines) + " machines); pad with dummy jobs or machines if appropriate");
    }
    if (n_jobs > (std::size_t{1} << 16) || n_machines > (std::size_t{1} << 16)) {
        throw Error(ErrorKind::CapacityExceeded, "at most 2^16 jobs and 2^16 machines are supported");
    }
    n_jobs_ = static_cast<std::uint32_t>(n_jobs);
    n_machines_ = static_cast<std::uint32_t>(n_machines);
    job_bits_ = std::countr_zero(n_jobs);
    machine_bits_ = std::countr_zero(n_machines);
    q_bits_ = q_bits;
    if (2 * job_bits_ + q_bits_ > 62) {
        throw Error(ErrorKind::CapacityExceeded, "2n + q must not exceed 62 bits");
    }

    const std::uint64_t limit = std::uint64_t{1} << q_bits_;
    times_.reserve(n_jobs * n_machines);
    for (std::size_t i = 0; i < n_jobs; ++i) {
        for (std::size_t j = 0; j < n_machines; ++j) {
            if (rows_[i][j] >= limit) {
                throw Error(ErrorKind::InvalidArgument,
                            "T[J" + std::to_string(i + 1) + "][M" + std::to_string(j + 1) + "] = " +
                                std::to_string(rows_[i][j]) + " does not fit in q = " + std::to_string(q_bits_) + " bits");
            }
            times_.push_back(rows_[i][j]);
        }
    }
}

std::uint64_t Instance::schedule_count() const {
    if (schedule_bits() > 62) {
        throw Error(ErrorKind::CapacityExceeded,
                    "schedule space 2^" + std::to_string(schedule_bits()) + " is too large to enumerate");
    }
    return std::uint64_t{1} << schedule_bits();
}

void validate(const Assignment &a, const Instance &inst) {
    if (a.machine_of.size() != inst.n_jobs()) {
        throw Error(ErrorKind::InvalidArgument, "assignment has " + std::to_string(a.machine_of.size()) +
                                                    " entries, instance has " + std::to_string(inst.n_jobs()) + " jobs");
    }
    for (std::size_t i = 0; i < a.machine_of.size(); ++i) {
        if (a.machine_of[i] >= inst.n_machines()) {
            throw Error(ErrorKind::InvalidArgument,
                        "job J" + std::to_string(i + 1) + " assigned to nonexistent machine M" +
                            std::to_string(a.machine_of[i] + 1));
        }
    }
}

Assignment index_to_assignment(ScheduleIndex k, const Instance &inst) {
    if (k.value >= inst.schedule_count()) {
        throw Error(ErrorKind::OutOfRange, "schedule index " + std::to_string(k.value) + " >= " +
                                               std::to_string(inst.schedule_count()));
    }
    const int m = inst.machine_bits();
    const std::uint64_t mask = inst.n_machines() - 1;
    const std::uint32_t n = inst.n_jobs();
    Assignment a;
    a.machine_of.resize(n);
    std::uint64_t rest = k.value;
    for (std::uint32_t i = n; i-- > 0;) {
        a.machine_of[i] = static_cast<std::uint32_t>(rest & mask);
        if (m > 0) rest >>= m;
    }
    return a;
}

ScheduleIndex assignment_to_index(const Assignment &a, const Instance &inst) {
    validate(a, inst);
    inst.schedule_count();  // capacity check
    std::uint64_t k = 0;
    for (std::uint32_t machine : a.machine_of) k = (k << inst.machine_bits()) | machine;
    return ScheduleIndex{k};
}

std::vector<std::uint64_t> machine_loads(const Assignment &a, const Instance &inst) {
    std::vector<std::uint64_t> loads(inst.n_machines(), 0);
    for (std::uint32_t i = 0; i < inst.n_jobs(); ++i) {
        const std::uint32_t j = a.machine_of[i];
        loads[j] += inst.time(i, j);
    }
    return loads;
}

std::uint64_t makespan(const std::vector<std::uint64_t> &loads) {
    std::uint64_t best = 0;
    for (std::uint64_t v : loads) best = std::max(best, v);
    return best;
}

std::uint64_t total_flowtime(const Assignment &a, const Instance &inst) {
    std::vector<std::uint32_t> order(inst.n_jobs());
    std::iota(order.begin(), order.end(), 0u);
    auto proc = [&](std::uint32_t i) { return inst.time(i, a.machine_of[i]); };
    std::sort(order.begin(), order.end(), [&](std::uint32_t x, std::uint32_t y) {
        const std::uint64_t tx = proc(x), ty = proc(y);
        return tx != ty ? tx < ty : x < y;
    });
    std::vector<std::uint64_t> clock(inst.n_machines(), 0);
    std::uint64_t total = 0;
    for (std::uint32_t i : order) {
        std::uint64_t &c = clock[a.machine_of[i]];
        c += proc(i);
        total += c;
    }
    return total;
}

std::uint64_t metric_value(Metric metric, const Assignment &a, const Instance &inst) {
    return metric == Metric::Makespan ? makespan(machine_loads(a, inst)) : total_flowtime(a, inst);
}

int metric_bits(Metric metric, const Instance &inst) {
    return metric == Metric::Makespan ? inst.load_bits() : 2 * inst.job_bits() + inst.q_bits();
}

std::uint64_t metric_ceiling(Metric metric, const Instance &inst) {
    return (std::uint64_t{1} << metric_bits(metric, inst)) - 1;
}

std::string format_assignment(const Assignment &a) {
    std::string out = "[";
    for (std::size_t i = 0; i < a.machine_of.size(); ++i) {
        if (i) out += ",";
        out += "M" + std::to_string(a.machine_of[i] + 1);
    }
    return out + "]";
}

}  // namespace qsched
