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

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "qsched/instance.hpp"

namespace qsched {

/// Fixed-width bit string. Bit positions are addressed from the left, so
/// position 0 is the most significant bit, matching how kets are written.
class BasisState {
public:
    BasisState() = default;
    explicit BasisState(int width);

    int width() const { return width_; }

    /// Reads `len` bits (len <= 64) starting at MSB-relative position `pos`.
    std::uint64_t field(int pos, int len) const;
    void set_field(int pos, int len, std::uint64_t value);

    bool is_zero() const;
    bool is_zero(int pos, int len) const { return field_is_zero(pos, len); }

    /// Concatenation, `this` on the left.
    BasisState concat(const BasisState &low) const;

    /// Plain bit string, most significant bit first.
    std::string bits() const;
    static BasisState from_bits(const std::string &bits);

    friend bool operator==(const BasisState &, const BasisState &) = default;
    /// Numeric order for equal widths; shorter strings order first.
    friend bool operator<(const BasisState &a, const BasisState &b);

private:
    bool field_is_zero(int pos, int len) const;
    bool get(int pos) const;
    void put(int pos, bool bit);

    int width_ = 0;
    // words_[0] holds the 64 least significant bits.
    std::vector<std::uint64_t> words_;
};

/// Field boundaries of the full register |S>|T>|Cmax>, left to right:
/// N job subregisters of m+q bits, M load registers of n+q bits, one
/// makespan register of n+q bits.
struct RegisterLayout {
    int machine_bits = 0;  // m
    int time_bits = 0;     // q
    int load_bits = 0;     // n + q
    std::uint32_t n_jobs = 0;
    std::uint32_t n_machines = 0;

    static RegisterLayout of(const Instance &inst);

    int job_width() const { return machine_bits + time_bits; }
    int schedule_width() const { return static_cast<int>(n_jobs) * job_width(); }
    int loads_width() const { return static_cast<int>(n_machines) * load_bits; }
    int makespan_width() const { return load_bits; }
    int total_width() const { return schedule_width() + loads_width() + makespan_width(); }

    int job_offset(std::uint32_t job) const { return static_cast<int>(job) * job_width(); }
    int job_index_offset(std::uint32_t job) const { return job_offset(job); }
    int job_time_offset(std::uint32_t job) const { return job_offset(job) + machine_bits; }
    int load_offset(std::uint32_t machine) const {
        return schedule_width() + static_cast<int>(machine) * load_bits;
    }
    int makespan_offset() const { return schedule_width() + loads_width(); }
};

/// |e_i^j> = |j> (m bits) followed by |T_ij> (q bits).
BasisState encode_job_machine(std::uint32_t job, std::uint32_t machine, const Instance &inst);

/// |J_i> = 2^(-m/2) * sum_j |e_i^j>, one entry per machine in machine order.
std::vector<std::pair<std::complex<double>, BasisState>> job_superposition(std::uint32_t job,
                                                                           const Instance &inst);

/// |S_k>: the job subregisters of schedule k, job 0 leftmost.
BasisState schedule_basis(ScheduleIndex k, const Instance &inst);
BasisState schedule_basis(const Assignment &a, const Instance &inst);

/// Reads the machine index of every job subregister. Throws
/// InconsistentTimeField when a time field is not T[i][j] for its index.
Assignment decode_schedule(const BasisState &schedule, const Instance &inst);

/// Concatenated index fields of a schedule register, i.e. the schedule
/// index, without checking the time fields.
ScheduleIndex schedule_index_bits(const BasisState &state, const RegisterLayout &layout);

/// `|00_0001>`: index and time fields separated by an underscore.
std::string render_job_ket(const BasisState &job_state, const RegisterLayout &layout);

/// Full-register ket: job subregisters rendered as in render_job_ket, then
/// the load registers and the makespan register, space separated.
std::string render_ket(const BasisState &state, const RegisterLayout &layout);

/// `|bits>` with no separators, as kets are printed in running text.
std::string plain_ket(const BasisState &state);

}  // namespace qsched
