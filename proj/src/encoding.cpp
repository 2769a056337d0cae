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

#include "qsched/encoding.hpp"

#include <cmath>

#include "qsched/error.hpp"

namespace qsched {

namespace {

std::uint64_t low_mask(int len) { return len >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << len) - 1; }

}  // namespace

BasisState::BasisState(int width) : width_(width), words_(static_cast<std::size_t>((width + 63) / 64), 0) {
    if (width < 0) throw Error(ErrorKind::InvalidArgument, "negative register width");
}

std::uint64_t BasisState::field(int pos, int len) const {
    if (len == 0) return 0;
    if (len > 64 || pos < 0 || pos + len > width_) {
        throw Error(ErrorKind::OutOfRange, "field [" + std::to_string(pos) + ", +" + std::to_string(len) +
                                               ") outside register of width " + std::to_string(width_));
    }
    const int lsb = width_ - (pos + len);
    const std::size_t w = static_cast<std::size_t>(lsb / 64);
    const int shift = lsb % 64;
    std::uint64_t v = words_[w] >> shift;
    if (shift != 0 && shift + len > 64) v |= words_[w + 1] << (64 - shift);
    return v & low_mask(len);
}

void BasisState::set_field(int pos, int len, std::uint64_t value) {
    if (len == 0) return;
    if (len > 64 || pos < 0 || pos + len > width_) {
        throw Error(ErrorKind::OutOfRange, "field [" + std::to_string(pos) + ", +" + std::to_string(len) +
                                               ") outside register of width " + std::to_string(width_));
    }
    if ((value & ~low_mask(len)) != 0) {
        throw Error(ErrorKind::OutOfRange, "value " + std::to_string(value) + " does not fit in " +
                                               std::to_string(len) + " bits");
    }
    const int lsb = width_ - (pos + len);
    const std::size_t w = static_cast<std::size_t>(lsb / 64);
    const int shift = lsb % 64;
    const std::uint64_t mask = low_mask(len);
    words_[w] = (words_[w] & ~(mask << shift)) | (value << shift);
    if (shift != 0 && shift + len > 64) {
        const int spill = 64 - shift;
        words_[w + 1] = (words_[w + 1] & ~(mask >> spill)) | (value >> spill);
    }
}

bool BasisState::is_zero() const {
    for (std::uint64_t w : words_) {
        if (w) return false;
    }
    return true;
}

bool BasisState::field_is_zero(int pos, int len) const {
    for (int p = pos; p < pos + len; p += 64) {
        const int l = std::min(64, pos + len - p);
        if (field(p, l) != 0) return false;
    }
    return true;
}

bool BasisState::get(int pos) const {
    const int lsb = width_ - 1 - pos;
    return (words_[static_cast<std::size_t>(lsb / 64)] >> (lsb % 64)) & 1u;
}

void BasisState::put(int pos, bool bit) {
    const int lsb = width_ - 1 - pos;
    std::uint64_t &w = words_[static_cast<std::size_t>(lsb / 64)];
    const std::uint64_t m = std::uint64_t{1} << (lsb % 64);
    w = bit ? (w | m) : (w & ~m);
}

BasisState BasisState::concat(const BasisState &low) const {
    BasisState out(width_ + low.width_);
    for (int p = 0; p < width_; ++p) out.put(p, get(p));
    for (int p = 0; p < low.width_; ++p) out.put(width_ + p, low.get(p));
    return out;
}

std::string BasisState::bits() const {
    std::string s(static_cast<std::size_t>(width_), '0');
    for (int p = 0; p < width_; ++p) {
        if (get(p)) s[static_cast<std::size_t>(p)] = '1';
    }
    return s;
}

BasisState BasisState::from_bits(const std::string &bits) {
    BasisState out(static_cast<int>(bits.size()));
    for (std::size_t p = 0; p < bits.size(); ++p) {
        if (bits[p] != '0' && bits[p] != '1') {
            throw Error(ErrorKind::InvalidArgument, "bit string contains '" + std::string(1, bits[p]) + "'");
        }
        out.put(static_cast<int>(p), bits[p] == '1');
    }
    return out;
}

bool operator<(const BasisState &a, const BasisState &b) {
    if (a.width_ != b.width_) return a.width_ < b.width_;
    for (std::size_t w = a.words_.size(); w-- > 0;) {
        if (a.words_[w] != b.words_[w]) return a.words_[w] < b.words_[w];
    }
    return false;
}

RegisterLayout RegisterLayout::of(const Instance &inst) {
    RegisterLayout l;
    l.machine_bits = inst.machine_bits();
    l.time_bits = inst.q_bits();
    l.load_bits = inst.load_bits();
    l.n_jobs = inst.n_jobs();
    l.n_machines = inst.n_machines();
    return l;
}

BasisState encode_job_machine(std::uint32_t job, std::uint32_t machine, const Instance &inst) {
    if (job >= inst.n_jobs() || machine >= inst.n_machines()) {
        throw Error(ErrorKind::OutOfRange, "job/machine index out of range");
    }
    BasisState s(inst.machine_bits() + inst.q_bits());
    s.set_field(0, inst.machine_bits(), machine);
    s.set_field(inst.machine_bits(), inst.q_bits(), inst.time(job, machine));
    return s;
}

std::vector<std::pair<std::complex<double>, BasisState>> job_superposition(std::uint32_t job,
                                                                           const Instance &inst) {
    const double amp = 1.0 / std::sqrt(static_cast<double>(inst.n_machines()));
    std::vector<std::pair<std::complex<double>, BasisState>> out;
    out.reserve(inst.n_machines());
    for (std::uint32_t j = 0; j < inst.n_machines(); ++j) {
        out.emplace_back(std::complex<double>(amp, 0.0), encode_job_machine(job, j, inst));
    }
    return out;
}

BasisState schedule_basis(const Assignment &a, const Instance &inst) {
    validate(a, inst);
    const RegisterLayout layout = RegisterLayout::of(inst);
    BasisState s(layout.schedule_width());
    for (std::uint32_t i = 0; i < inst.n_jobs(); ++i) {
        const std::uint32_t j = a.machine_of[i];
        s.set_field(layout.job_index_offset(i), layout.machine_bits, j);
        s.set_field(layout.job_time_offset(i), layout.time_bits, inst.time(i, j));
    }
    return s;
}

BasisState schedule_basis(ScheduleIndex k, const Instance &inst) {
    return schedule_basis(index_to_assignment(k, inst), inst);
}

Assignment decode_schedule(const BasisState &schedule, const Instance &inst) {
    const RegisterLayout layout = RegisterLayout::of(inst);
    if (schedule.width() < layout.schedule_width()) {
        throw Error(ErrorKind::InvalidArgument, "state of width " + std::to_string(schedule.width()) +
                                                    " cannot hold a schedule register of width " +
                                                    std::to_string(layout.schedule_width()));
    }
    Assignment a;
    a.machine_of.resize(inst.n_jobs());
    for (std::uint32_t i = 0; i < inst.n_jobs(); ++i) {
        const auto j = static_cast<std::uint32_t>(schedule.field(layout.job_index_offset(i), layout.machine_bits));
        const std::uint64_t t = schedule.field(layout.job_time_offset(i), layout.time_bits);
        if (t != inst.time(i, j)) {
            throw Error(ErrorKind::InconsistentTimeField,
                        "job J" + std::to_string(i + 1) + " claims time " + std::to_string(t) + " on M" +
                            std::to_string(j + 1) + " but T = " + std::to_string(inst.time(i, j)));
        }
        a.machine_of[i] = j;
    }
    return a;
}

ScheduleIndex schedule_index_bits(const BasisState &state, const RegisterLayout &layout) {
    std::uint64_t k = 0;
    for (std::uint32_t i = 0; i < layout.n_jobs; ++i) {
        k = (k << layout.machine_bits) | state.field(layout.job_index_offset(i), layout.machine_bits);
    }
    return ScheduleIndex{k};
}

std::string render_job_ket(const BasisState &job_state, const RegisterLayout &layout) {
    const std::string b = job_state.bits();
    const auto m = static_cast<std::size_t>(layout.machine_bits);
    if (m == 0) return "|" + b + ">";
    return "|" + b.substr(0, m) + "_" + b.substr(m) + ">";
}

std::string render_ket(const BasisState &state, const RegisterLayout &layout) {
    const std::string b = state.bits();
    const auto m = static_cast<std::size_t>(layout.machine_bits);
    const auto jw = static_cast<std::size_t>(layout.job_width());
    std::string out = "|";
    std::size_t pos = 0;
    for (std::uint32_t i = 0; i < layout.n_jobs && pos + jw <= b.size(); ++i, pos += jw) {
        if (i) out += ' ';
        out += m ? b.substr(pos, m) + "_" + b.substr(pos + m, jw - m) : b.substr(pos, jw);
    }
    const auto lw = static_cast<std::size_t>(layout.load_bits);
    while (pos + lw <= b.size() && lw > 0) {
        out += ' ';
        out += b.substr(pos, lw);
        pos += lw;
    }
    return out + ">";
}

std::string plain_ket(const BasisState &state) { return "|" + state.bits() + ">"; }

}  // namespace qsched
