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

#include "qsched/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "qsched/error.hpp"
#include "qsched/parallel.hpp"

namespace qsched {

const char *backend_name(Backend backend) { return backend == Backend::Compact ? "compact" : "full"; }

Backend parse_backend(const std::string &name) {
    if (name == "compact") return Backend::Compact;
    if (name == "full") return Backend::Full;
    throw Error(ErrorKind::InvalidArgument, "unknown backend '" + name + "' (expected compact|full)");
}

void check_capacity(const Instance &inst, Backend backend) {
    const int cap = backend == Backend::Compact ? kCompactCapacityBits : kFullCapacityBits;
    if (inst.schedule_bits() > cap) {
        throw Error(ErrorKind::CapacityExceeded, std::string(backend_name(backend)) + " backend holds at most 2^" +
                                                     std::to_string(cap) + " schedules, instance has 2^" +
                                                     std::to_string(inst.schedule_bits()));
    }
}

Amplitude unit_phase(double angle) {
    if (angle == 0.0) return {1.0, 0.0};
    if (angle == std::numbers::pi) return {-1.0, 0.0};
    return std::polar(1.0, angle);
}

double norm_squared(const CompactState &state) {
    return chunked_sum(state.amps.size(), 0.0, [&](std::uint64_t k) { return std::norm(state.amps[k]); });
}

double norm_squared(const StateVector &state) {
    double total = 0.0;
    for (const auto &[basis, amp] : state.amps()) total += std::norm(amp);
    return total;
}

Amplitude inner_product(const CompactState &a, const CompactState &b) {
    if (a.amps.size() != b.amps.size()) throw Error(ErrorKind::InvalidArgument, "state size mismatch");
    return chunked_sum(a.amps.size(), Amplitude{}, [&](std::uint64_t k) { return std::conj(a.amps[k]) * b.amps[k]; });
}

Amplitude inner_product(const StateVector &a, const StateVector &b) {
    Amplitude total{};
    for (const auto &[basis, amp] : a.amps()) total += std::conj(amp) * b.amplitude(basis);
    return total;
}

void walsh_hadamard(std::span<Amplitude> amps) {
    const std::size_t n = amps.size();
    if (n == 0 || (n & (n - 1)) != 0) throw Error(ErrorKind::InvalidArgument, "Walsh-Hadamard size must be 2^k");
    for (std::size_t half = 1; half < n; half <<= 1) {
        for (std::size_t base = 0; base < n; base += 2 * half) {
            for (std::size_t i = base; i < base + half; ++i) {
                const Amplitude a = amps[i];
                const Amplitude b = amps[i + half];
                amps[i] = a + b;
                amps[i + half] = a - b;
            }
        }
    }
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (Amplitude &a : amps) a *= scale;
}

// --- compact ---------------------------------------------------------------

CompactState prepare_compact(const Instance &inst) {
    check_capacity(inst, Backend::Compact);
    const std::uint64_t sigma = inst.schedule_count();
    return CompactState{std::vector<Amplitude>(sigma, Amplitude(1.0 / std::sqrt(static_cast<double>(sigma)), 0.0))};
}

CompactState compact_point(const Instance &inst, ScheduleIndex k) {
    check_capacity(inst, Backend::Compact);
    const std::uint64_t sigma = inst.schedule_count();
    if (k.value >= sigma) throw Error(ErrorKind::OutOfRange, "schedule index out of range");
    CompactState s{std::vector<Amplitude>(sigma)};
    s.amps[k.value] = 1.0;
    return s;
}

CompactState apply_Z(CompactState state, const Instance &inst) {
    if (state.amps.size() != inst.schedule_count()) throw Error(ErrorKind::InvalidArgument, "state size mismatch");
    walsh_hadamard(state.amps);
    return state;
}

CompactState apply_Z_inverse(CompactState state, const Instance &inst) { return apply_Z(std::move(state), inst); }

// --- full ------------------------------------------------------------------

namespace {

std::vector<std::uint64_t> register_loads(const BasisState &b, const RegisterLayout &l) {
    std::vector<std::uint64_t> loads(l.n_machines, 0);
    for (std::uint32_t i = 0; i < l.n_jobs; ++i) {
        const auto j = b.field(l.job_index_offset(i), l.machine_bits);
        loads[j] += b.field(l.job_time_offset(i), l.time_bits);
    }
    return loads;
}

bool loads_zero(const BasisState &b, const RegisterLayout &l) {
    return b.is_zero(l.schedule_width(), l.loads_width());
}

bool makespan_zero(const BasisState &b, const RegisterLayout &l) {
    return b.is_zero(l.makespan_offset(), l.makespan_width());
}

bool time_fields_zero(const BasisState &b, const RegisterLayout &l) {
    for (std::uint32_t i = 0; i < l.n_jobs; ++i) {
        if (b.field(l.job_time_offset(i), l.time_bits) != 0) return false;
    }
    return true;
}

void insert_unique(std::map<BasisState, Amplitude> &out, BasisState key, Amplitude amp) {
    auto [it, inserted] = out.emplace(std::move(key), amp);
    if (!inserted) throw Error(ErrorKind::InvalidArgument, "register map collided two basis states");
}

/// Basis state of schedule k with index fields set and, if `with_times`, the
/// time fields loaded. Ancilla registers stay zero.
BasisState schedule_state(std::uint64_t k, const Instance &inst, const RegisterLayout &l, bool with_times) {
    BasisState b(l.total_width());
    const std::uint64_t mask = inst.n_machines() - 1;
    for (std::uint32_t i = inst.n_jobs(); i-- > 0;) {
        const auto j = static_cast<std::uint32_t>(k & mask);
        b.set_field(l.job_index_offset(i), l.machine_bits, j);
        if (with_times) b.set_field(l.job_time_offset(i), l.time_bits, inst.time(i, j));
        if (l.machine_bits > 0) k >>= l.machine_bits;
    }
    return b;
}

}  // namespace

StateVector zero_state(const Instance &inst) {
    check_capacity(inst, Backend::Full);
    const RegisterLayout l = RegisterLayout::of(inst);
    StateVector s(l);
    s.amps().emplace(BasisState(l.total_width()), Amplitude(1.0, 0.0));
    return s;
}

StateVector full_point(const Instance &inst, ScheduleIndex k) {
    check_capacity(inst, Backend::Full);
    if (k.value >= inst.schedule_count()) throw Error(ErrorKind::OutOfRange, "schedule index out of range");
    const RegisterLayout l = RegisterLayout::of(inst);
    StateVector s(l);
    s.amps().emplace(schedule_state(k.value, inst, l, true), Amplitude(1.0, 0.0));
    return apply_delta(apply_omega(std::move(s), inst), inst);
}

StateVector apply_job_preparation(StateVector state, const Instance &inst) {
    check_capacity(inst, Backend::Full);
    const RegisterLayout &l = state.layout();
    std::vector<Amplitude> dense(inst.schedule_count());
    for (const auto &[b, amp] : state.amps()) {
        if (!time_fields_zero(b, l) || !loads_zero(b, l) || !makespan_zero(b, l)) {
            throw Error(ErrorKind::NonZeroTarget, "job preparation needs zeroed time, load and makespan registers");
        }
        dense[schedule_index_bits(b, l).value] = amp;
    }
    walsh_hadamard(dense);
    StateVector out(l);
    for (std::uint64_t k = 0; k < dense.size(); ++k) {
        if (dense[k] != Amplitude{}) insert_unique(out.amps(), schedule_state(k, inst, l, true), dense[k]);
    }
    return out;
}

StateVector unapply_job_preparation(StateVector state, const Instance &inst) {
    check_capacity(inst, Backend::Full);
    const RegisterLayout &l = state.layout();
    std::vector<Amplitude> dense(inst.schedule_count());
    for (const auto &[b, amp] : state.amps()) {
        if (!loads_zero(b, l) || !makespan_zero(b, l)) {
            throw Error(ErrorKind::NonScheduleState, "load or makespan register still populated");
        }
        try {
            decode_schedule(b, inst);
        } catch (const Error &e) {
            throw Error(ErrorKind::NonScheduleState, e.what());
        }
        dense[schedule_index_bits(b, l).value] = amp;
    }
    walsh_hadamard(dense);
    StateVector out(l);
    for (std::uint64_t k = 0; k < dense.size(); ++k) {
        if (dense[k] != Amplitude{}) insert_unique(out.amps(), schedule_state(k, inst, l, false), dense[k]);
    }
    return out;
}

StateVector apply_omega(StateVector state, const Instance &inst) {
    (void)inst;
    const RegisterLayout &l = state.layout();
    StateVector out(l);
    for (auto &[b, amp] : state.amps()) {
        if (!loads_zero(b, l)) throw Error(ErrorKind::NonZeroTarget, "load registers are not |0>");
        BasisState next = b;
        const auto loads = register_loads(b, l);
        for (std::uint32_t j = 0; j < l.n_machines; ++j) next.set_field(l.load_offset(j), l.load_bits, loads[j]);
        insert_unique(out.amps(), std::move(next), amp);
    }
    return out;
}

StateVector unapply_omega(StateVector state, const Instance &inst) {
    (void)inst;
    const RegisterLayout &l = state.layout();
    StateVector out(l);
    for (auto &[b, amp] : state.amps()) {
        BasisState next = b;
        const auto loads = register_loads(b, l);
        for (std::uint32_t j = 0; j < l.n_machines; ++j) {
            if (b.field(l.load_offset(j), l.load_bits) != loads[j]) {
                throw Error(ErrorKind::NonScheduleState, "load register of M" + std::to_string(j + 1) +
                                                             " does not hold the summed running time");
            }
            next.set_field(l.load_offset(j), l.load_bits, 0);
        }
        insert_unique(out.amps(), std::move(next), amp);
    }
    return out;
}

StateVector apply_delta(StateVector state, const Instance &inst) {
    (void)inst;
    const RegisterLayout &l = state.layout();
    StateVector out(l);
    for (auto &[b, amp] : state.amps()) {
        if (!makespan_zero(b, l)) throw Error(ErrorKind::NonZeroTarget, "makespan register is not |0>");
        std::uint64_t best = 0;
        for (std::uint32_t j = 0; j < l.n_machines; ++j) best = std::max(best, b.field(l.load_offset(j), l.load_bits));
        BasisState next = b;
        next.set_field(l.makespan_offset(), l.makespan_width(), best);
        insert_unique(out.amps(), std::move(next), amp);
    }
    return out;
}

StateVector unapply_delta(StateVector state, const Instance &inst) {
    (void)inst;
    const RegisterLayout &l = state.layout();
    StateVector out(l);
    for (auto &[b, amp] : state.amps()) {
        std::uint64_t best = 0;
        for (std::uint32_t j = 0; j < l.n_machines; ++j) best = std::max(best, b.field(l.load_offset(j), l.load_bits));
        if (b.field(l.makespan_offset(), l.makespan_width()) != best) {
            throw Error(ErrorKind::NonScheduleState, "makespan register does not hold the maximum load");
        }
        BasisState next = b;
        next.set_field(l.makespan_offset(), l.makespan_width(), 0);
        insert_unique(out.amps(), std::move(next), amp);
    }
    return out;
}

StateVector apply_Z(StateVector state, const Instance &inst) {
    return apply_delta(apply_omega(apply_job_preparation(std::move(state), inst), inst), inst);
}

StateVector apply_Z_inverse(StateVector state, const Instance &inst) {
    return unapply_job_preparation(unapply_omega(unapply_delta(std::move(state), inst), inst), inst);
}

StateVector prepare_full(const Instance &inst) { return apply_Z(zero_state(inst), inst); }

CompactState project_schedule_amplitudes(const StateVector &state, const Instance &inst) {
    check_capacity(inst, Backend::Full);
    const RegisterLayout &l = state.layout();
    CompactState out{std::vector<Amplitude>(inst.schedule_count())};
    for (const auto &[b, amp] : state.amps()) {
        Assignment a;
        try {
            a = decode_schedule(b, inst);
        } catch (const Error &e) {
            throw Error(ErrorKind::NonScheduleState, e.what());
        }
        const auto loads = machine_loads(a, inst);
        for (std::uint32_t j = 0; j < l.n_machines; ++j) {
            if (b.field(l.load_offset(j), l.load_bits) != loads[j]) {
                throw Error(ErrorKind::NonScheduleState, "load registers not populated for " + format_assignment(a));
            }
        }
        if (b.field(l.makespan_offset(), l.makespan_width()) != makespan(loads)) {
            throw Error(ErrorKind::NonScheduleState, "makespan register not populated for " + format_assignment(a));
        }
        out.amps[assignment_to_index(a, inst).value] = amp;
    }
    return out;
}

namespace {

std::string amp_line(const std::string &ket, Amplitude amp) {
    char buf[64];
    std::snprintf(buf, sizeof buf, " %.17g %.17g", amp.real(), amp.imag());
    return ket + buf + "\n";
}

}  // namespace

std::string dump_state(const StateVector &state) {
    std::string out;
    for (const auto &[b, amp] : state.amps()) out += amp_line(render_ket(b, state.layout()), amp);
    return out;
}

std::string dump_state(const CompactState &state, const Instance &inst) {
    const RegisterLayout l = RegisterLayout::of(inst);
    std::string out;
    for (std::uint64_t k = 0; k < state.amps.size(); ++k) {
        out += amp_line(render_ket(schedule_basis(ScheduleIndex{k}, inst), l), state.amps[k]);
    }
    return out;
}

}  // namespace qsched
