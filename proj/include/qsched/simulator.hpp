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
#include <map>
#include <span>
#include <string>
#include <vector>

#include "qsched/encoding.hpp"
#include "qsched/instance.hpp"

namespace qsched {

using Amplitude = std::complex<double>;

enum class Backend { Compact, Full };

const char *backend_name(Backend backend);
Backend parse_backend(const std::string &name);

/// Largest log2(sigma) each backend accepts.
inline constexpr int kFullCapacityBits = 16;
inline constexpr int kCompactCapacityBits = 24;

/// Throws CapacityExceeded when the instance's schedule space is too large
/// for the backend.
void check_capacity(const Instance &inst, Backend backend);

/// Dense amplitudes over schedule indices. Valid because the load and
/// makespan registers are functions of the schedule register.
struct CompactState {
    std::vector<Amplitude> amps;
};

/// Sparse amplitudes over full-register basis states |S>|T>|Cmax>.
class StateVector {
public:
    explicit StateVector(const RegisterLayout &layout) : layout_(layout) {}

    const RegisterLayout &layout() const { return layout_; }
    std::map<BasisState, Amplitude> &amps() { return amps_; }
    const std::map<BasisState, Amplitude> &amps() const { return amps_; }

    Amplitude amplitude(const BasisState &b) const {
        auto it = amps_.find(b);
        return it == amps_.end() ? Amplitude{} : it->second;
    }

private:
    RegisterLayout layout_;
    std::map<BasisState, Amplitude> amps_;
};

/// e^{i angle}, exact for 0 and pi.
Amplitude unit_phase(double angle);

double norm_squared(const CompactState &state);
double norm_squared(const StateVector &state);
Amplitude inner_product(const CompactState &a, const CompactState &b);
Amplitude inner_product(const StateVector &a, const StateVector &b);

/// In-place normalized Walsh-Hadamard transform; size must be a power of two.
void walsh_hadamard(std::span<Amplitude> amps);

// --- compact backend -------------------------------------------------------

/// Uniform 1/sqrt(sigma) on every index.
CompactState prepare_compact(const Instance &inst);
CompactState compact_point(const Instance &inst, ScheduleIndex k);
/// Uniform-preparation unitary on schedule space (Walsh-Hadamard over the
/// m*N index qubits). Self-inverse.
CompactState apply_Z(CompactState state, const Instance &inst);
CompactState apply_Z_inverse(CompactState state, const Instance &inst);

// --- full backend ----------------------------------------------------------

/// Amplitude 1 on the all-zero register.
StateVector zero_state(const Instance &inst);
/// Basis state |S_k>|T(S_k)>|Cmax(S_k)> with amplitude 1.
StateVector full_point(const Instance &inst, ScheduleIndex k);

/// Job superposition step: H on every index qubit, then loads T[i][j] into
/// each job's time field controlled by its index. Requires all time, load
/// and makespan fields to be zero (NonZeroTarget).
StateVector apply_job_preparation(StateVector state, const Instance &inst);
/// Inverse of apply_job_preparation. Throws NonScheduleState when a time
/// field disagrees with its index or an ancilla register is populated.
StateVector unapply_job_preparation(StateVector state, const Instance &inst);

/// Omega: |S, 0, c> -> |S, T(S), c>, where T(S)_j sums the time fields of the
/// job subregisters whose index field is j. NonZeroTarget if a load register
/// is populated.
StateVector apply_omega(StateVector state, const Instance &inst);
/// Uncomputes the load registers. NonScheduleState if they do not hold T(S).
StateVector unapply_omega(StateVector state, const Instance &inst);

/// Delta: |S, T, 0> -> |S, T, max_j T_j>. NonZeroTarget if the makespan
/// register is populated.
StateVector apply_delta(StateVector state, const Instance &inst);
StateVector unapply_delta(StateVector state, const Instance &inst);

/// Z = Delta . Omega . job preparation.
StateVector apply_Z(StateVector state, const Instance &inst);
StateVector apply_Z_inverse(StateVector state, const Instance &inst);

/// Z applied to the zero state.
StateVector prepare_full(const Instance &inst);

/// Amplitude of schedule k read off the full register. NonScheduleState if
/// any support state is not a populated schedule state.
CompactState project_schedule_amplitudes(const StateVector &state, const Instance &inst);

/// `<ket> <re> <im>` per line, ascending basis value.
std::string dump_state(const StateVector &state);
/// Same format; kets are the schedule registers of each index.
std::string dump_state(const CompactState &state, const Instance &inst);

}  // namespace qsched
