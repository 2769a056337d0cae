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
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qsched/bruteforce.hpp"
#include "qsched/instance.hpp"
#include "qsched/simulator.hpp"

namespace qsched {

enum class SearchMode { ExactCount, Adaptive };

const char *mode_name(SearchMode mode);
SearchMode parse_mode(const std::string &name);

/// Phases of Q = -Z S0(phi) Z^-1 S_chi(varphi). Both default to pi, the
/// plain Grover reflection pair.
struct SearchParams {
    double phi = std::numbers::pi;
    double varphi = std::numbers::pi;
    std::optional<std::uint64_t> iterations;  // forces R
    SearchMode mode = SearchMode::ExactCount;
    std::uint64_t seed = 0;
};

void validate(const SearchParams &params);

struct SearchReport {
    std::uint64_t sigma = 0;
    std::optional<std::uint64_t> solution_count;  // exact-count mode only
    std::optional<double> theta;                  // arcsin(sqrt(count / sigma))
    std::uint64_t iterations_run = 0;             // summed over attempts
    std::uint64_t attempts = 1;
    std::optional<double> predicted_success;      // closed form, phi = varphi = pi
    ScheduleIndex measured_index;
    Assignment measured_assignment;
    bool verified = false;
    std::uint64_t metric_value = 0;
};

/// Good-set membership per schedule index, from the classical evaluator.
std::vector<std::uint8_t> good_marks(const Instance &inst, const Predicate &pred);

/// S_chi: Good amplitudes times e^{i varphi}; Bad amplitudes untouched.
CompactState oracle_apply(CompactState state, const std::vector<std::uint8_t> &good, double varphi);
CompactState oracle_apply(CompactState state, const Predicate &pred, double varphi, const Instance &inst);
/// Full backend: for makespan predicates only the Cmax register is read.
/// Flowtime predicates are evaluated from the schedule register.
StateVector oracle_apply(StateVector state, const Predicate &pred, double varphi, const Instance &inst);

/// -Z S0(phi) Z^-1. The compact backend uses the closed form
/// -(e^{i phi} x + (1 - e^{i phi}) <psi|x> psi) with psi uniform; the full
/// backend runs Z^-1, S0 and Z on the registers.
CompactState diffusion_apply(CompactState state, double phi);
StateVector diffusion_apply(StateVector state, double phi, const Instance &inst);

CompactState grover_iterate(CompactState state, const std::vector<std::uint8_t> &good, const SearchParams &params);
CompactState grover_iterate(CompactState state, const Predicate &pred, const SearchParams &params,
                            const Instance &inst);
StateVector grover_iterate(StateVector state, const Predicate &pred, const SearchParams &params,
                           const Instance &inst);

/// Argmax of sin^2((2R+1) theta) over R0-1, R0, R0+1 with
/// R0 = floor(pi/4 sqrt(sigma/count)); ties go to the smaller R.
std::uint64_t iteration_count(std::uint64_t sigma, std::uint64_t count);

/// sin^2((2R+1) arcsin(sqrt(count/sigma))).
double success_probability(std::uint64_t iterations, std::uint64_t sigma, std::uint64_t count);

/// Samples an index with probability |amplitude|^2 (relative to the norm).
ScheduleIndex measure(const CompactState &state, std::mt19937_64 &rng);
ScheduleIndex measure(const StateVector &state, std::mt19937_64 &rng);

/// Analytics only: probability mass on the Good set. The search path never
/// reads it.
double good_mass(const CompactState &state, const std::vector<std::uint8_t> &good);
double good_mass(const StateVector &state, const Predicate &pred, const Instance &inst);

/// Prepares, amplifies, measures once (per attempt) and verifies the
/// measured schedule classically.
///
/// Exact-count mode takes the solution count from the exhaustive oracle,
/// throws NoSolution when it is zero (unless `iterations` forces a run).
/// Adaptive mode guesses iteration counts with randomized doubling and
/// throws AdaptiveCutoffExceeded once 3 sqrt(sigma) iterations are spent.
SearchReport run_search(const Instance &inst, const Predicate &pred, const SearchParams &params,
                        Backend backend);

}  // namespace qsched
