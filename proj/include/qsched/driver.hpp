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
#include <optional>
#include <string>
#include <vector>

#include "qsched/bruteforce.hpp"
#include "qsched/search.hpp"

namespace qsched {

/// Attempts per deadline in exact-count mode before the scan moves on.
inline constexpr int kExactAttemptsPerTarget = 32;
/// Adaptive searches per deadline.
inline constexpr int kAdaptiveAttemptsPerTarget = 2;

struct MinimizeResult {
    std::uint64_t value = 0;
    ScheduleIndex index;
    Assignment assignment;
    /// Deadlines passed over without running a search (exact-count mode knows
    /// their level set is empty).
    std::uint64_t skipped = 0;
    /// (deadline, report) for every search run, in scan order.
    std::vector<std::pair<std::uint64_t, SearchReport>> reports;
};

/// Seed for attempt `attempt` at deadline `target`, derived from the run seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t target, std::uint64_t attempt);

/// Scans mu = lo, lo+1, ... hi with point targets [mu, mu] and returns the
/// first deadline with a verified schedule. lo defaults to 0 and hi to the
/// metric ceiling. NoScheduleInRange when the scan is exhausted.
MinimizeResult minimize(const Instance &inst, Metric metric, std::optional<std::uint64_t> lo,
                        std::optional<std::uint64_t> hi, const SearchParams &params, Backend backend);

struct IntersectResult {
    /// Intersection after dropping, ascending.
    std::vector<ScheduleIndex> schedules;
    /// Positions (into the input list) of dropped predicates, in drop order.
    std::vector<std::size_t> dropped;
    /// Verified witness per predicate from the quantum search, if one exists.
    std::vector<std::optional<SearchReport>> witnesses;
};

/// Solution set per predicate, intersected. While the intersection is empty
/// predicates are dropped from the back of the list one at a time.
IntersectResult intersect_measures(const Instance &inst, const std::vector<Predicate> &preds,
                                   const SearchParams &params, Backend backend);

struct SweepRow {
    std::uint64_t iterations = 0;
    double predicted = 0.0;
    double simulated = 0.0;
};

/// Good-mass after R = 0..r_max Grover iterations on the compact backend,
/// next to the closed form sin^2((2R+1) theta).
std::vector<SweepRow> sweep(const Instance &inst, const Predicate &pred, std::uint64_t r_max);
std::string sweep_csv(const std::vector<SweepRow> &rows);

}  // namespace qsched
