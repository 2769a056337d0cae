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

#include "qsched/driver.hpp"

#include <algorithm>
#include <cstdio>
#include <iterator>

#include "qsched/error.hpp"

namespace qsched {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t target, std::uint64_t attempt) {
    // splitmix64 finalizer over a mix of the three inputs
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (target + 1) + 0xbf58476d1ce4e5b9ULL * (attempt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

namespace {

/// Runs up to `attempts` searches on [mu, mu]; returns true on a verified hit.
bool search_target(const Instance &inst, Metric metric, std::uint64_t mu, const SearchParams &params,
                   Backend backend, int attempts, MinimizeResult &result) {
    for (int a = 0; a < attempts; ++a) {
        SearchParams p = params;
        p.seed = derive_seed(params.seed, mu, static_cast<std::uint64_t>(a));
        SearchReport report;
        try {
            report = run_search(inst, Predicate{metric, mu, mu}, p, backend);
        } catch (const Error &e) {
            if (e.kind() == ErrorKind::NoSolution || e.kind() == ErrorKind::AdaptiveCutoffExceeded) return false;
            throw;
        }
        result.reports.emplace_back(mu, report);
        if (report.verified) {
            result.value = mu;
            result.index = report.measured_index;
            result.assignment = report.measured_assignment;
            return true;
        }
    }
    return false;
}

}  // namespace

MinimizeResult minimize(const Instance &inst, Metric metric, std::optional<std::uint64_t> lo,
                        std::optional<std::uint64_t> hi, const SearchParams &params, Backend backend) {
    const std::uint64_t first = lo.value_or(0);
    const std::uint64_t last = hi.value_or(metric_ceiling(metric, inst));
    validate(Predicate{metric, first, last}, inst);
    validate(params);
    check_capacity(inst, backend);

    MinimizeResult result;
    if (params.mode == SearchMode::ExactCount) {
        const MetricHistogram hist = enumerate_metrics(inst, metric);
        std::uint64_t mu = first;
        for (auto it = hist.counts.lower_bound(first); it != hist.counts.end() && it->first <= last; ++it) {
            result.skipped += it->first - mu;
            if (search_target(inst, metric, it->first, params, backend, kExactAttemptsPerTarget, result)) {
                return result;
            }
            mu = it->first + 1;
        }
    } else {
        for (std::uint64_t mu = first;; ++mu) {
            if (search_target(inst, metric, mu, params, backend, kAdaptiveAttemptsPerTarget, result)) return result;
            if (mu == last) break;
        }
    }
    throw Error(ErrorKind::NoScheduleInRange, "no schedule with " + std::string(metric_name(metric)) + " in [" +
                                                  std::to_string(first) + ", " + std::to_string(last) + "]");
}

IntersectResult intersect_measures(const Instance &inst, const std::vector<Predicate> &preds,
                                   const SearchParams &params, Backend backend) {
    if (preds.empty()) throw Error(ErrorKind::InvalidArgument, "need at least one predicate");
    if (params.mode != SearchMode::ExactCount) {
        throw Error(ErrorKind::InvalidArgument, "intersection runs in exact-count mode");
    }
    IntersectResult result;
    std::vector<std::vector<ScheduleIndex>> sets;
    for (std::size_t i = 0; i < preds.size(); ++i) {
        validate(preds[i], inst);
        sets.push_back(solution_set(inst, preds[i]));
        std::optional<SearchReport> witness;
        if (!sets.back().empty()) {
            for (int a = 0; a < kExactAttemptsPerTarget; ++a) {
                SearchParams p = params;
                p.seed = derive_seed(params.seed, i, static_cast<std::uint64_t>(a));
                SearchReport r = run_search(inst, preds[i], p, backend);
                if (r.verified) {
                    witness = r;
                    break;
                }
            }
        }
        result.witnesses.push_back(witness);
    }

    std::size_t active = preds.size();
    for (;;) {
        std::vector<ScheduleIndex> acc = sets[0];
        for (std::size_t i = 1; i < active; ++i) {
            std::vector<ScheduleIndex> next;
            std::set_intersection(acc.begin(), acc.end(), sets[i].begin(), sets[i].end(), std::back_inserter(next));
            acc = std::move(next);
        }
        if (!acc.empty() || active == 1) {
            result.schedules = std::move(acc);
            return result;
        }
        --active;
        result.dropped.push_back(active);
    }
}

std::vector<SweepRow> sweep(const Instance &inst, const Predicate &pred, std::uint64_t r_max) {
    validate(pred, inst);
    check_capacity(inst, Backend::Compact);
    const std::vector<std::uint8_t> good = good_marks(inst, pred);
    std::uint64_t count = 0;
    for (std::uint8_t g : good) count += g;
    const std::uint64_t sigma = inst.schedule_count();
    const SearchParams params;
    std::vector<SweepRow> rows;
    CompactState state = prepare_compact(inst);
    for (std::uint64_t r = 0;; ++r) {
        rows.push_back(SweepRow{r, success_probability(r, sigma, count), good_mass(state, good)});
        if (r == r_max) break;
        state = grover_iterate(std::move(state), good, params);
    }
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow> &rows) {
    std::string out = "R,predicted,simulated\n";
    char buf[96];
    for (const SweepRow &row : rows) {
        std::snprintf(buf, sizeof buf, "%llu,%.17g,%.17g\n", static_cast<unsigned long long>(row.iterations),
                      row.predicted, row.simulated);
        out += buf;
    }
    return out;
}

}  // namespace qsched
