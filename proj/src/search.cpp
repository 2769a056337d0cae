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

#include "qsched/search.hpp"

#include <algorithm>
#include <cmath>

#include "qsched/error.hpp"
#include "qsched/parallel.hpp"

namespace qsched {

const char *mode_name(SearchMode mode) { return mode == SearchMode::ExactCount ? "exact" : "adaptive"; }

SearchMode parse_mode(const std::string &name) {
    if (name == "exact") return SearchMode::ExactCount;
    if (name == "adaptive") return SearchMode::Adaptive;
    throw Error(ErrorKind::InvalidArgument, "unknown mode '" + name + "' (expected exact|adaptive)");
}

void validate(const SearchParams &params) {
    auto in_range = [](double a) { return a >= 0.0 && a <= std::numbers::pi; };
    if (!in_range(params.phi) || !in_range(params.varphi)) {
        throw Error(ErrorKind::InvalidArgument, "phases must lie in [0, pi]");
    }
    if (params.mode == SearchMode::Adaptive && params.iterations) {
        throw Error(ErrorKind::InvalidArgument, "adaptive mode chooses its own iteration counts");
    }
}

std::vector<std::uint8_t> good_marks(const Instance &inst, const Predicate &pred) {
    const std::vector<std::uint64_t> table = metric_table(inst, pred.metric);
    std::vector<std::uint8_t> good(table.size());
    for (std::size_t k = 0; k < table.size(); ++k) good[k] = pred.accepts(table[k]) ? 1 : 0;
    return good;
}

// --- oracle ----------------------------------------------------------------

CompactState oracle_apply(CompactState state, const std::vector<std::uint8_t> &good, double varphi) {
    if (good.size() != state.amps.size()) throw Error(ErrorKind::InvalidArgument, "oracle size mismatch");
    const Amplitude phase = unit_phase(varphi);
    parallel_chunks(state.amps.size(), [&](std::size_t, std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t k = begin; k < end; ++k) {
            if (good[k]) state.amps[k] *= phase;
        }
    });
    return state;
}

CompactState oracle_apply(CompactState state, const Predicate &pred, double varphi, const Instance &inst) {
    return oracle_apply(std::move(state), good_marks(inst, pred), varphi);
}

namespace {

bool full_state_is_good(const BasisState &b, const Predicate &pred, const Instance &inst) {
    const RegisterLayout l = RegisterLayout::of(inst);
    if (pred.metric == Metric::Makespan) return pred.accepts(b.field(l.makespan_offset(), l.makespan_width()));
    return pred.accepts(total_flowtime(decode_schedule(b, inst), inst));
}

}  // namespace

StateVector oracle_apply(StateVector state, const Predicate &pred, double varphi, const Instance &inst) {
    const Amplitude phase = unit_phase(varphi);
    for (auto &[b, amp] : state.amps()) {
        if (full_state_is_good(b, pred, inst)) amp *= phase;
    }
    return state;
}

// --- diffusion -------------------------------------------------------------

CompactState diffusion_apply(CompactState state, double phi) {
    const std::uint64_t sigma = state.amps.size();
    const Amplitude sum = chunked_sum(sigma, Amplitude{}, [&](std::uint64_t k) { return state.amps[k]; });
    const Amplitude mean = sum / static_cast<double>(sigma);
    const Amplitude phase = unit_phase(phi);
    const Amplitude shift = (1.0 - phase) * mean;
    parallel_chunks(sigma, [&](std::size_t, std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t k = begin; k < end; ++k) state.amps[k] = -(phase * state.amps[k] + shift);
    });
    return state;
}

StateVector diffusion_apply(StateVector state, double phi, const Instance &inst) {
    StateVector reduced = apply_Z_inverse(std::move(state), inst);
    const Amplitude phase = unit_phase(phi);
    for (auto &[b, amp] : reduced.amps()) {
        if (!b.is_zero()) amp *= phase;
    }
    StateVector out = apply_Z(std::move(reduced), inst);
    for (auto &[b, amp] : out.amps()) amp = -amp;
    return out;
}

// --- iteration -------------------------------------------------------------

CompactState grover_iterate(CompactState state, const std::vector<std::uint8_t> &good, const SearchParams &params) {
    return diffusion_apply(oracle_apply(std::move(state), good, params.varphi), params.phi);
}

CompactState grover_iterate(CompactState state, const Predicate &pred, const SearchParams &params,
                            const Instance &inst) {
    return grover_iterate(std::move(state), good_marks(inst, pred), params);
}

StateVector grover_iterate(StateVector state, const Predicate &pred, const SearchParams &params,
                           const Instance &inst) {
    return diffusion_apply(oracle_apply(std::move(state), pred, params.varphi, inst), params.phi, inst);
}

double success_probability(std::uint64_t iterations, std::uint64_t sigma, std::uint64_t count) {
    if (sigma == 0 || count > sigma) throw Error(ErrorKind::InvalidArgument, "need count <= sigma and sigma > 0");
    const double theta = std::asin(std::sqrt(static_cast<double>(count) / static_cast<double>(sigma)));
    const double s = std::sin((2.0 * static_cast<double>(iterations) + 1.0) * theta);
    return s * s;
}

std::uint64_t iteration_count(std::uint64_t sigma, std::uint64_t count) {
    if (count == 0) throw Error(ErrorKind::ZeroCount, "no Good schedules; use adaptive mode or a wider target");
    if (count > sigma) throw Error(ErrorKind::InvalidArgument, "count exceeds sigma");
    const auto base = static_cast<std::uint64_t>(
        std::floor(std::numbers::pi / 4.0 * std::sqrt(static_cast<double>(sigma) / static_cast<double>(count))));
    std::uint64_t best = base == 0 ? 0 : base - 1;
    double best_p = success_probability(best, sigma, count);
    for (std::uint64_t r = best + 1; r <= base + 1; ++r) {
        const double p = success_probability(r, sigma, count);
        if (p > best_p + 1e-12) {
            best = r;
            best_p = p;
        }
    }
    return best;
}

// --- measurement -----------------------------------------------------------

namespace {

double unit_draw(std::mt19937_64 &rng) { return static_cast<double>(rng() >> 11) * 0x1p-53; }

}  // namespace

ScheduleIndex measure(const CompactState &state, std::mt19937_64 &rng) {
    const double total = norm_squared(state);
    const double target = unit_draw(rng) * total;
    double acc = 0.0;
    std::uint64_t last = 0;
    for (std::uint64_t k = 0; k < state.amps.size(); ++k) {
        const double p = std::norm(state.amps[k]);
        if (p == 0.0) continue;
        acc += p;
        last = k;
        if (acc > target) return ScheduleIndex{k};
    }
    return ScheduleIndex{last};
}

ScheduleIndex measure(const StateVector &state, std::mt19937_64 &rng) {
    const double total = norm_squared(state);
    const double target = unit_draw(rng) * total;
    double acc = 0.0;
    ScheduleIndex last;
    for (const auto &[b, amp] : state.amps()) {
        const double p = std::norm(amp);
        if (p == 0.0) continue;
        acc += p;
        last = schedule_index_bits(b, state.layout());
        if (acc > target) return last;
    }
    return last;
}

double good_mass(const CompactState &state, const std::vector<std::uint8_t> &good) {
    return chunked_sum(state.amps.size(), 0.0,
                       [&](std::uint64_t k) { return good[k] ? std::norm(state.amps[k]) : 0.0; });
}

double good_mass(const StateVector &state, const Predicate &pred, const Instance &inst) {
    double mass = 0.0;
    for (const auto &[b, amp] : state.amps()) {
        if (full_state_is_good(b, pred, inst)) mass += std::norm(amp);
    }
    return mass;
}

// --- driver ----------------------------------------------------------------

namespace {

/// One prepare / amplify / measure round on the chosen backend.
class Amplifier {
public:
    Amplifier(const Instance &inst, const Predicate &pred, const SearchParams &params, Backend backend)
        : inst_(inst), pred_(pred), params_(params), backend_(backend) {
        if (backend_ == Backend::Compact) good_ = good_marks(inst, pred);
    }

    const std::vector<std::uint8_t> &good() const { return good_; }

    ScheduleIndex run(std::uint64_t iterations, std::mt19937_64 &rng) const {
        if (backend_ == Backend::Compact) {
            CompactState state = prepare_compact(inst_);
            for (std::uint64_t r = 0; r < iterations; ++r) state = grover_iterate(std::move(state), good_, params_);
            return measure(state, rng);
        }
        StateVector state = prepare_full(inst_);
        for (std::uint64_t r = 0; r < iterations; ++r) state = grover_iterate(std::move(state), pred_, params_, inst_);
        return measure(state, rng);
    }

private:
    const Instance &inst_;
    const Predicate &pred_;
    const SearchParams &params_;
    Backend backend_;
    std::vector<std::uint8_t> good_;
};

void record_measurement(SearchReport &report, ScheduleIndex k, const Predicate &pred, const Instance &inst) {
    report.measured_index = k;
    report.measured_assignment = index_to_assignment(k, inst);
    report.metric_value = metric_value(pred.metric, report.measured_assignment, inst);
    report.verified = pred.accepts(report.metric_value);
}

}  // namespace

SearchReport run_search(const Instance &inst, const Predicate &pred, const SearchParams &params, Backend backend) {
    validate(pred, inst);
    validate(params);
    check_capacity(inst, backend);

    const Amplifier amplifier(inst, pred, params, backend);
    std::mt19937_64 rng(params.seed);
    SearchReport report;
    report.sigma = inst.schedule_count();
    const bool grover_phases = params.phi == std::numbers::pi && params.varphi == std::numbers::pi;

    if (params.mode == SearchMode::ExactCount) {
        std::uint64_t count = 0;
        if (backend == Backend::Compact) {
            for (std::uint8_t g : amplifier.good()) count += g;
        } else {
            count = count_solutions(inst, pred);
        }
        report.solution_count = count;
        report.theta = std::asin(std::sqrt(static_cast<double>(count) / static_cast<double>(report.sigma)));
        if (count == 0 && !params.iterations) {
            throw Error(ErrorKind::NoSolution, "no schedule satisfies " + format_predicate(pred));
        }
        const std::uint64_t r = params.iterations ? *params.iterations : iteration_count(report.sigma, count);
        report.iterations_run = r;
        if (grover_phases) report.predicted_success = success_probability(r, report.sigma, count);
        record_measurement(report, amplifier.run(r, rng), pred, inst);
        return report;
    }

    // Randomized doubling for an unknown count: guess bound m (growth 6/5,
    // capped at sqrt(sigma)), run j ~ U{0..ceil(m)-1} iterations, measure.
    const double root = std::sqrt(static_cast<double>(report.sigma));
    const double budget = 3.0 * root;
    double bound = 1.0;
    std::uint64_t spent = 0;
    report.attempts = 0;
    while (static_cast<double>(spent) < budget) {
        const auto span = static_cast<std::uint64_t>(std::ceil(bound));
        const std::uint64_t j = rng() % span;
        spent += std::max<std::uint64_t>(j, 1);
        report.iterations_run += j;
        ++report.attempts;
        record_measurement(report, amplifier.run(j, rng), pred, inst);
        if (report.verified) return report;
        bound = std::min(bound * 6.0 / 5.0, root);
    }
    throw Error(ErrorKind::AdaptiveCutoffExceeded, "no verified schedule for " + format_predicate(pred) + " after " +
                                                       std::to_string(spent) + " iterations");
}

}  // namespace qsched
