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

// qsched: quantum-search scheduling simulator for R||Cmax instances.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>

#include "qsched/bruteforce.hpp"
#include "qsched/driver.hpp"
#include "qsched/encoding.hpp"
#include "qsched/error.hpp"
#include "qsched/io.hpp"
#include "qsched/search.hpp"
#include "qsched/simulator.hpp"

using namespace qsched;

namespace {

constexpr int kExitNoSolution = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitInput = 4;

int exit_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NoSolution:
        case ErrorKind::NoScheduleInRange:
        case ErrorKind::AdaptiveCutoffExceeded:
            return kExitNoSolution;
        case ErrorKind::CapacityExceeded:
            return kExitCapacity;
        case ErrorKind::InputFormat:
            return kExitInput;
        default:
            return 1;
    }
}

std::uint64_t parse_bound(const std::string &text, std::uint64_t ceiling) {
    if (text == "max" || text == "inf") return ceiling;
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception &) {
        throw Error(ErrorKind::InvalidArgument, "not a bound: '" + text + "'");
    }
}

/// "LO" or "LO:HI"
std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string &text, std::uint64_t ceiling) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        const std::uint64_t v = parse_bound(text, ceiling);
        return {v, v};
    }
    return {parse_bound(text.substr(0, colon), ceiling), parse_bound(text.substr(colon + 1), ceiling)};
}

/// "metric:LO:HI"
Predicate parse_predicate(const std::string &text, const Instance &inst) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw Error(ErrorKind::InvalidArgument, "predicate must be metric:LO:HI");
    const Metric metric = parse_metric(text.substr(0, colon));
    const auto [lo, hi] = parse_range(text.substr(colon + 1), metric_ceiling(metric, inst));
    return Predicate{metric, lo, hi};
}

Assignment parse_assignment(const std::string &text) {
    Assignment a;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty() && (item[0] == 'M' || item[0] == 'm')) item = item.substr(1);
        const std::uint64_t label = parse_bound(item, 0);
        if (label == 0) throw Error(ErrorKind::InvalidArgument, "machine labels start at M1");
        a.machine_of.push_back(static_cast<std::uint32_t>(label - 1));
    }
    return a;
}

std::string amplitude_label(const Instance &inst) {
    const int m = inst.machine_bits();
    if (m == 0) return "1";
    if (m % 2 == 0) return "1/" + std::to_string(1u << (m / 2));
    return "1/sqrt(" + std::to_string(inst.n_machines()) + ")";
}

void print_job(std::uint32_t job, const Instance &inst) {
    const RegisterLayout layout = RegisterLayout::of(inst);
    const auto terms = job_superposition(job, inst);
    std::cout << "|J" << job + 1 << "> = " << amplitude_label(inst) << " (";
    for (std::size_t j = 0; j < terms.size(); ++j) std::cout << (j ? " + " : "") << plain_ket(terms[j].second);
    std::cout << ")\n";
    for (std::size_t j = 0; j < terms.size(); ++j) {
        std::cout << "  |e_" << job + 1 << "^" << j + 1 << "> = " << plain_ket(terms[j].second) << "  "
                  << render_job_ket(terms[j].second, layout) << "  M" << j + 1
                  << " T=" << inst.time(job, static_cast<std::uint32_t>(j)) << "\n";
    }
}

void print_schedule(const Assignment &a, const Instance &inst) {
    validate(a, inst);
    const RegisterLayout layout = RegisterLayout::of(inst);
    const ScheduleIndex k = assignment_to_index(a, inst);
    std::cout << "schedule " << format_assignment(a) << " index " << k.value << "\n";
    const BasisState s = schedule_basis(a, inst);
    for (std::uint32_t i = 0; i < inst.n_jobs(); ++i) {
        BasisState job(layout.job_width());
        job.set_field(0, layout.job_width(), s.field(layout.job_offset(i), layout.job_width()));
        std::cout << "  |J" << i + 1 << "> = " << plain_ket(job) << "  " << render_job_ket(job, layout) << "\n";
    }
    std::cout << "|S> = ";
    for (std::uint32_t i = 0; i < inst.n_jobs(); ++i) {
        std::cout << "|" << s.bits().substr(static_cast<std::size_t>(layout.job_offset(i)),
                                            static_cast<std::size_t>(layout.job_width()))
                  << ">";
    }
    std::cout << "\n";
    const StateVector full = full_point(inst, k);
    const BasisState &b = full.amps().begin()->first;
    std::cout << "|T> = ";
    for (std::uint32_t j = 0; j < inst.n_machines(); ++j) {
        BasisState load(layout.load_bits);
        load.set_field(0, layout.load_bits, b.field(layout.load_offset(j), layout.load_bits));
        std::cout << plain_ket(load);
    }
    std::cout << "\n";
    BasisState cmax(layout.makespan_width());
    cmax.set_field(0, layout.makespan_width(), b.field(layout.makespan_offset(), layout.makespan_width()));
    std::cout << "|Cmax> = " << plain_ket(cmax) << " = " << cmax.field(0, cmax.width()) << "\n";
    std::cout << "register " << render_ket(b, layout) << "\n";
}

struct CommonSearchFlags {
    std::string metric = "makespan";
    std::string backend = "compact";
    std::string mode = "exact";
    std::uint64_t seed = 0;
    double phi = std::numbers::pi;
    double varphi = std::numbers::pi;
    std::optional<std::uint64_t> iterations;

    SearchParams params() const {
        SearchParams p;
        p.phi = phi;
        p.varphi = varphi;
        p.iterations = iterations;
        p.mode = parse_mode(mode);
        p.seed = seed;
        return p;
    }
};

void add_metric(CLI::App *cmd, std::string &metric) {
    cmd->add_option("--metric", metric, "makespan|flowtime")->check(CLI::IsMember({"makespan", "flowtime"}));
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"qsched: quantum-search simulator for unrelated parallel machine scheduling"};
    app.require_subcommand(1);

    std::string file;
    CommonSearchFlags flags;
    std::string csv_out;
    std::string json_out;
    std::string target;
    std::string range;
    bool timing = false;
    std::uint64_t rmax = 0;
    std::optional<std::uint32_t> job;
    std::optional<std::uint64_t> schedule;
    std::string assign;
    std::vector<std::string> preds;

    auto *brute = app.add_subcommand("brute", "exhaustive histogram and optimum");
    brute->add_option("file", file)->required();
    add_metric(brute, flags.metric);
    brute->add_option("--csv", csv_out, "write the histogram as value,count CSV");

    auto *solve = app.add_subcommand("solve", "amplitude amplification for one target window");
    solve->add_option("file", file)->required();
    solve->add_option("--target", target, "LO[:HI]")->required();
    add_metric(solve, flags.metric);
    solve->add_option("--backend", flags.backend)->check(CLI::IsMember({"compact", "full"}));
    solve->add_option("--mode", flags.mode)->check(CLI::IsMember({"exact", "adaptive"}));
    solve->add_option("--seed", flags.seed);
    solve->add_option("--phi", flags.phi, "S0 phase in radians");
    solve->add_option("--varphi", flags.varphi, "oracle phase in radians");
    solve->add_option("--iterations", flags.iterations, "force R iterations");
    solve->add_option("--json", json_out, "also write the run report here");
    solve->add_flag("--timing", timing, "include wall_time_ms in the report");

    auto *minimize_cmd = app.add_subcommand("minimize", "deadline scan for the optimal value");
    minimize_cmd->add_option("file", file)->required();
    add_metric(minimize_cmd, flags.metric);
    minimize_cmd->add_option("--range", range, "LO:HI scan window");
    minimize_cmd->add_option("--seed", flags.seed);
    minimize_cmd->add_option("--backend", flags.backend)->check(CLI::IsMember({"compact", "full"}));
    minimize_cmd->add_option("--mode", flags.mode)->check(CLI::IsMember({"exact", "adaptive"}));

    auto *sweep_cmd = app.add_subcommand("sweep", "Good-mass against sin^2((2R+1) theta)");
    sweep_cmd->add_option("file", file)->required();
    sweep_cmd->add_option("--target", target, "LO[:HI]")->required();
    add_metric(sweep_cmd, flags.metric);
    sweep_cmd->add_option("--rmax", rmax)->required();
    sweep_cmd->add_option("--csv", csv_out, "output path (stdout if omitted)");

    auto *encode = app.add_subcommand("encode", "print register kets");
    encode->add_option("file", file)->required();
    encode->add_option("--job", job, "1-based job number");
    encode->add_option("--schedule", schedule, "schedule index");
    encode->add_option("--assign", assign, "machine per job, e.g. M1,M2,M1,M4");

    auto *intersect = app.add_subcommand("intersect", "schedules satisfying every predicate");
    intersect->add_option("file", file)->required();
    intersect->add_option("--pred", preds, "metric:LO:HI (repeatable)")->required();
    intersect->add_option("--seed", flags.seed);

    auto *dump = app.add_subcommand("dump", "debug dump of the prepared (and iterated) state");
    dump->add_option("file", file)->required();
    dump->add_option("--backend", flags.backend)->check(CLI::IsMember({"compact", "full"}));
    dump->add_option("--target", target, "LO[:HI], required with --iterations");
    add_metric(dump, flags.metric);
    dump->add_option("--iterations", flags.iterations);

    CLI11_PARSE(app, argc, argv);

    try {
        const Instance inst = load_instance(file);
        const Metric metric = parse_metric(flags.metric);
        const std::uint64_t ceiling = metric_ceiling(metric, inst);

        if (*brute) {
            const MetricHistogram hist = enumerate_metrics(inst, metric);
            const Optimum best = optimum(inst, metric);
            std::uint64_t total = 0;
            for (const auto &[value, count] : hist.counts) total += count;
            std::cout << "metric " << metric_name(metric) << "\n";
            std::cout << "total " << total << "\n";
            std::cout << "distinct_values " << hist.counts.size() << "\n";
            std::cout << "optimum " << best.value << " count " << hist.counts.at(best.value) << " witness "
                      << format_assignment(best.witness) << " index " << best.index.value << "\n";
            if (!csv_out.empty()) write_text_file(csv_out, histogram_csv(hist));
            return 0;
        }

        if (*solve) {
            const auto [lo, hi] = parse_range(target, ceiling);
            RunReport report;
            report.instance_digest = instance_digest(inst);
            report.predicate = Predicate{metric, lo, hi};
            report.backend = parse_backend(flags.backend);
            report.params = flags.params();
            const auto start = std::chrono::steady_clock::now();
            report.search = run_search(inst, report.predicate, report.params, report.backend);
            if (timing) {
                report.wall_time_ms =
                    std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            }
            const std::string text = to_json(report).dump(2) + "\n";
            std::cout << text;
            if (!json_out.empty()) write_text_file(json_out, text);
            return report.search.verified ? 0 : kExitNoSolution;
        }

        if (*minimize_cmd) {
            std::optional<std::uint64_t> lo, hi;
            if (!range.empty()) std::tie(lo, hi) = parse_range(range, ceiling);
            const MinimizeResult r = minimize(inst, metric, lo, hi, flags.params(), parse_backend(flags.backend));
            std::cout << metric_name(metric) << " " << r.value << "\n";
            std::cout << "schedule " << format_assignment(r.assignment) << " index " << r.index.value << "\n";
            std::cout << "searches " << r.reports.size() << " skipped " << r.skipped << "\n";
            return 0;
        }

        if (*sweep_cmd) {
            const auto [lo, hi] = parse_range(target, ceiling);
            const std::string csv = sweep_csv(sweep(inst, Predicate{metric, lo, hi}, rmax));
            if (csv_out.empty()) {
                std::cout << csv;
            } else {
                write_text_file(csv_out, csv);
            }
            return 0;
        }

        if (*encode) {
            if (job) {
                if (*job < 1 || *job > inst.n_jobs()) throw Error(ErrorKind::OutOfRange, "job number out of range");
                print_job(*job - 1, inst);
            } else if (schedule) {
                print_schedule(index_to_assignment(ScheduleIndex{*schedule}, inst), inst);
            } else if (!assign.empty()) {
                print_schedule(parse_assignment(assign), inst);
            } else {
                for (std::uint32_t i = 0; i < inst.n_jobs(); ++i) print_job(i, inst);
            }
            return 0;
        }

        if (*intersect) {
            std::vector<Predicate> parsed;
            for (const auto &p : preds) parsed.push_back(parse_predicate(p, inst));
            SearchParams params;
            params.seed = flags.seed;
            const IntersectResult r = intersect_measures(inst, parsed, params, Backend::Compact);
            for (std::size_t i = 0; i < parsed.size(); ++i) {
                std::cout << "pred " << i + 1 << " " << format_predicate(parsed[i]) << " witness "
                          << (r.witnesses[i] ? format_assignment(r.witnesses[i]->measured_assignment) : "none") << "\n";
            }
            for (std::size_t d : r.dropped) std::cout << "dropped " << d + 1 << " " << format_predicate(parsed[d]) << "\n";
            std::cout << "schedules " << r.schedules.size() << "\n";
            for (const ScheduleIndex &k : r.schedules) {
                std::cout << "  " << k.value << " " << format_assignment(index_to_assignment(k, inst)) << "\n";
            }
            return r.schedules.empty() ? kExitNoSolution : 0;
        }

        if (*dump) {
            const Backend backend = parse_backend(flags.backend);
            const std::uint64_t r = flags.iterations.value_or(0);
            std::optional<Predicate> pred;
            if (r > 0) {
                if (target.empty()) throw Error(ErrorKind::InvalidArgument, "--iterations needs --target");
                const auto [lo, hi] = parse_range(target, ceiling);
                pred = Predicate{metric, lo, hi};
            }
            const SearchParams params;
            if (backend == Backend::Full) {
                StateVector s = prepare_full(inst);
                for (std::uint64_t i = 0; i < r; ++i) s = grover_iterate(std::move(s), *pred, params, inst);
                std::cout << dump_state(s);
            } else {
                CompactState s = prepare_compact(inst);
                for (std::uint64_t i = 0; i < r; ++i) s = grover_iterate(std::move(s), *pred, params, inst);
                std::cout << dump_state(s, inst);
            }
            return 0;
        }
    } catch (const Error &e) {
        std::cerr << "qsched: " << e.what() << "\n";
        return exit_code(e.kind());
    }
    return 0;
}
