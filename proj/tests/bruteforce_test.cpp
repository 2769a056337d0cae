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

#include "qsched/bruteforce.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

#include "fixtures.hpp"
#include "qsched/error.hpp"

using namespace qsched;
using namespace qsched::testing;

TEST(EnumerateMetrics, two_by_two_makespan) {
    const MetricHistogram h = enumerate_metrics(two_by_two(), Metric::Makespan);
    EXPECT_EQ(h.sigma, 4u);
    EXPECT_EQ(h.counts, (std::map<std::uint64_t, std::uint64_t>{{1, 1}, {2, 1}, {3, 2}}));
}

TEST(EnumerateMetrics, identical_values) {
    const MetricHistogram h = enumerate_metrics(Instance(3, {{5, 5}}), Metric::Makespan);
    EXPECT_EQ(h.counts, (std::map<std::uint64_t, std::uint64_t>{{5, 2}}));
}

TEST(EnumerateMetrics, table1_totals) {
    // frozen from an independent itertools enumeration
    const MetricHistogram h = enumerate_metrics(table1(), Metric::Makespan);
    std::uint64_t total = 0;
    for (const auto &[v, c] : h.counts) total += c;
    EXPECT_EQ(total, 65536u);
    EXPECT_EQ(h.counts.size(), 65u);
    EXPECT_EQ(h.counts.begin()->first, 8u);
    EXPECT_EQ(h.counts.begin()->second, 4u);
    EXPECT_EQ(h.counts.rbegin()->first, 76u);
}

TEST(CountSolutions, examples) {
    const Instance inst = two_by_two();
    EXPECT_EQ(count_solutions(inst, Predicate{Metric::Makespan, 0, metric_ceiling(Metric::Makespan, inst)}), 4u);
    EXPECT_EQ(count_solutions(inst, Predicate{Metric::Makespan, 1, 1}), 1u);
    EXPECT_EQ(count_solutions(table1(), Predicate{Metric::Makespan, 0, 0}), 0u);
}

TEST(Optimum, examples) {
    const Optimum o = optimum(two_by_two(), Metric::Makespan);
    EXPECT_EQ(o.value, 1u);
    EXPECT_EQ(o.witness, machines({1, 2}));

    const Instance one(3, {{6, 2, 7, 2}});
    const Optimum single = optimum(one, Metric::Makespan);
    EXPECT_EQ(single.value, 2u);
    EXPECT_EQ(single.witness, machines({2}));  // lowest index on ties

    const Optimum t1 = optimum(table1(), Metric::Makespan);
    EXPECT_EQ(t1.value, 8u);
    EXPECT_EQ(t1.index.value, 5016u);
    EXPECT_EQ(t1.witness, schedule_s1());
    EXPECT_EQ(makespan(machine_loads(t1.witness, table1())), t1.value);

    EXPECT_EQ(optimum(table1(), Metric::Flowtime).value, 30u);
}

TEST(Optimum, consistent_with_histogram) {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 40; ++t) {
        const Instance inst = random_instance(rng, 12);
        for (Metric metric : {Metric::Makespan, Metric::Flowtime}) {
            const MetricHistogram h = enumerate_metrics(inst, metric);
            const Optimum o = optimum(inst, metric);
            EXPECT_EQ(o.value, h.counts.begin()->first);
            EXPECT_GE(count_solutions(inst, Predicate{metric, o.value, o.value}), 1u);
            EXPECT_EQ(metric_value(metric, o.witness, inst), o.value);
            std::uint64_t total = 0;
            for (const auto &[v, c] : h.counts) total += c;
            EXPECT_EQ(total, inst.schedule_count());
        }
    }
}

TEST(SolutionSet, matches_count) {
    const Instance inst = table1();
    const Predicate pred{Metric::Makespan, 8, 9};
    const auto set = solution_set(inst, pred);
    EXPECT_EQ(set.size(), count_solutions(inst, pred));
    EXPECT_TRUE(std::is_sorted(set.begin(), set.end()));
}

TEST(EnumerateMetrics, independent_of_thread_count) {
    const Instance inst = table1();
    setenv("QSCHED_THREADS", "1", 1);
    const auto one = metric_table(inst, Metric::Flowtime);
    const auto h1 = enumerate_metrics(inst, Metric::Flowtime);
    setenv("QSCHED_THREADS", "4", 1);
    const auto four = metric_table(inst, Metric::Flowtime);
    const auto h4 = enumerate_metrics(inst, Metric::Flowtime);
    unsetenv("QSCHED_THREADS");
    EXPECT_EQ(one, four);
    EXPECT_EQ(h1.counts, h4.counts);
}

TEST(EnumerateMetrics, capacity) {
    const Instance big(1, std::vector<std::vector<std::uint64_t>>(16, std::vector<std::uint64_t>(4, 1)));
    EXPECT_THROW(enumerate_metrics(big, Metric::Makespan), Error);
}

TEST(HistogramCsv, ascending_rows) {
    EXPECT_EQ(histogram_csv(enumerate_metrics(two_by_two(), Metric::Makespan)), "value,count\n1,1\n2,1\n3,2\n");
}

TEST(Predicate, validation) {
    const Instance inst = two_by_two();
    EXPECT_THROW(validate(Predicate{Metric::Makespan, 3, 2}, inst), Error);
    EXPECT_THROW(validate(Predicate{Metric::Makespan, 0, 8}, inst), Error);
    EXPECT_NO_THROW(validate(Predicate{Metric::Makespan, 0, 7}, inst));
    EXPECT_NO_THROW(validate(Predicate{Metric::Flowtime, 0, 15}, inst));
    EXPECT_THROW(validate(Predicate{Metric::Flowtime, 0, 16}, inst), Error);
}
