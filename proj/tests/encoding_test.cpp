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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "qsched/error.hpp"

using namespace qsched;
using namespace qsched::testing;

TEST(BasisState, fields_across_word_boundary) {
    BasisState b(83);
    b.set_field(60, 7, 0b1010101);
    EXPECT_EQ(b.field(60, 7), 0b1010101u);
    EXPECT_EQ(b.field(0, 60), 0u);
    EXPECT_EQ(b.field(67, 16), 0u);
    b.set_field(0, 64, ~std::uint64_t{0});
    EXPECT_EQ(b.field(0, 64), ~std::uint64_t{0});
    EXPECT_EQ(b.field(60, 7), 0b1111101u);
    EXPECT_EQ(b.bits().substr(0, 64), std::string(64, '1'));
    EXPECT_EQ(BasisState::from_bits(b.bits()), b);
    EXPECT_THROW(b.set_field(80, 3, 9), Error);
    EXPECT_THROW(b.field(80, 4), Error);
}

TEST(BasisState, order_is_numeric) {
    EXPECT_LT(BasisState::from_bits("0111"), BasisState::from_bits("1000"));
    std::mt19937_64 rng(3);
    for (int t = 0; t < 500; ++t) {
        BasisState a(100), b(100);
        a.set_field(0, 36, rng() >> 28);
        a.set_field(36, 64, rng());
        b.set_field(0, 36, rng() >> 28);
        b.set_field(36, 64, rng());
        EXPECT_EQ(a < b, a.bits() < b.bits());
    }
}

TEST(EncodeJobMachine, table1_kets) {
    const Instance inst = table1();
    EXPECT_EQ(plain_ket(encode_job_machine(0, 0, inst)), "|000001>");
    EXPECT_EQ(plain_ket(encode_job_machine(0, 1, inst)), "|010011>");
    EXPECT_EQ(plain_ket(encode_job_machine(0, 2, inst)), "|100111>");
    EXPECT_EQ(plain_ket(encode_job_machine(0, 3, inst)), "|111111>");
    EXPECT_EQ(plain_ket(encode_job_machine(1, 0, inst)), "|000010>");
    EXPECT_EQ(plain_ket(encode_job_machine(1, 1, inst)), "|010001>");
    EXPECT_EQ(plain_ket(encode_job_machine(1, 2, inst)), "|101001>");
    EXPECT_EQ(plain_ket(encode_job_machine(1, 3, inst)), "|110011>");
    EXPECT_EQ(render_job_ket(encode_job_machine(0, 0, inst), RegisterLayout::of(inst)), "|00_0001>");
}

TEST(EncodeJobMachine, index_field_round_trips) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 50; ++t) {
        const Instance inst = random_instance(rng, 12);
        for (std::uint32_t i = 0; i < inst.n_jobs(); ++i) {
            for (std::uint32_t j = 0; j < inst.n_machines(); ++j) {
                const BasisState e = encode_job_machine(i, j, inst);
                ASSERT_EQ(e.width(), inst.machine_bits() + inst.q_bits());
                EXPECT_EQ(e.field(0, inst.machine_bits()), j);
                EXPECT_EQ(e.field(inst.machine_bits(), inst.q_bits()), inst.time(i, j));
            }
        }
    }
}

TEST(JobSuperposition, table1_states) {
    const Instance inst = table1();
    const auto j1 = job_superposition(0, inst);
    ASSERT_EQ(j1.size(), 4u);
    const char *expected1[] = {"|000001>", "|010011>", "|100111>", "|111111>"};
    const char *expected2[] = {"|000010>", "|010001>", "|101001>", "|110011>"};
    const auto j2 = job_superposition(1, inst);
    double norm = 0.0;
    for (int j = 0; j < 4; ++j) {
        EXPECT_EQ(plain_ket(j1[j].second), expected1[j]);
        EXPECT_EQ(plain_ket(j2[j].second), expected2[j]);
        EXPECT_EQ(j1[j].first, std::complex<double>(0.5, 0.0));
        norm += std::norm(j1[j].first);
    }
    EXPECT_NEAR(norm, 1.0, 1e-12);
}

TEST(JobSuperposition, single_machine_and_odd_m) {
    const Instance one(2, {{3}, {1}});
    const auto s = job_superposition(0, one);
    ASSERT_EQ(s.size(), 1u);
    EXPECT_EQ(s[0].first, std::complex<double>(1.0, 0.0));
    const Instance eight(3, {{0, 1, 2, 3, 4, 5, 6, 7}});
    double norm = 0.0;
    for (const auto &[amp, b] : job_superposition(0, eight)) norm += std::norm(amp);
    EXPECT_NEAR(norm, 1.0, 1e-12);
}

TEST(ScheduleBasis, table1_schedules) {
    const Instance inst = table1();
    EXPECT_EQ(schedule_basis(schedule_s1(), inst).bits(),
              "000001" "010001" "000110" "110100" "100011" "010111" "100011" "000001");
    EXPECT_EQ(schedule_basis(schedule_s2(), inst).bits(),
              "010011" "000010" "100101" "110100" "100011" "010111" "000101" "011010");
    EXPECT_EQ(render_ket(schedule_basis(schedule_s1(), inst), RegisterLayout::of(inst)),
              "|00_0001 01_0001 00_0110 11_0100 10_0011 01_0111 10_0011 00_0001>");
}

TEST(ScheduleBasis, zero_index) {
    const Instance inst(2, {{0, 1}});
    EXPECT_EQ(plain_ket(schedule_basis(ScheduleIndex{0}, inst)), "|000>");
    EXPECT_EQ(plain_ket(schedule_basis(ScheduleIndex{1}, inst)), "|101>");
    EXPECT_THROW(schedule_basis(ScheduleIndex{2}, inst), Error);
}

TEST(DecodeSchedule, table1_schedules) {
    const Instance inst = table1();
    EXPECT_EQ(decode_schedule(BasisState::from_bits("000001010001000110110100100011010111100011000001"), inst),
              schedule_s1());
    EXPECT_EQ(decode_schedule(BasisState::from_bits("010011000010100101110100100011010111000101011010"), inst),
              schedule_s2());
}

TEST(DecodeSchedule, corrupted_time_field) {
    const Instance inst = table1();
    BasisState s = schedule_basis(schedule_s1(), inst);
    s.set_field(0, 6, 0b000010);  // claims T=2 on M1, but T[J1][M1] = 1
    try {
        decode_schedule(s, inst);
        FAIL() << "expected InconsistentTimeField";
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::InconsistentTimeField);
    }
}

TEST(DecodeSchedule, inverts_schedule_basis_exhaustively) {
    const Instance inst = table1();
    for (std::uint64_t k = 0; k < inst.schedule_count(); ++k) {
        const ScheduleIndex idx{k};
        ASSERT_EQ(decode_schedule(schedule_basis(idx, inst), inst), index_to_assignment(idx, inst));
    }
}

TEST(RegisterLayout, table1_widths) {
    const RegisterLayout l = RegisterLayout::of(table1());
    EXPECT_EQ(l.job_width(), 6);
    EXPECT_EQ(l.schedule_width(), 48);
    EXPECT_EQ(l.loads_width(), 28);
    EXPECT_EQ(l.makespan_width(), 7);
    EXPECT_EQ(l.total_width(), 83);
    EXPECT_EQ(l.makespan_offset(), 76);
}
