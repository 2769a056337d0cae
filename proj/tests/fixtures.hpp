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
#include <random>
#include <vector>

#include "qsched/instance.hpp"

namespace qsched::testing {

inline Instance table1() {
    return Instance(4, {{1, 3, 7, 15},
                        {2, 1, 9, 3},
                        {6, 2, 5, 8},
                        {11, 13, 7, 4},
                        {15, 12, 3, 10},
                        {10, 7, 8, 14},
                        {5, 2, 3, 9},
                        {1, 10, 11, 13}});
}

/// N=2, M=2, T=[[1,2],[2,1]].
inline Instance two_by_two() { return Instance(2, {{1, 2}, {2, 1}}); }

inline Assignment machines(std::initializer_list<std::uint32_t> one_based) {
    Assignment a;
    for (std::uint32_t j : one_based) a.machine_of.push_back(j - 1);
    return a;
}

inline Assignment schedule_s1() { return machines({1, 2, 1, 4, 3, 2, 3, 1}); }
inline Assignment schedule_s2() { return machines({2, 1, 3, 4, 3, 2, 1, 2}); }

/// Random instance with M^N <= 2^max_bits, n, m in {0..3}, q in {1..4}.
inline Instance random_instance(std::mt19937_64 &rng, int max_bits) {
    for (;;) {
        const int n = static_cast<int>(rng() % 4);
        const int m = static_cast<int>(rng() % 3) + (rng() % 4 == 0 ? 0 : 1);
        if (m * (1 << n) > max_bits || m * (1 << n) == 0) continue;
        const int q = static_cast<int>(rng() % 4) + 1;
        std::vector<std::vector<std::uint64_t>> t(std::size_t{1} << n, std::vector<std::uint64_t>(std::size_t{1} << m));
        for (auto &row : t) {
            for (auto &v : row) v = rng() % (std::uint64_t{1} << q);
        }
        return Instance(q, std::move(t));
    }
}

}  // namespace qsched::testing
