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

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct CliResult {
    int code = -1;
    std::string out;
};

fs::path scratch() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / ("qsched_cli_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

CliResult run(const std::string &args, const std::string &env = "") {
    const fs::path out = scratch() / "stdout.txt";
    const std::string cmd = env + " " QSCHED_BIN " " + args + " > " + out.string() + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    return CliResult{WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out)};
}

std::string write_instance(const std::string &name, const std::string &text) {
    const fs::path p = scratch() / name;
    std::ofstream(p) << text;
    return p.string();
}

const std::string kTable1 = QSCHED_DATA_DIR "/table1.json";

std::string two_by_two() { return write_instance("two.json", R"({"q_bits": 2, "times": [[1, 2], [2, 1]]})"); }

}  // namespace

TEST(Cli, encode_job_kets) {
    const CliResult r = run("encode " + kTable1 + " --job 1");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("|000001>"), std::string::npos);
    EXPECT_NE(r.out.find("|010011>"), std::string::npos);
    EXPECT_NE(r.out.find("|100111>"), std::string::npos);
    EXPECT_NE(r.out.find("|111111>"), std::string::npos);
}

TEST(Cli, encode_schedule_makespan) {
    const CliResult r = run("encode " + kTable1 + " --assign M1,M2,M1,M4,M3,M2,M3,M1");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("index 5016"), std::string::npos);
    EXPECT_NE(r.out.find("|Cmax> = |0001000> = 8"), std::string::npos);
}

TEST(Cli, brute_table1) {
    const CliResult r = run("brute " + kTable1);
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("total 65536"), std::string::npos);
    EXPECT_NE(r.out.find("distinct_values 65"), std::string::npos);
    EXPECT_NE(r.out.find("optimum 8 count 4"), std::string::npos);
}

TEST(Cli, brute_csv) {
    const fs::path csv = scratch() / "hist.csv";
    EXPECT_EQ(run("brute " + two_by_two() + " --csv " + csv.string()).code, 0);
    EXPECT_EQ(slurp(csv), "value,count\n1,1\n2,1\n3,2\n");
}

TEST(Cli, solve_exit_codes) {
    const std::string two = two_by_two();
    const CliResult ok = run("solve " + two + " --target 1:1 --backend full");
    EXPECT_EQ(ok.code, 0);
    EXPECT_NE(ok.out.find("\"verified\": true"), std::string::npos);
    EXPECT_EQ(run("solve " + kTable1 + " --target 0:7").code, 2);
    EXPECT_EQ(run("solve " + kTable1 + " --target 7:7 --iterations 3").code, 2);
    // 8 jobs on 8 machines: sigma = 2^24, above the full backend's limit
    std::string wide = R"({"q_bits": 1, "times": [)";
    for (int i = 0; i < 8; ++i) wide += std::string(i ? "," : "") + "[0,0,0,0,0,0,0,0]";
    wide += "]}";
    EXPECT_EQ(run("solve " + write_instance("wide.json", wide) + " --target 0 --backend full").code, 3);
    EXPECT_EQ(run("solve " + write_instance("bad.json", "{") + " --target 1").code, 4);
    EXPECT_EQ(run("solve " + write_instance("odd.json", R"({"q_bits": 2, "times": [[1, 1, 1]]})") + " --target 1")
                  .code,
              4);
}

TEST(Cli, solve_is_byte_identical) {
    const std::string args = "solve " + kTable1 + " --target 8:9 --seed 17";
    const CliResult a = run(args, "QSCHED_THREADS=1");
    const CliResult b = run(args, "QSCHED_THREADS=4");
    const CliResult c = run(args);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out, c.out);
    EXPECT_EQ(a.out.find("wall_time_ms"), std::string::npos);
}

TEST(Cli, timing_is_opt_in) {
    const CliResult r = run("solve " + two_by_two() + " --target 1 --timing");
    EXPECT_NE(r.out.find("wall_time_ms"), std::string::npos);
}

TEST(Cli, minimize) {
    const CliResult r = run("minimize " + kTable1 + " --seed 2");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("makespan 8"), std::string::npos);
    EXPECT_EQ(run("minimize " + kTable1 + " --range 77:77").code, 2);
}

TEST(Cli, sweep_csv) {
    const CliResult r = run("sweep " + two_by_two() + " --target 1:1 --rmax 1");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "R,predicted,simulated");
}

TEST(Cli, intersect) {
    const CliResult r = run("intersect " + two_by_two() + " --pred makespan:1:1 --pred flowtime:0:max");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("schedules 1"), std::string::npos);
    EXPECT_NE(r.out.find("[M1,M2]"), std::string::npos);
}

TEST(Cli, dump_full) {
    const CliResult r = run("dump " + two_by_two() + " --backend full");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out,
              "|0_01 0_10 011 000 011> 0.5 0\n|0_01 1_01 001 001 001> 0.5 0\n"
              "|1_10 0_10 010 010 010> 0.5 0\n|1_10 1_01 000 011 011> 0.5 0\n");
}
