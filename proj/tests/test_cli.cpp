// Copyright 2026 The qblock Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include <qblock/bench.hpp>

namespace {

namespace fs = std::filesystem;

struct Outcome {
    int code;
    std::string out;
};

Outcome run_cli(const std::string &args) {
    const auto out = fs::temp_directory_path() / "qblock_cli_stdout.txt";
    const std::string cmd = std::string(QPE_BENCH_PATH) + " " + args + " > " +
                            out.string() + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    std::ifstream in(out);
    std::stringstream ss;
    ss << in.rdbuf();
    fs::remove(out);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, ss.str()};
}

std::string first_line(const std::string &s) { return s.substr(0, s.find('\n')); }

} // namespace

TEST(Cli, CsvHeaderIsExact) {
    const auto r = run_cli("--qubits 4..6 --reps 1 --cooldown 0");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(first_line(r.out),
              "n_qubits,block_size,engine,precision,wall_time_s,swap_count,"
              "gate_count,reps,aggregation");
    std::istringstream in(r.out);
    EXPECT_EQ(qblock::bench::read_csv(in).size(), 3u);
}

TEST(Cli, JsonOutputToFile) {
    const auto path = fs::temp_directory_path() / "qblock_cli.json";
    const auto r = run_cli("--qubits 5 --engine both --block-size 2..5 --reps 1 "
                           "--cooldown 0 --precision single --format json --out " +
                           path.string());
    ASSERT_EQ(r.code, 0);
    std::ifstream in(path);
    const auto records =
        qblock::bench::from_json(nlohmann::ordered_json::parse(in));
    ASSERT_EQ(records.size(), 5u);
    EXPECT_EQ(records[0].precision, qblock::bench::Precision::Single);
    fs::remove(path);
}

TEST(Cli, RepeatedRunsGiveIdenticalCounts) {
    const std::string args =
        "--qubits 10..11 --engine blocked --block-size 3..6 --reps 1 --cooldown 0";
    std::istringstream a_in(run_cli(args).out);
    std::istringstream b_in(run_cli(args).out);
    const auto a = qblock::bench::read_csv(a_in);
    const auto b = qblock::bench::read_csv(b_in);
    ASSERT_EQ(a.size(), 8u);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].swap_count, b[i].swap_count);
        EXPECT_EQ(a[i].gate_count, b[i].gate_count);
    }
}

TEST(Cli, InvalidArgumentsExitTwo) {
    EXPECT_EQ(run_cli("--engine warp").code, 2);
    EXPECT_EQ(run_cli("--qubits 6..4").code, 2);
    EXPECT_EQ(run_cli("--qubits 1..3 --cooldown 0").code, 2);
    EXPECT_EQ(run_cli("--engine blocked --qubits 4").code, 2);
    EXPECT_EQ(run_cli("--reps 0").code, 2);
    EXPECT_EQ(run_cli("--no-such-flag").code, 2);
}

TEST(Cli, CapacityErrorExitThree) {
    EXPECT_EQ(run_cli("--qubits 4..29").code, 3);
    EXPECT_EQ(run_cli("--qubits 12 --max-amps 1024").code, 3);
}

TEST(Cli, IoErrorExitFour) {
    EXPECT_EQ(run_cli("--qubits 4 --reps 1 --cooldown 0 --out /nonexistent/dir/x.csv")
                  .code,
              4);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run_cli("--help").code, 0); }

TEST(Cli, DumpCircuit) {
    const auto r = run_cli("--qubits 3 --dump-circuit");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(first_line(r.out), "QUBITS 3");
}
