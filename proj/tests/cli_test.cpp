// Copyright 2026 The hadamard-rx Authors
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

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "gtest/gtest.h"
#include "hrx/report.hpp"

namespace fs = std::filesystem;

namespace {

fs::path work_dir() {
    static const fs::path dir = [] {
        auto d = fs::temp_directory_path() / "hrx_cli_test";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

// Runs the CLI with stdout and stderr captured under work_dir().
int run(const std::string& args, const std::string& tag) {
    const auto out = work_dir() / (tag + ".out");
    const auto err = work_dir() / (tag + ".err");
    const std::string cmd = std::string("\"") + HRX_CLI_PATH + "\" " + args + " >\"" + out.string() +
                            "\" 2>\"" + err.string() + "\"";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string captured(const std::string& tag, const char* stream = ".out") {
    return slurp(work_dir() / (tag + stream));
}

}  // namespace

TEST(Cli, plan_dump) {
    ASSERT_EQ(run("plan dump -n 2", "plan"), 0);
    EXPECT_EQ(captured("plan"), "{\"order\":2,\"stages\":[[[0,1],[2,3]],[[0,2],[1,3]]]}\n");
}

TEST(Cli, simulate_optical_to_directory) {
    const auto dir = work_dir() / "optical";
    ASSERT_EQ(run("simulate optical -n 3 -j 5 --out \"" + dir.string() + "\"", "opt"), 0);
    const auto csv = slurp(dir / "optical_trace.csv");
    EXPECT_EQ(csv.rfind("stage,mode,re,im,energy\n", 0), 0u);
    // 4 stages of 8 modes plus header
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 33);
    EXPECT_NE(captured("opt", ".err").find("5"), std::string::npos);
}

TEST(Cli, simulate_digital_stdout) {
    ASSERT_EQ(run("simulate digital -n 2 -j 3", "dig"), 0);
    const auto csv = captured("dig");
    EXPECT_EQ(csv.rfind("stage,mode,symbol_bits\n", 0), 0u);
    EXPECT_NE(csv.find("2,3,01\n"), std::string::npos);
    EXPECT_NE(captured("dig", ".err").find("decoded line 3 polarity +"), std::string::npos);
    ASSERT_EQ(run("simulate digital -n 2 -j 3 --invert", "dig_inv"), 0);
    EXPECT_NE(captured("dig_inv", ".err").find("polarity -"), std::string::npos);
}

TEST(Cli, compare_json_parses) {
    ASSERT_EQ(run("compare -n 4 --vgs 5", "cmp"), 0);
    const auto report = hrx::report_from_json(captured("cmp"));
    EXPECT_EQ(report.order, 4u);
    EXPECT_EQ(report.v_gs, 5.0);
    EXPECT_EQ(report.codewords_verified, 16u);
}

TEST(Cli, compare_headline_values) {
    ASSERT_EQ(run("compare -n 10 --policy fixed:80e-9 --stage-delay 10e-12", "headline"), 0);
    const auto report = hrx::report_from_json(captured("headline"));
    EXPECT_EQ(report.latency_ratio, 8000.0);
    EXPECT_EQ(report.electronic_latency_s, 800e-9);
    EXPECT_EQ(report.optical_latency_s, 100e-12);
}

TEST(Cli, compare_text_to_directory) {
    const auto dir = work_dir() / "text";
    ASSERT_EQ(run("compare -n 3 --format text --out \"" + dir.string() + "\"", "txt"), 0);
    EXPECT_FALSE(slurp(dir / "report.txt").empty());
}

TEST(Cli, device_curves) {
    const auto dir = work_dir() / "curves";
    ASSERT_EQ(run("device power-curve --device nmos --vgs 5 --out \"" + dir.string() + "\"", "pc"), 0);
    EXPECT_TRUE(fs::exists(dir / "power_SiRA04DP_vgs5.csv"));
    ASSERT_EQ(run("device delay-curve --device pmos --out \"" + dir.string() + "\"", "dc"), 0);
    EXPECT_TRUE(fs::exists(dir / "delay_SiA469DJ.csv"));
    ASSERT_EQ(run("device delay-curve --device nmos --from 1 --to 3", "dc_warn"), 0);
    EXPECT_NE(captured("dc_warn", ".err").find("omitted"), std::string::npos);
}

TEST(Cli, decode_failure_exits_one_with_trace) {
    const auto dir = work_dir() / "failed";
    EXPECT_EQ(run("compare -n 2 --phi pi2 --out \"" + dir.string() + "\"", "fail"), 1);
    EXPECT_TRUE(fs::exists(dir / "failed_optical_codeword_0.csv"));
    EXPECT_EQ(run("compare -n 2 --phi pi2 --phase-correction", "fixed_phase"), 0);
}

TEST(Cli, config_errors_exit_two) {
    EXPECT_EQ(run("compare -n 3 --policy bogus", "e1"), 2);
    EXPECT_EQ(run("compare -n 0", "e2"), 2);
    EXPECT_EQ(run("compare -n 3 --vgs 2", "e3"), 2);
    EXPECT_EQ(run("compare --no-such-flag", "e4"), 2);
    EXPECT_EQ(run("simulate optical -n 2 -j 9", "e5"), 2);
    EXPECT_EQ(run("compare -n 3 --nmos /nonexistent/sheet.json", "e6"), 2);
    EXPECT_EQ(run("", "e7"), 2);
}

TEST(Cli, io_error_exits_three) {
    const auto blocker = work_dir() / "blocker";
    std::ofstream(blocker) << "x";
    EXPECT_EQ(run("plan dump -n 2 --out \"" + blocker.string() + "\"", "io"), 3);
}
