// Copyright 2026 The groverlab Authors
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

#include "groverlab/cli.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "groverlab/errors.h"
#include "json.hpp"

using namespace groverlab;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string &name) {
    return std::filesystem::temp_directory_path() / name;
}

std::string slurp(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

TEST(cli, grover_auto) {
    auto r = run({"grover", "--n", "2", "--d", "2", "--t", "auto", "--seed", "7"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_NEAR(j["results"]["success_probability"].get<double>(), 1.0, 1e-12);
    EXPECT_EQ(j["results"]["queries"], 1);
    EXPECT_EQ(j["seed"], 7);
    EXPECT_TRUE(j["ok"].get<bool>());
}

TEST(cli, refute_random_rounds) {
    auto r = run({"refute", "--n", "2", "--d", "3", "--M", "1", "--rounds", "random:5", "--seed", "7"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_LE(j["results"]["reveal_probability"].get<double>(), 0.25 + 1e-12);
    EXPECT_LE(j["results"]["identification_probability"].get<double>(), 0.5 + 1e-12);
    EXPECT_EQ(j["parameters"]["later_rounds"], 5);
}

TEST(cli, refute_marked_zero_warns) {
    auto r = run({"refute", "--n", "2", "--d", "0", "--M", "1"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_FALSE(j["warnings"].empty());
}

TEST(cli, bound_example) {
    auto r = run({"bound", "--n", "4", "--m", "2", "--p", "2"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["results"]["estimate"], 5);
}

TEST(cli, adversary_and_compare) {
    auto a = run({"adversary", "--n", "2", "--t", "1", "--trials", "10", "--seed", "1"});
    ASSERT_EQ(a.code, kExitOk) << a.err;
    auto c = run({"adversary", "--n", "3", "--t", "2", "--trials", "10", "--compare"});
    ASSERT_EQ(c.code, kExitOk) << c.err;
    auto j = nlohmann::json::parse(c.out);
    EXPECT_EQ(j["results"]["ceiling"].get<double>(), 1.0);
    EXPECT_LE(j["results"]["max_success_m2"].get<double>(), 1.0);
}

TEST(cli, run_circuit_file) {
    auto path = temp_path("groverlab_cli_test.circ");
    std::ofstream(path) << "qubits 2\nh 0\ncx 0 1\n";
    auto r = run({"run", "--circuit", path.string()});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["tables"][0]["rows"].size(), 2u);

    std::ofstream(path) << "qubits 2\nh 0\nbogus\n";
    auto bad = run({"run", "--circuit", path.string()});
    EXPECT_EQ(bad.code, kExitUsage);
    EXPECT_NE(bad.err.find("3"), std::string::npos);
    std::filesystem::remove(path);

    EXPECT_EQ(run({"run", "--circuit", "/nonexistent/file.circ"}).code, kExitUsage);
}

TEST(cli, usage_errors) {
    EXPECT_EQ(run({}).code, kExitUsage);
    EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
    EXPECT_EQ(run({"grover", "--n", "2"}).code, kExitUsage);
    EXPECT_EQ(run({"grover", "--n", "2", "--d", "9"}).code, kExitUsage);
    EXPECT_EQ(run({"grover", "--n", "2", "--d", "1", "--t", "soon"}).code, kExitUsage);
    EXPECT_EQ(run({"refute", "--n", "2", "--d", "1", "--rounds", "sideways"}).code, kExitUsage);
    EXPECT_EQ(run({"bound", "--n", "4", "--m", "2", "--p", "9"}).code, kExitUsage);
    EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST(cli, capacity_errors) {
    EXPECT_EQ(run({"grover", "--n", "40", "--d", "1"}).code, kExitCapacity);
    EXPECT_EQ(run({"refute", "--n", "10", "--d", "1", "--M", "3"}).code, kExitCapacity);
}

TEST(cli, deterministic_output) {
    std::vector<std::string> args = {"refute", "--n", "3", "--d", "5", "--M", "2", "--rounds", "hadamard,random:2",
                                     "--seed", "99"};
    auto a = run(args);
    auto b = run(args);
    EXPECT_EQ(a.out, b.out);
    args.back() = "100";
    EXPECT_NE(run(args).out, a.out);
}

TEST(cli, csv_goes_to_file) {
    auto path = temp_path("groverlab_cli_test.csv");
    auto r = run({"bound", "--n", "4", "--m", "2", "--p", "2", "--csv", path.string()});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_TRUE(r.out.empty());
    auto text = slurp(path);
    EXPECT_EQ(text.substr(0, kCsvHeader.size()), kCsvHeader);
    EXPECT_NE(text.find("result,estimate,,,5\n"), std::string::npos);
    std::filesystem::remove(path);
    EXPECT_EQ(run({"bound", "--n", "4", "--m", "2", "--p", "2", "--csv", "/nonexistent/x.csv"}).code, kExitUsage);
}

TEST(cli, round_schedule_grammar) {
    auto s = parse_round_schedule("identity, hadamard,random:3", 5);
    ASSERT_EQ(s.size(), 5u);
    EXPECT_EQ(s[0].kind, RoundSpec::Kind::kIdentity);
    EXPECT_EQ(s[1].kind, RoundSpec::Kind::kHadamard);
    EXPECT_EQ(s[4].kind, RoundSpec::Kind::kRandom);
    EXPECT_NE(s[2].seed, s[3].seed);
    EXPECT_TRUE(parse_round_schedule("", 5).empty());
    EXPECT_THROW(parse_round_schedule("random:0", 5), DomainError);
    EXPECT_THROW(parse_round_schedule("random:x", 5), DomainError);
    EXPECT_THROW(parse_round_schedule("identity,,hadamard", 5), DomainError);
}

TEST(cli, binary_matches_library) {
    std::string command = std::string(GROVERLAB_CLI_PATH) + " bound --n 4 --m 2 --p 2 --seed 3";
    FILE *pipe = popen(command.c_str(), "r");
    ASSERT_NE(pipe, nullptr);
    std::string text;
    char buffer[4096];
    while (std::size_t got = fread(buffer, 1, sizeof buffer, pipe)) {
        text.append(buffer, got);
    }
    EXPECT_EQ(pclose(pipe), 0);
    EXPECT_EQ(text, run({"bound", "--n", "4", "--m", "2", "--p", "2", "--seed", "3"}).out);
}
