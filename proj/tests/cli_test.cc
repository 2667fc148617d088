// Copyright 2026 The qfractal Authors
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

#include "qfractal/cli.h"

#include <array>
#include <cstdio>
#include <sstream>
#include <sys/wait.h>

#include <gtest/gtest.h>

#include "qfractal/constructors.h"
#include "qfractal/state_file.h"
#include "test_util.h"

using namespace qfractal;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string> &args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = cli_main(args, out, err);
    return {code, out.str(), err.str()};
}

// Runs the built executable through the shell and captures stdout.
CliRun run_binary(const std::string &args) {
    std::string cmd = std::string(QFRACTAL_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE *pipe = popen(cmd.c_str(), "r");
    std::string out;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        out.append(buf.data(), got);
    }
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, ""};
}

// ln 2 / ln 3 = 0.63092975357145743..., so twelve decimals round down.
std::string fixed12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12f\n", v);
    return buf;
}

}  // namespace

TEST(cli, dim) {
    CliRun r = run({"dim", "--c", "2", "--s", "3"});
    EXPECT_EQ(r.code, EXIT_OK);
    EXPECT_EQ(r.out, fixed12(std::log(2.0) / std::log(3.0)));
    EXPECT_EQ(r.out, "0.630929753571\n");
    EXPECT_EQ(run({"dim", "--c", "3", "--s", "1"}).out, "1.584962500721\n");
    EXPECT_EQ(run({"dim", "--c", "1", "--s", "3"}).code, EXIT_USAGE);
}

TEST(cli, usage_errors) {
    EXPECT_EQ(run({}).code, EXIT_USAGE);
    EXPECT_EQ(run({"frobnicate"}).code, EXIT_USAGE);
    EXPECT_EQ(run({"dim", "--c", "2"}).code, EXIT_USAGE);
    EXPECT_EQ(run({"analyze", "--state", "/nonexistent/x.qfs"}).code, EXIT_USAGE);
}

TEST(cli, guard_exit_code) {
    auto dir = fixtures::scratch_dir("cli_guard");
    EXPECT_EQ(run({"gen", "--family", "cluster", "--qubits", "20", "-o", (dir / "c.qfs").string()}).code, EXIT_GUARD);
    EXPECT_EQ(run({"gen", "--family", "bitflip", "--n", "12", "-o", (dir / "b.qfs").string()}).code, EXIT_GUARD);
}

TEST(cli, gen_and_analyze_cantor) {
    auto dir = fixtures::scratch_dir("cli_cantor");
    std::string path = (dir / "x.qfs").string();
    ASSERT_EQ(run({"gen", "--family", "cantor", "--n", "2", "-o", path}).code, EXIT_OK);
    EXPECT_EQ(read_state_file(path), build_cantor(2));
    CliRun r = run({"analyze", "--state", path, "--cut", "2"});
    EXPECT_EQ(r.code, EXIT_OK);
    EXPECT_EQ(
        r.out,
        "provenance: family=cantor c=2 s=3 n=2\n"
        "local_dim: 3\n"
        "num_qudits: 4\n"
        "norm_squared: 1\n"
        "support: 9\n"
        "uniform_probability: 1/9\n"
        "schmidt_rank[2]: 1\n");
}

TEST(cli, verify_step_cantor) {
    auto dir = fixtures::scratch_dir("cli_verify");
    auto p = [&](const char *name) { return (dir / name).string(); };
    ASSERT_EQ(run({"gen", "--family", "cantor", "--n", "1", "-o", p("c1.qfs")}).code, EXIT_OK);
    ASSERT_EQ(run({"gen", "--family", "cantor", "--n", "2", "-o", p("c2.qfs")}).code, EXIT_OK);
    ASSERT_EQ(run({"rule", "--family", "cantor", "--n", "1", "-o", p("cantor.rule")}).code, EXIT_OK);
    CliRun ok = run({"verify-step", "--prev", p("c1.qfs"), "--next", p("c2.qfs"), "--rule", p("cantor.rule")});
    EXPECT_EQ(ok.code, EXIT_OK) << ok.out;
    EXPECT_EQ(ok.out.rfind("valid\n", 0), 0u) << ok.out;
    EXPECT_NE(ok.out.find("extracted_s: 3\n"), std::string::npos) << ok.out;

    // A negated record makes the step invalid.
    std::string text = read_text_file(p("c2.qfs"));
    auto pos = text.find("0011 0 ");
    ASSERT_NE(pos, std::string::npos);
    text.replace(pos, 7, "0011 4 ");
    write_text_file_atomic(p("bad.qfs"), text);
    CliRun bad = run({"verify-step", "--prev", p("c1.qfs"), "--next", p("bad.qfs"), "--rule", p("cantor.rule")});
    EXPECT_EQ(bad.code, EXIT_NEGATIVE);
}

TEST(cli, bellgem_rule_probabilities) {
    auto dir = fixtures::scratch_dir("cli_gem");
    auto p = [&](const char *name) { return (dir / name).string(); };
    ASSERT_EQ(run({"gen", "--family", "bellgem", "--n", "0", "--sign", "-", "-o", p("m1.qfs")}).code, EXIT_OK);
    ASSERT_EQ(run({"gen", "--family", "bellgem", "--n", "1", "--sign", "+", "-o", p("p2.qfs")}).code, EXIT_OK);
    EXPECT_EQ(read_state_file(p("p2.qfs")), fixtures::gem_plus_level2());
    ASSERT_EQ(run({"rule", "--family", "bellgem", "--n", "0", "--sign", "+", "-o", p("gem.rule")}).code, EXIT_OK);
    CliRun v = run({"verify-step", "--prev", p("m1.qfs"), "--next", p("p2.qfs"), "--rule", p("gem.rule")});
    EXPECT_EQ(v.code, EXIT_OK) << v.out;
    CliRun probs = run({"rule-probs", "--state", p("p2.qfs"), "--rule", p("gem.rule"), "--prev", p("m1.qfs")});
    EXPECT_EQ(probs.code, EXIT_OK);
    EXPECT_EQ(probs.out, "rule_basis_probabilities: 1/2 1/2\n");
}

TEST(cli, scaling) {
    auto dir = fixtures::scratch_dir("cli_scaling");
    std::vector<std::string> args{"scaling", "--states"};
    for (int n = 0; n <= 3; n++) {
        std::string path = (dir / ("c" + std::to_string(n) + ".qfs")).string();
        ASSERT_EQ(run({"gen", "--family", "cantor", "--n", std::to_string(n), "-o", path}).code, EXIT_OK);
        args.push_back(path);
    }
    CliRun r = run(args);
    EXPECT_EQ(r.code, EXIT_OK);
    EXPECT_NE(r.out.find("ratios: 3 3 3\n"), std::string::npos) << r.out;
}

TEST(cli, code_pipeline) {
    auto dir = fixtures::scratch_dir("cli_code");
    auto p = [&](const char *name) { return (dir / name).string(); };
    write_state_file(p("one.qfs"), SparseState::basis(2, BasisIndex::from_string("1")));
    EXPECT_EQ(run({"code", "roundtrip", "--spec", "bitflip:1", "--state", p("one.qfs"), "--errors", "0"}).code, EXIT_OK);
    EXPECT_EQ(
        run({"code", "roundtrip", "--spec", "bitflip:1", "--state", p("one.qfs"), "--errors", "0,1"}).code, EXIT_NEGATIVE);
    ASSERT_EQ(run({"code", "encode", "--spec", "bitflip:2", "--state", p("one.qfs"), "-o", p("enc.qfs")}).code, EXIT_OK);
    ASSERT_EQ(
        run({"code", "inject", "--spec", "bitflip:2", "--state", p("enc.qfs"), "--errors", "3,4,5", "-o", p("noisy.qfs")})
            .code,
        EXIT_OK);
    CliRun d = run({"code", "decode", "--spec", "bitflip:2", "--state", p("noisy.qfs"), "-o", p("dec.qfs")});
    EXPECT_EQ(d.code, EXIT_OK);
    EXPECT_EQ(d.out, "corrections: L2:B0\nsuccess: yes\n");
    EXPECT_EQ(read_state_file(p("dec.qfs")), SparseState::basis(2, BasisIndex::from_string("1")));
}

TEST(cli, lucheck) {
    auto dir = fixtures::scratch_dir("cli_lu");
    auto p = [&](const char *name) { return (dir / name).string(); };
    ASSERT_EQ(run({"gen", "--family", "cluster", "--qubits", "4", "-o", p("c4.qfs")}).code, EXIT_OK);
    write_state_file(p("pair.qfs"), fixtures::paired_cluster_form());
    CliRun r = run({"lucheck", "--a", p("c4.qfs"), "--b", p("pair.qfs")});
    EXPECT_EQ(r.code, EXIT_OK) << r.out;
    EXPECT_EQ(r.out.rfind("equivalent:", 0), 0u) << r.out;
    write_state_file(p("zero.qfs"), SparseState::basis(2, BasisIndex::from_string("00")));
    write_state_file(p("bell.qfs"), build_bell_pair(Sign::Minus));
    EXPECT_EQ(run({"lucheck", "--a", p("zero.qfs"), "--b", p("bell.qfs")}).code, EXIT_NEGATIVE);
}

TEST(cli, viz) {
    auto dir = fixtures::scratch_dir("cli_viz");
    auto p = [&](const char *name) { return (dir / name).string(); };
    ASSERT_EQ(run({"gen", "--family", "cantor", "--n", "1", "-o", p("c1.qfs")}).code, EXIT_OK);
    CliRun a = run({"viz", "--state", p("c1.qfs"), "--ascii", "--width", "9"});
    EXPECT_EQ(a.code, EXIT_OK);
    EXPECT_EQ(a.out, "###......\n");
    EXPECT_EQ(run({"viz", "--state", p("c1.qfs"), "--svg", p("c1.svg")}).code, EXIT_OK);
    EXPECT_NE(read_text_file(p("c1.svg")).find("<svg"), std::string::npos);
    EXPECT_EQ(run({"viz", "--state", p("c1.qfs")}).code, EXIT_USAGE);
}

TEST(cli_binary, end_to_end_and_deterministic) {
    auto dir = fixtures::scratch_dir("cli_binary");
    std::string a = (dir / "a.qfs").string();
    std::string b = (dir / "b.qfs").string();
    CliRun dim = run_binary("dim --c 2 --s 3");
    EXPECT_EQ(dim.code, 0);
    EXPECT_EQ(dim.out, fixed12(std::log(2.0) / std::log(3.0)));
    ASSERT_EQ(run_binary("gen --family cantor --n 2 -o " + a).code, 0);
    ASSERT_EQ(run_binary("gen --family cantor --n 2 -o " + b).code, 0);
    EXPECT_EQ(read_text_file(a), read_text_file(b));
    CliRun r1 = run_binary("analyze --state " + a);
    CliRun r2 = run_binary("analyze --state " + a);
    EXPECT_EQ(r1.out, r2.out);
    EXPECT_NE(r1.out.find("support: 9\n"), std::string::npos);
    EXPECT_NE(r1.out.find("uniform_probability: 1/9\n"), std::string::npos);
    EXPECT_EQ(run_binary("gen --family nonsense -o " + a).code, 2);
}
