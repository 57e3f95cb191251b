// Copyright 2026 The qdiscord Authors
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

#include "qdiscord/cli.h"

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qdiscord/analytic.h"
#include "qdiscord/state_io.h"
#include "qdiscord/states.h"

using namespace qdiscord;

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string> &args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string &name) {
    return (std::filesystem::temp_directory_path() / ("qdiscord_cli_test_" + name)).string();
}

std::string write_state(const std::string &name, const DensityMatrix &rho) {
    const auto path = temp_path(name);
    save_state_file(rho, path);
    return path;
}

std::string write_text(const std::string &name, const std::string &text) {
    const auto path = temp_path(name);
    std::ofstream(path) << text;
    return path;
}

std::string read_text(const std::string &path) {
    std::ifstream f(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

std::vector<std::vector<double>> parse_csv_body(const std::string &text) {
    std::vector<std::vector<double>> rows;
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
        std::vector<double> row;
        std::istringstream fields(line);
        std::string field;
        while (std::getline(fields, field, ',')) {
            row.push_back(std::stod(field));
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

TEST(cli_compute, maximally_mixed_is_zero) {
    const auto path = write_state("mixed.json", DensityMatrix::maximally_mixed(2));
    const auto r = run({"compute", "--state", path, "--quantity", "qgqd", "--q", "0.5"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["quantity"], "qgqd");
    EXPECT_EQ(j["q"], 0.5);
    EXPECT_NEAR(j["value"].get<double>(), 0.0, 1e-12);
    EXPECT_TRUE(j["diagnostics"].contains("objective_evals"));
}

TEST(cli_compute, werner_matches_library_and_closed_form) {
    const WernerGhzParams p{2, 0.5};
    const auto path = write_state("werner.json", werner_ghz(p));
    const auto r = run({"compute", "--state", path, "--q", "0.5"});
    ASSERT_EQ(r.code, 0) << r.err;
    const double value = nlohmann::json::parse(r.out)["value"].get<double>();
    EXPECT_NEAR(value, werner_ghz_gqd(p, QParam(0.5)).value, 1e-6);
    EXPECT_NEAR(value, q_gqd(load_state_file(path), QParam(0.5)).value, 1e-12);
}

TEST(cli_compute, other_quantities_match_library) {
    const auto rho = random_density_matrix(3, 5);
    const auto path = write_state("random.json", rho);
    const auto value = [&](const std::vector<std::string> &extra) {
        std::vector<std::string> args{"compute", "--state", path, "--q", "0.7"};
        args.insert(args.end(), extra.begin(), extra.end());
        const auto r = run(args);
        EXPECT_EQ(r.code, 0) << r.err;
        return nlohmann::json::parse(r.out)["value"].get<double>();
    };
    EXPECT_NEAR(value({"--quantity", "entropy"}), tsallis_entropy(rho, QParam(0.7)), 1e-12);
    EXPECT_NEAR(value({"--quantity", "mutual_info"}), mutual_information_q(rho, QParam(0.7)), 1e-12);
    const int last[] = {2};
    EXPECT_NEAR(value({"--quantity", "qqd"}), q_qd_one_sided(rho, last, QParam(0.7)).value, 1e-12);
    const int first_two[] = {0, 1};
    EXPECT_NEAR(value({"--quantity", "qqd", "--measured", "0", "1"}),
                q_qd_one_sided(rho, first_two, QParam(0.7)).value, 1e-12);
}

TEST(cli_compute, exit_codes) {
    const auto good = write_state("good.json", DensityMatrix::maximally_mixed(1));
    const auto not_psd = write_text(
        "not_psd.json", R"({"num_qubits": 1, "matrix": [[[1.5, 0], [0, 0]], [[0, 0], [-0.5, 0]]]})");
    const auto malformed = write_text("malformed.json", "{\"num_qubits\": 1, \"matrix\": ");
    EXPECT_EQ(run({"compute", "--state", not_psd, "--q", "0.5"}).code, 3);
    EXPECT_EQ(run({"compute", "--state", malformed, "--q", "0.5"}).code, 2);
    EXPECT_EQ(run({"compute", "--state", temp_path("absent.json"), "--q", "0.5"}).code, 2);
    EXPECT_EQ(run({"compute", "--state", good, "--q", "0"}).code, 4);
    EXPECT_EQ(run({"compute", "--state", good, "--q", "-1"}).code, 4);
    EXPECT_EQ(run({"compute", "--state", good, "--q", "0.5", "--quantity", "bogus"}).code, 2);
    EXPECT_EQ(run({"compute", "--state", good, "--q", "0.5", "--starts", "0"}).code, 4);
    EXPECT_EQ(run({"compute", "--state", good}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(cli_verify, suites_pass) {
    EXPECT_EQ(run({"verify", "--suite", "telescoping", "--seed", "7", "--trials", "100"}).code, 0);
    EXPECT_EQ(run({"verify", "--suite", "oracle_agreement", "--seed", "7", "--trials", "10"}).code, 0);
    EXPECT_EQ(run({"verify", "--suite", "majorization", "--seed", "7", "--trials", "50"}).code, 0);
}

TEST(cli_verify, nonnegativity_suite) {
    const auto r = run({"verify", "--suite", "nonnegativity", "--seed", "7", "--trials", "200"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("[PASS]"), std::string::npos);
}

TEST(cli_verify, monogamy_suite_reports_counterexample) {
    const auto r = run({"verify", "--suite", "monogamy", "--seed", "7", "--trials", "3"});
    EXPECT_EQ(r.code, 0) << r.out;
    const auto trimmed = r.out.substr(0, r.out.size() - 1);
    const auto last_line = trimmed.substr(trimmed.rfind('\n') + 1);
    const auto j = nlohmann::json::parse(last_line);
    EXPECT_TRUE(j["passed"].get<bool>());
    EXPECT_EQ(j["suite"], "monogamy");
    EXPECT_NE(r.out.find("order=(1,0,2): inequality_holds=false condition_holds=false"), std::string::npos);
    EXPECT_NE(r.out.find("order=(0,1,2): inequality_holds=true condition_holds=true"), std::string::npos);
}

TEST(cli_verify, unknown_suite) {
    EXPECT_EQ(run({"verify", "--suite", "nope"}).code, 2);
    EXPECT_THROW(run_suite("nope", 1, 1, {}), std::invalid_argument);
}

TEST(cli_sweep, default_difference_changes_sign) {
    const auto path = temp_path("default.csv");
    ASSERT_EQ(run({"sweep", "--out", path}).code, 0);
    const auto text = read_text(path);
    EXPECT_EQ(text.substr(0, text.find('\n')), "q,alpha:0.58,alpha:0.3,difference");
    EXPECT_EQ(text.find('\r'), std::string::npos);
    const auto rows = parse_csv_body(text);
    ASSERT_EQ(rows.size(), 19u);
    bool positive = false;
    bool negative = false;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        EXPECT_NEAR(rows[i][0], 0.05 + 0.05 * static_cast<double>(i), 1e-12);
        EXPECT_NEAR(rows[i][3], rows[i][1] - rows[i][2], 1e-11);
        positive = positive || rows[i][3] > 0;
        negative = negative || rows[i][3] < 0;
    }
    EXPECT_TRUE(positive);
    EXPECT_TRUE(negative);
}

TEST(cli_sweep, single_targets) {
    const auto mixed = run({"sweep", "--target", "mixed:2"});
    ASSERT_EQ(mixed.code, 0) << mixed.err;
    EXPECT_EQ(mixed.out.substr(0, mixed.out.find('\n')), "q,mixed:2");
    for (const auto &row : parse_csv_body(mixed.out)) {
        ASSERT_EQ(row.size(), 2u);
        EXPECT_EQ(row[1], 0.0);
    }
    // Above q = 1 no clamping applies; rounding noise remains.
    const auto high = run({"sweep", "--target", "mixed:2", "--q-min", "1.2", "--q-max", "2.5", "--steps", "4"});
    ASSERT_EQ(high.code, 0) << high.err;
    for (const auto &row : parse_csv_body(high.out)) {
        EXPECT_NEAR(row[1], 0.0, 1e-12);
    }
    const auto werner = run({"sweep", "--target", "werner:2:0.5", "--steps", "7"});
    ASSERT_EQ(werner.code, 0) << werner.err;
    for (const auto &row : parse_csv_body(werner.out)) {
        EXPECT_NEAR(row[1], werner_ghz_gqd({2, 0.5}, QParam(row[0])).value, 1e-6);
    }
}

TEST(cli_sweep, byte_identical_across_threads) {
    SweepSpec spec;
    spec.steps = 6;
    spec.targets = {"alpha:0.58", "pauli:3:0.2:-0.4:0.1"};
    OptimizerConfig serial;
    OptimizerConfig threaded;
    threaded.threads = 3;
    EXPECT_EQ(sweep_csv(spec, sweep_rows(spec, serial)), sweep_csv(spec, sweep_rows(spec, threaded)));
}

TEST(cli_sweep, input_errors) {
    EXPECT_EQ(run({"sweep", "--out", "/nonexistent-dir/x.csv", "--steps", "2", "--target", "mixed:1"}).code, 2);
    EXPECT_EQ(run({"sweep", "--target", "bogus:1"}).code, 2);
    EXPECT_EQ(run({"sweep", "--target", "alpha:x"}).code, 2);
    EXPECT_EQ(run({"sweep", "--target", "alpha:1.5"}).code, 3);
    EXPECT_EQ(run({"sweep", "--q-min", "0.5", "--q-max", "0.4"}).code, 4);
    EXPECT_EQ(run({"sweep", "--steps", "1"}).code, 4);
    EXPECT_EQ(run({"sweep", "--target", "file:" + temp_path("missing.json")}).code, 2);
}

TEST(named_state, parses_targets) {
    EXPECT_EQ(named_state("werner:3:0.2").num_qubits(), 3);
    EXPECT_EQ(named_state("pauli:4:0.1:0.2:0.3").num_qubits(), 4);
    EXPECT_EQ(named_state("mixed:1").num_qubits(), 1);
    const auto path = write_state("named.json", random_density_matrix(2, 9));
    EXPECT_EQ(named_state("file:" + path).num_qubits(), 2);
    EXPECT_THROW(named_state("werner:2"), std::invalid_argument);
}
