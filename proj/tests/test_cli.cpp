#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "naqcsim/oracle.hpp"

namespace {

struct RunResult {
    int status = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string("\"") + NAQC_CLI_PATH + "\" " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) return {};
    RunResult result;
    char buf[4096];
    std::size_t n = 0;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) result.output.append(buf, n);
    const int rc = pclose(pipe);
    result.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return result;
}

double value_after(const std::string& text, const std::string& key) {
    const auto pos = text.find(key);
    REQUIRE(pos != std::string::npos);
    return std::strtod(text.c_str() + pos + key.size(), nullptr);
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) lines.push_back(line);
    return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ',')) cells.push_back(cell);
    return cells;
}

std::string temp_path(const char* name) {
    return std::string("/tmp/naqc_cli_test_") + name;
}

}  // namespace

TEST_CASE("compute reports the sharp singlet ceiling") {
    for (const char* tok : {"l1", "relent", "skew"}) {
        const RunResult r = run_cli(std::string("compute --measure ") + tok + " --chain 1");
        CHECK(r.status == 0);
        CHECK(value_after(r.output, "value: ") == doctest::Approx(3.0).epsilon(1e-12));
        CHECK(r.output.find("violated: true") != std::string::npos);
    }
    const RunResult l1 = run_cli("compute --measure l1 --chain 1");
    CHECK(l1.output.find("bound: 2.44948974278") != std::string::npos);
}

TEST_CASE("compute matches the two-observer closed form") {
    const RunResult r = run_cli("compute --measure l1 --chain 0.6,1");
    CHECK(r.status == 0);
    CHECK(r.output.find("chain: 0.6,1\n") != std::string::npos);
    CHECK(r.output.find("value: 2.6\n") != std::string::npos);
    CHECK(r.output.find("violated: true") != std::string::npos);

    const RunResult s = run_cli("compute --measure skew --chain 0.9,1");
    CHECK(value_after(s.output, "value: ") ==
          doctest::Approx(naqcsim::oracle::n2_s(0.9, 1.0)).epsilon(1e-10));
    CHECK(s.output.find("violated: false") != std::string::npos);
}

TEST_CASE("sweep emits one csv row per grid point and is deterministic") {
    const std::string args = "sweep --measure l1 --range 0.2:0.8:0.2 --range 1";
    const RunResult first = run_cli(args);
    const RunResult second = run_cli(args);
    CHECK(first.status == 0);
    CHECK(first.output == second.output);

    const auto rows = lines_of(first.output);
    REQUIRE(rows.size() == 5);
    CHECK(rows[0] == "lambda1,lambda2,value,bound,violated");
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto cells = split_csv(rows[i]);
        REQUIRE(cells.size() == 5);
        const double l1 = std::strtod(cells[0].c_str(), nullptr);
        const double l2 = std::strtod(cells[1].c_str(), nullptr);
        const double value = std::strtod(cells[2].c_str(), nullptr);
        const double bound = std::strtod(cells[3].c_str(), nullptr);
        CHECK(l1 == doctest::Approx(0.2 * static_cast<double>(i)).epsilon(1e-12));
        CHECK(l2 == 1.0);
        CHECK(value == doctest::Approx(naqcsim::oracle::n2_l1(l1, l2)).epsilon(1e-9));
        CHECK(bound == doctest::Approx(std::sqrt(6.0)).epsilon(1e-11));
        CHECK(cells[4] == ((value > bound) ? "true" : "false"));
    }
}

TEST_CASE("sweep writes the same bytes to a file as to stdout") {
    const std::string path = temp_path("sweep.csv");
    const std::string args = "sweep --measure relent --range 0.3:0.7:0.2 --range 0.9";
    const RunResult to_stdout = run_cli(args);
    const RunResult to_file = run_cli(args + " --out " + path);
    CHECK(to_file.status == 0);

    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream content;
    content << in.rdbuf();
    CHECK(content.str() == to_stdout.output);
    std::remove(path.c_str());
}

TEST_CASE("sweep renders json records") {
    const RunResult r = run_cli("sweep --measure skew --range 0.5 --range 0.25:1:0.25 --format json");
    CHECK(r.status == 0);
    CHECK(r.output.front() == '[');
    CHECK(r.output.find("\"lambdas\"") != std::string::npos);

    std::size_t records = 0, pos = 0;
    while ((pos = r.output.find("\"value\"", pos)) != std::string::npos) {
        ++records;
        ++pos;
    }
    CHECK(records == 4);
    CHECK(value_after(r.output, "\"value\":") ==
          doctest::Approx(naqcsim::oracle::n2_s(0.5, 0.25)).epsilon(1e-9));
}

TEST_CASE("threshold prints nine-digit roots and their closed forms") {
    const RunResult l1 = run_cli("threshold --measure l1 --alice 1");
    CHECK(l1.status == 0);
    CHECK(l1.output.find("threshold: 0.51763809\n") != std::string::npos);
    CHECK(l1.output.find("closed_form: (sqrt(3)-1)/sqrt(2)") != std::string::npos);

    const RunResult skew = run_cli("threshold --measure skew --alice 1");
    CHECK(skew.output.find("threshold: 0.707106781\n") != std::string::npos);
    CHECK(skew.output.find("closed_form: 1/sqrt(2)") != std::string::npos);

    const RunResult ent = run_cli("threshold --measure relent --alice 1");
    CHECK(value_after(ent.output, "threshold: ") == doctest::Approx(0.649588833).epsilon(1e-8));

    const RunResult second = run_cli("threshold --measure l1 --alice 2");
    CHECK(second.status == 0);
    CHECK(second.output.find("predecessors: 0.51763809\n") != std::string::npos);
    CHECK(value_after(second.output, "threshold: ") ==
          doctest::Approx(0.632395114).epsilon(1e-8));

    const RunResult custom = run_cli("threshold --measure l1 --alice 2 --predecessors 0.6");
    CHECK(value_after(custom.output, "threshold: ") ==
          doctest::Approx(naqcsim::oracle::solve_threshold(
                              [](double l2) { return naqcsim::oracle::n2_l1(0.6, l2); },
                              std::sqrt(6.0), 0.01, 1.0))
              .epsilon(1e-7));
}

TEST_CASE("threshold curve lists solvable and unsolvable predecessors") {
    const RunResult curve = run_cli("threshold --measure l1 --alice 2 --curve 0.52:0.6:0.04");
    CHECK(curve.status == 0);
    const auto rows = lines_of(curve.output);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0] == "lambda1,lambda2_threshold");
    double prev = 0.0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto cells = split_csv(rows[i]);
        REQUIRE(cells.size() == 2);
        const double thr = std::strtod(cells[1].c_str(), nullptr);
        CHECK(thr > prev);  // a sharper first observer forces a sharper second
        prev = thr;
    }

    const RunResult none = run_cli("threshold --measure skew --alice 2 --curve 0.75:0.8:0.05");
    CHECK(none.status == 0);
    CHECK(none.output.find(",nan") != std::string::npos);
}

TEST_CASE("max-alices reports the sequential observer counts") {
    const RunResult l1 = run_cli("max-alices --measure l1");
    CHECK(l1.status == 0);
    CHECK(l1.output.find("max_alices: 2\n") != std::string::npos);
    CHECK(l1.output.find("witness_lambda1_window: (0.51763809") != std::string::npos);
    CHECK(l1.output.find("witness_chain: ") != std::string::npos);

    const RunResult skew = run_cli("max-alices --measure skew --grid-step 0.02");
    CHECK(skew.output.find("max_alices: 1\n") != std::string::npos);
    CHECK(skew.output.find("witness_lambda1_window") == std::string::npos);

    const RunResult ent = run_cli("max-alices --measure relent --grid-step 0.02");
    CHECK(ent.output.find("max_alices: 1\n") != std::string::npos);
}

TEST_CASE("complementarity-sample scans random states") {
    const std::string path = temp_path("sample.csv");
    const RunResult r = run_cli("complementarity-sample --count 200 --seed 7 --out " + path);
    CHECK(r.status == 0);
    CHECK(r.output.find("samples: 200") != std::string::npos);
    CHECK(r.output.find("overall: PASS") != std::string::npos);
    CHECK(r.output.find("within_bound: true") != std::string::npos);

    std::ifstream in(path);
    REQUIRE(in.good());
    std::string header;
    std::getline(in, header);
    CHECK(header == "rx,ry,rz,sum_l1,sum_relent,sum_skew");
    std::size_t rows = 0;
    for (std::string line; std::getline(in, line);)
        if (!line.empty()) ++rows;
    CHECK(rows == 200);
    std::remove(path.c_str());
}

TEST_CASE("quick verification pass") {
    const RunResult r = run_cli("verify --samples 400 --seed 5 --grid-step 0.05");
    CHECK(r.status == 0);
    CHECK(r.output.find("[PASS]") != std::string::npos);
    CHECK(r.output.find("[FAIL]") == std::string::npos);
    CHECK(r.output.find("[INFO]") != std::string::npos);
    CHECK(r.output.find("overall: PASS") != std::string::npos);
}

TEST_CASE("failure exit codes are distinct") {
    CHECK(run_cli("--help").status == 0);
    CHECK(run_cli("compute --measure l1").status == 2);        // missing required option
    CHECK(run_cli("compute --measure bogus --chain 1").status == 2);
    CHECK(run_cli("no-such-command").status == 2);
    CHECK(run_cli("threshold --measure skew --alice 2").status == 4);  // no root to find
    CHECK(run_cli("sweep --measure l1 --range 0.5 --out /nonexistent_dir_zz/x.csv").status == 3);
}
