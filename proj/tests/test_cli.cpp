#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#ifndef DIOPH_CLI_PATH
#error "DIOPH_CLI_PATH must point at the built CLI binary"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string command = std::string(DIOPH_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buffer[4096];
    size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) out.append(buffer, got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path, std::ios::binary) << content;
    return path;
}

const std::string k5_doc =
    "p 5\n1 2\n1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n3 4\n3 5\n4 5\n";
const std::string petersen_doc =
    "p 10\n1 2\n1 5\n1 6\n2 3\n2 7\n3 4\n3 8\n4 5\n4 9\n5 10\n"
    "6 8\n6 9\n7 9\n7 10\n8 10\n";

}  // namespace

TEST_CASE("maximal emits canonical edge lists") {
    auto r = run_cli("maximal --n 4 --emit edges");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "p 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n");

    CHECK(run_cli("maximal --n 1 --emit edges").out == "p 1\n");
    CHECK(run_cli("maximal --n 1").out == "p 1\n");

    auto d8 = run_cli("maximal --n 8");
    size_t lines = 0;
    for (char c : d8.out) lines += c == '\n';
    CHECK(lines == 28);  // header plus 27 edges

    auto dot = run_cli("maximal --n 4 --emit dot");
    CHECK(dot.exit_code == 0);
    CHECK(dot.out.rfind("graph {", 0) == 0);

    // at prime order the two kinds have identical edge sets
    CHECK(run_cli("maximal --n 5 --kind prime").out == run_cli("maximal --n 5").out);
    auto r8 = run_cli("maximal --n 8 --kind prime");
    size_t r8_lines = 0;
    for (char c : r8.out) r8_lines += c == '\n';
    CHECK(r8_lines == 22);  // header plus 21 coprime pairs
}

TEST_CASE("edge counting methods and the mismatch tripwire") {
    CHECK(run_cli("edges --n 5").out == "9\n");
    CHECK(run_cli("edges --n 7 --method brute").out == "17\n");

    auto both = run_cli("edges --n 7 --method both");
    CHECK(both.exit_code == 0);
    CHECK(both.out == "formula 17\nbrute 17\n");

    auto big = run_cli("edges --n 20 --method both");
    CHECK(big.exit_code == 0);
    CHECK(big.out == "formula 173\nbrute 173\n");

    CHECK(run_cli("edges --n 200001 --method brute").exit_code == 2);
}

TEST_CASE("degree tables") {
    auto full = run_cli("degrees --n 8 --full-only");
    CHECK(full.exit_code == 0);
    CHECK(full.out ==
          "label degree reduced class\n"
          "1 7 1 1\n2 7 1 1\n4 7 1 1\n5 7 5 1\n7 7 7 1\n8 7 1 1\n");

    auto d20 = run_cli("degrees --n 20");
    CHECK(d20.exit_code == 0);
    CHECK(d20.out.find("14 18 7 2\n") != std::string::npos);

    auto d4 = run_cli("degrees --n 4");
    CHECK(d4.out == "label degree reduced class\n1 3 1 1\n2 3 1 1\n3 3 3 1\n4 3 1 1\n");

    CHECK(run_cli("degrees --n 20").out == run_cli("degrees --n 20").out);
}

TEST_CASE("solve and check round-trip") {
    const auto k5 = write_temp("dioph_cli_k5.edges", k5_doc);
    const auto petersen = write_temp("dioph_cli_petersen.edges", petersen_doc);

    auto unsat = run_cli("solve --graph " + k5.string() + " --mode dio");
    CHECK(unsat.exit_code == 1);
    CHECK(unsat.out == "UNSAT\n");

    auto sat = run_cli("solve --graph " + petersen.string() + " --mode dio");
    CHECK(sat.exit_code == 0);
    const auto labels = write_temp("dioph_cli_petersen.labels", sat.out);
    auto check = run_cli("check --graph " + petersen.string() + " --labels " + labels.string() +
                         " --mode dio");
    CHECK(check.exit_code == 0);
    CHECK(check.out == "OK\n");

    const auto k4 = write_temp("dioph_cli_k4.edges", "p 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n");
    CHECK(run_cli("solve --graph " + k4.string() + " --mode dio").exit_code == 0);

    auto limited = run_cli("solve --graph " + petersen.string() + " --mode dio --node-limit 1");
    CHECK(limited.exit_code == 3);
    CHECK(limited.out == "LIMIT\n");
}

TEST_CASE("check reports each violating edge with its gcd") {
    const auto k5 = write_temp("dioph_cli_k5b.edges", k5_doc);
    const auto identity = write_temp("dioph_cli_k5b.labels", "1 1\n2 2\n3 3\n4 4\n5 5\n");
    auto r = run_cli("check --graph " + k5.string() + " --labels " + identity.string() +
                     " --mode dio");
    CHECK(r.exit_code == 1);
    CHECK(r.out == "violation: edge (2,4) labels (2,4) gcd 2\n");

    const auto p3 = write_temp("dioph_cli_p3.edges", "p 3\n1 2\n2 3\n");
    const auto p3_labels = write_temp("dioph_cli_p3.labels", "1 1\n2 2\n3 3\n");
    auto prime = run_cli("check --graph " + p3.string() + " --labels " + p3_labels.string() +
                         " --mode prime");
    CHECK(prime.exit_code == 0);
    CHECK(prime.out == "OK\n");

    const auto bad_labels = write_temp("dioph_cli_p3bad.labels", "1 1\n2 2\n3 2\n");
    CHECK(run_cli("check --graph " + p3.string() + " --labels " + bad_labels.string() +
                  " --mode dio")
              .exit_code == 2);
}

TEST_CASE("survey emits the fixed CSV schema") {
    const auto out = std::filesystem::temp_directory_path() / "dioph_cli_survey.csv";
    auto r = run_cli("survey --from 4 --to 8 --brute-upto 8 --out " + out.string());
    CHECK(r.exit_code == 0);

    std::ifstream in(out);
    std::string header, line;
    std::getline(in, header);
    CHECK(header == "n,edges_formula,edges_brute,full_degree_count,sy_bound,dn_eq_rn,n_is_prime");
    std::vector<std::string> rows;
    while (std::getline(in, line)) rows.push_back(line);
    REQUIRE(rows.size() == 5);
    CHECK(rows[0] == "4,6,6,4,4,false,false");
    CHECK(rows[1] == "5,9,9,3,5,true,true");
    CHECK(rows[3] == "7,17,17,3,7,true,true");
    CHECK(rows[4] == "8,27,27,6,7,false,false");

    SUBCASE("brute column stays empty past the brute cap") {
        auto partial = run_cli("survey --from 4 --to 6 --brute-upto 5 --out -");
        CHECK(partial.exit_code == 0);
        CHECK(partial.out.find("6,15,,") != std::string::npos);
    }

    CHECK(run_cli("survey --from 4 --to 8 --out /nonexistent/dir/x.csv").exit_code == 2);
    CHECK(run_cli("survey --from 1 --to 8 --out -").exit_code == 2);
}

TEST_CASE("verify-theorems harness outcomes") {
    auto vacuous = run_cli("verify-theorems --n-max 2");
    CHECK(vacuous.exit_code == 0);
    CHECK(vacuous.out.find("OK: no counterexamples") != std::string::npos);

    auto d23 = run_cli("verify-theorems --n-max 23");
    CHECK(d23.exit_code == 0);
    CHECK(d23.out.find("converse non-example") != std::string::npos);
    CHECK(d23.out.find("EQ_OMEGA") != std::string::npos);
    CHECK(d23.out.find("lemma sqrt_bracket_postcondition") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("edges").exit_code == 2);
    CHECK(run_cli("edges --n 5 --method fancy").exit_code == 2);
    CHECK(run_cli("edges --n 0").exit_code == 2);
    CHECK(run_cli("maximal --order 5").exit_code == 2);
    CHECK(run_cli("degrees --n 1").exit_code == 2);
    CHECK(run_cli("solve --graph /nonexistent.edges --mode dio").exit_code == 2);
    CHECK(run_cli("verify-theorems --n-max 1").exit_code == 2);

    const auto bad = write_temp("dioph_cli_bad.edges", "p 2\n1 1\n");
    CHECK(run_cli("solve --graph " + bad.string() + " --mode dio").exit_code == 2);
}
