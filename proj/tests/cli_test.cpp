#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "json.hpp"
#include "support/fixtures.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output; // stdout and stderr interleaved
};

RunResult run_cli(const std::string& args) {
    std::string command = std::string(ALCPROB_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) result.output.append(buf.data(), n);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string fixture(const std::string& name) { return alcprob::test::fixture_path(name); }

const std::string kQuery = "\"ClassAssertion(NatureLover, kevin)\"";

} // namespace

TEST_CASE("prob prints the published probabilities") {
    RunResult r1 = run_cli("prob --kb " + fixture("example1.dlp") + " --query " + kQuery);
    CHECK(r1.exit_code == 0);
    CHECK(r1.output == "P = 0.3\n");

    RunResult r2 = run_cli("prob --kb " + fixture("example2.dlp") + " --query " + kQuery);
    CHECK(r2.exit_code == 0);
    CHECK(r2.output == "P = 0.58\n");

    RunResult minas = run_cli("prob --kb " + fixture("example2.dlp") + " --query " + kQuery +
                              " --mode minas");
    CHECK(minas.exit_code == 0);
    CHECK(minas.output == "P = 0.58\n");
}

TEST_CASE("prob with cross-check reports both numbers") {
    RunResult r = run_cli("prob --cross-check --kb " + fixture("example1.dlp") + " --query " +
                          kQuery);
    CHECK(r.exit_code == 0);
    CHECK(r.output == "P = 0.3\noracle P = 0.3\n");
}

TEST_CASE("prob emits schema-conformant JSON") {
    for (const char* cmd : {"prob", "explain", "check", "oracle"}) {
        RunResult r = run_cli(std::string(cmd) + " --json --kb " + fixture("example1.dlp") +
                              " --query " + kQuery);
        CHECK(r.exit_code == 0);
        json doc = json::parse(r.output);
        CHECK(doc["query"] == "ClassAssertion(NatureLover, kevin)");
        CHECK(doc["entailed"].is_boolean());
        CHECK((doc["probability"].is_number() || doc["probability"].is_null()));
        CHECK((doc["minas"].is_array() || doc["minas"].is_null()));
        CHECK((doc["pinpointing_formula"].is_string() || doc["pinpointing_formula"].is_null()));
        CHECK(doc["mode"] == "pinpoint");
        CHECK(doc["stats"]["rule_firings"].is_number_integer());
        CHECK(doc["stats"]["bdd_nodes"].is_number_integer());
        CHECK((doc["stats"]["worlds"].is_number_integer() || doc["stats"]["worlds"].is_null()));
    }
}

TEST_CASE("prob JSON carries the expected values") {
    RunResult r = run_cli("prob --json --kb " + fixture("example1.dlp") + " --query " + kQuery);
    json doc = json::parse(r.output);
    CHECK(doc["entailed"] == true);
    CHECK(doc["probability"].get<double>() == doctest::Approx(0.3).epsilon(1e-9));
    CHECK(doc["minas"] == json::parse("[[1,2,3,5],[1,2,4,6]]"));
    CHECK(doc["stats"]["worlds"].is_null());

    RunResult o = run_cli("oracle --json --kb " + fixture("example1.dlp") + " --query " + kQuery);
    json odoc = json::parse(o.output);
    CHECK(odoc["stats"]["worlds"] == 4);
    CHECK(odoc["probability"].get<double>() == doctest::Approx(0.3).epsilon(1e-9));
}

TEST_CASE("explain lists MinAs with axiom text") {
    RunResult r = run_cli("explain --kb " + fixture("example3.dlp") + " --query " + kQuery);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("{1, 2, 4, 6}") != std::string::npos);
    CHECK(r.output.find("{1, 3, 5, 6}") != std::string::npos);
    CHECK(r.output.find("F6: SubClassOf(Cat, Pet)") != std::string::npos);
    CHECK(r.output.find("pinpointing formula:") != std::string::npos);

    RunResult none = run_cli("explain --kb " + fixture("example1.dlp") +
                             " --query \"ClassAssertion(Dog, kevin)\"");
    CHECK(none.exit_code == 0);
    CHECK(none.output == "not entailed\n");
}

TEST_CASE("check prints the entailment verdict") {
    RunResult yes = run_cli("check --kb " + fixture("example1.dlp") + " --query " + kQuery);
    CHECK(yes.exit_code == 0);
    CHECK(yes.output == "entailed\n");

    RunResult no = run_cli("check --kb " + fixture("example1.dlp") +
                           " --query \"ClassAssertion(Dog, kevin)\"");
    CHECK(no.exit_code == 0);
    CHECK(no.output == "not entailed\n");
}

TEST_CASE("oracle prints the world table") {
    RunResult r = run_cli("oracle --kb " + fixture("example2.dlp") + " --query " + kQuery);
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "4 worlds, 3 entailing\n"
          "P = 0.58\n"
          "00  0.42  no\n"
          "10  0.28  yes\n"
          "01  0.18  yes\n"
          "11  0.12  yes\n");
}

TEST_CASE("identical invocations produce identical output") {
    std::string args = "prob --json --kb " + fixture("example3.dlp") + " --query " + kQuery;
    RunResult a = run_cli(args);
    RunResult b = run_cli(args);
    CHECK(a.output == b.output);
    CHECK(a.exit_code == b.exit_code);
}

TEST_CASE("emit-bdd writes the diagram text") {
    std::string path = "/tmp/alcprob_cli_test.bdd";
    std::remove(path.c_str());
    RunResult r = run_cli("prob --kb " + fixture("example1.dlp") + " --query " + kQuery +
                          " --emit-bdd " + path);
    CHECK(r.exit_code == 0);
    std::ifstream in(path);
    REQUIRE(in.good());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(text.find("root") != std::string::npos);
    CHECK(text.find("F1") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("var-order override keeps the answer") {
    RunResult r = run_cli("prob --kb " + fixture("example1.dlp") + " --query " + kQuery +
                          " --var-order 6,5,4,3,2,1");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "P = 0.3\n");

    RunResult bad = run_cli("prob --kb " + fixture("example1.dlp") + " --query " + kQuery +
                            " --var-order 1,2,3");
    CHECK(bad.exit_code == 1);
    CHECK(bad.output.find("permutation") != std::string::npos);
}

TEST_CASE("parse errors exit with code 1 and a located message") {
    std::string path = "/tmp/alcprob_cli_bad.dlp";
    std::ofstream(path) << "SubClassOf(Cat, Pet)\nSubClassOf(Cat Pet)\n";
    RunResult r = run_cli("check --kb " + path + " --query " + kQuery);
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("2:16") != std::string::npos);
    std::remove(path.c_str());

    RunResult missing = run_cli("check --kb /nonexistent.dlp --query " + kQuery);
    CHECK(missing.exit_code == 1);

    RunResult badq = run_cli("check --kb " + fixture("example1.dlp") +
                             " --query \"ObjectPropertyAssertion(R, a, b)\"");
    CHECK(badq.exit_code == 1);

    RunResult usage = run_cli("frobnicate --kb x --query y");
    CHECK(usage.exit_code == 1);
}

TEST_CASE("budget and cap exhaustion exit with code 2") {
    RunResult r = run_cli("prob --kb " + fixture("example1.dlp") + " --query " + kQuery +
                          " --budget 3");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("budget") != std::string::npos);

    RunResult cap = run_cli("oracle --kb " + fixture("example1.dlp") + " --query " + kQuery +
                            " --oracle-cap 1");
    CHECK(cap.exit_code == 2);
}
