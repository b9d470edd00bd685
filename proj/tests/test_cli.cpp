#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string out_path = std::string(CONTSPEC_CLI_PATH) + ".out.tmp";
    const std::string command =
        std::string(CONTSPEC_CLI_PATH) + " " + args + " > " + out_path + " 2>/dev/null";
    const int status = std::system(command.c_str());
    RunResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream file(out_path);
    std::stringstream buffer;
    buffer << file.rdbuf();
    result.output = buffer.str();
    std::remove(out_path.c_str());
    return result;
}

json run_json(const std::string& args, int expected_code = 0) {
    const auto result = run_cli(args);
    REQUIRE(result.exit_code == expected_code);
    return json::parse(result.output);
}

} // namespace

TEST_CASE("submonoid subcommand") {
    const json doc = run_json("submonoid -g 3,5 -N 10");
    CHECK(doc.at("canonical").at("gaps") == json::array({1, 2, 4, 7}));
    CHECK(doc.at("canonical").at("conductor") == 8);
    CHECK(doc.at("members") == json::array({0, 3, 5, 6, 8, 9, 10}));
    CHECK(doc.at("negation_closed") == false);

    const json zero = run_json("submonoid -g '' -N 3");
    CHECK(zero.at("canonical").at("variant") == "zero");
    CHECK(zero.at("members") == json::array({0}));

    const json mixed = run_json("submonoid -g 3,-5 -N 3");
    CHECK(mixed.at("canonical") == json({{"d", 1}, {"variant", "group"}}));
    CHECK(mixed.at("members") == json::array({-3, -2, -1, 0, 1, 2, 3}));
}

TEST_CASE("submonoid input errors exit with code 2") {
    CHECK(run_cli("submonoid -g 3,x5 -N 10").exit_code == 2);
    CHECK(run_cli("submonoid -g 3,5 -N 0").exit_code == 2);
    CHECK(run_cli("submonoid -g 3,5").exit_code == 2); // missing -N
    CHECK(run_cli("bogus-subcommand").exit_code == 2);
}

TEST_CASE("realize-line reports matching spectra") {
    const json doc = run_json("realize-line -g 3,4,5 -N 6");
    CHECK(doc.at("spectrum") == json::array({0, 3, 4, 5, 6}));
    CHECK(doc.at("expected") == doc.at("spectrum"));
    CHECK(doc.at("match") == true);
    CHECK(doc.at("W") == 13);

    bool saw_witness = false;
    for (const auto& it : doc.at("iterates")) {
        if (it.at("n") == 1) {
            REQUIRE(it.contains("witnesses"));
            CHECK(it.at("witnesses").at(0).at("column") == 0);
            saw_witness = true;
        }
    }
    CHECK(saw_witness);

    CHECK(run_json("realize-line -g 1 -N 3").at("spectrum") == json::array({0, 1, 2, 3}));
    CHECK(run_json("realize-line -g 1,-1 -N 3").at("spectrum") ==
          json::array({-3, -2, -1, 0, 1, 2, 3}));
}

TEST_CASE("realize-line rejects undersized windows") {
    CHECK(run_cli("realize-line -g 3,4,5 -N 6 -W 10").exit_code == 2);
}

TEST_CASE("realize-line figure formats") {
    const auto svg = run_cli("realize-line -g 3,4,5 -N 6 --format svg");
    CHECK(svg.exit_code == 0);
    CHECK(svg.output.rfind("<svg", 0) == 0);
    const auto dot = run_cli("realize-line -g 3,4,5 -N 6 --format dot");
    CHECK(dot.exit_code == 0);
    CHECK(dot.output.rfind("digraph", 0) == 0);
}

TEST_CASE("topologies subcommand") {
    const json doc = run_json("topologies -n 3");
    CHECK(doc.at("labeled") == 29);
    CHECK(doc.at("classes") == 9);
    CHECK(doc.at("table").size() == 9);

    CHECK(run_json("topologies -n 1").at("labeled") == 1);
    CHECK(run_cli("topologies -n 5").exit_code == 2);
}

TEST_CASE("group subcommand across variants") {
    const json open = run_json("group --builtin s3 --subset e,r1,r2 --variant open");
    CHECK(open.at("spectrum_names") == json::array({"e", "r1", "r2"}));
    CHECK(open.at("match") == true);
    CHECK(open.at("composition_law") == true);
    CHECK(open.at("bijective_family") == true);

    const json compact = run_json("group --builtin z6 --subset 0,3 --variant compact");
    CHECK(compact.at("spectrum") == json::array({0, 3}));
    CHECK(compact.at("inverse_closed") == true);

    const std::string table_path = std::string(CONTSPEC_DATA_DIR) + "/m2.json";
    const json monoid = run_json("group --table " + table_path + " --subset e --variant monoid");
    CHECK(monoid.at("spectrum") == json::array({0}));
    CHECK(monoid.at("match") == true);
    CHECK(monoid.at("bijective_family") == false);
    CHECK(monoid.at("non_bijective") == json::array({"1"}));
}

TEST_CASE("identical invocations produce byte-identical output") {
    const auto first = run_cli("realize-line -g 3,4,5 -N 6");
    const auto second = run_cli("realize-line -g 3,4,5 -N 6");
    CHECK(first.output == second.output);
    CHECK(run_cli("topologies -n 3").output == run_cli("topologies -n 3").output);
}

TEST_CASE("group subcommand input errors") {
    CHECK(run_cli("group --builtin s3 --subset e,r1 --variant open").exit_code == 2);
    CHECK(run_cli("group --builtin z6 --subset 0,1,2 --variant compact").exit_code == 2);
    CHECK(run_cli("group --builtin q8 --subset e").exit_code == 2);
    CHECK(run_cli("group --subset e").exit_code == 2); // no table given
    const std::string monoid_path = std::string(CONTSPEC_DATA_DIR) + "/m2.json";
    CHECK(run_cli("group --table " + monoid_path + " --subset e --variant open").exit_code == 2);
    CHECK(run_cli("group --table /nonexistent.json --subset e").exit_code == 2);
}
