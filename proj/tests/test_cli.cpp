#include <array>
#include <cstdio>
#include <fstream>
#include <regex>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
    int exit_code;
    std::string stdout_text;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(PURSUIT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string strip_wall_ms(std::string text) {
    return std::regex_replace(text, std::regex("\"wall_ms\": [0-9]+"), "\"wall_ms\": 0");
}

nlohmann::json parse(const std::string& text) {
    return nlohmann::json::parse(text);
}

}  // namespace

TEST_CASE("solve command") {
    auto run = run_cli("solve --game attacking --graph builtin:c7 --max-cops 4");
    CHECK(run.exit_code == 0);
    auto j = parse(run.stdout_text);
    CHECK(j["schema"] == 1);
    CHECK(j["value"] == 3);
    CHECK(j["game"] == "attacking");
    CHECK(j["exceeds_max_cops"] == false);
    CHECK(j["winning_placement"].size() == 3);

    auto classic = parse(run_cli("solve --game classic --graph builtin:p4 --max-cops 2").stdout_text);
    CHECK(classic["value"] == 1);

    auto capped = parse(run_cli("solve --game classic --graph builtin:c7 --max-cops 1").stdout_text);
    CHECK(capped["value"].is_null());
    CHECK(capped["exceeds_max_cops"] == true);
}

TEST_CASE("solve budget refusal exits 2 and names the state count") {
    auto run = run_cli("solve --game attacking --graph builtin:h1 --max-cops 6");
    CHECK(run.exit_code == 2);
    auto j = parse(run.stdout_text);
    CHECK(j["error"] == "state budget exceeded");
    CHECK(j["required_states"].get<uint64_t>() > j["budget_states"].get<uint64_t>());

    auto env_run = run_cli("solve --game classic --graph builtin:c7 --max-cops 2 --budget 10");
    CHECK(env_run.exit_code == 2);
}

TEST_CASE("solve input errors exit 1") {
    CHECK(run_cli("solve --game classic --graph builtin:nope --max-cops 1").exit_code == 1);
    CHECK(run_cli("solve --game classic --graph /does/not/exist.g6 --max-cops 1").exit_code == 1);
    CHECK(run_cli("solve --game sideways --graph builtin:c7 --max-cops 1").exit_code == 1);
}

TEST_CASE("solve writes table and trace artifacts") {
    std::string table_path = "cli_test_table.bin";
    std::string trace_path = "cli_test_trace.json";
    auto run = run_cli("solve --game attacking --graph builtin:p4 --max-cops 2 --table " +
                       table_path + " --trace " + trace_path);
    CHECK(run.exit_code == 0);
    std::ifstream table(table_path, std::ios::binary);
    REQUIRE(table.good());
    std::string magic(8, '\0');
    table.read(magic.data(), 8);
    CHECK(magic == "PURSTBL1");
    std::ifstream trace(trace_path);
    REQUIRE(trace.good());
    nlohmann::json tj;
    trace >> tj;
    CHECK(tj["outcome"] == "capture");
    std::remove(table_path.c_str());
    std::remove(trace_path.c_str());
}

TEST_CASE("certify command") {
    auto square = parse(run_cli("certify --lemma square --graph builtin:g1").stdout_text);
    CHECK(square["applies"] == true);
    CHECK(square["certificate"]["bound"] == 6);
    CHECK(square["certificate"]["gamma"]["value"] == 9);

    auto cc2 = parse(run_cli("certify --lemma cc2-trianglefree --graph builtin:c7").stdout_text);
    CHECK(cc2["holds"] == false);

    auto cc1 = parse(run_cli("certify --lemma cc1 --graph builtin:star6").stdout_text);
    CHECK(cc1["holds"] == true);

    auto none = parse(run_cli("certify --lemma girth5 --graph builtin:petersen").stdout_text);
    CHECK(none["applies"] == false);

    CHECK(run_cli("certify --lemma cc2-trianglefree --graph builtin:fig2").exit_code == 1);
    CHECK(run_cli("certify --lemma unknown --graph builtin:c7").exit_code == 1);
}

TEST_CASE("construct command") {
    std::string out_path = "cli_test_graph.g6";
    auto run = run_cli("construct --op subdivide --in builtin:dodecahedron --out " + out_path);
    CHECK(run.exit_code == 0);
    auto j = parse(run.stdout_text);
    CHECK(j["n"] == 50);
    CHECK(j["m"] == 60);
    CHECK(j["bipartite"] == true);
    CHECK(j["girth"] == 10);
    std::ifstream file(out_path);
    REQUIRE(file.good());
    std::string line;
    std::getline(file, line);
    CHECK(!line.empty());
    std::remove(out_path.c_str());

    auto square = parse(
        run_cli("construct --op square-minus-e --in builtin:g1").stdout_text);
    CHECK(square["n"] == 58);
    CHECK(square["min_degree"] == 6);
    CHECK(square["max_degree"] == 6);

    auto lg = parse(run_cli("construct --op line-graph --in builtin:petersen").stdout_text);
    CHECK(lg["n"] == 15);
}

TEST_CASE("audit command over a tiny corpus") {
    auto run = run_cli("audit --corpus small:5 --max-cops 3");
    CHECK(run.exit_code == 0);
    auto j = parse(run.stdout_text);
    CHECK(j["violations"] == 0);
    CHECK(j["graphs"].size() == 1 + 1 + 2 + 6 + 21);

    // a corpus file of graph6 lines
    std::string corpus_path = "cli_test_corpus.g6";
    {
        std::ofstream corpus(corpus_path);
        corpus << "A_\n";   // K2
        corpus << "Ch\n";   // P4
    }
    auto file_run = run_cli("audit --corpus " + corpus_path + " --max-cops 3");
    CHECK(file_run.exit_code == 0);
    auto fj = parse(file_run.stdout_text);
    CHECK(fj["graphs"].size() == 2);
    std::remove(corpus_path.c_str());

    std::string empty_path = "cli_test_empty.g6";
    std::ofstream(empty_path).close();
    CHECK(run_cli("audit --corpus " + empty_path + " --max-cops 3").exit_code == 1);
    std::remove(empty_path.c_str());
}

TEST_CASE("identical runs produce byte-identical payloads") {
    const std::string commands[] = {
        "solve --game attacking --graph builtin:c7 --max-cops 4",
        "solve --game classic --graph builtin:petersen --max-cops 3",
        "certify --lemma square --graph builtin:g1",
        "certify --lemma cc2-trianglefree --graph builtin:c4",
        "construct --op line-graph --in builtin:petersen",
        "audit --corpus small:4 --max-cops 2",
    };
    for (const auto& cmd : commands) {
        CAPTURE(cmd);
        auto first = run_cli(cmd);
        auto second = run_cli(cmd);
        CHECK(first.exit_code == second.exit_code);
        CHECK(strip_wall_ms(first.stdout_text) == strip_wall_ms(second.stdout_text));
    }
}
