#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
    int exitCode = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    std::string path = "cli_out_" + std::to_string(counter++) + ".txt";
    std::string cmd = std::string(BEI_CLI_PATH) + " " + args + " > " + path + " 2>&1";
    int rc = std::system(cmd.c_str());
    RunResult r;
#ifdef _WIN32
    r.exitCode = rc;
#else
    r.exitCode = WEXITSTATUS(rc);
#endif
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    r.out = ss.str();
    std::remove(path.c_str());
    return r;
}

}  // namespace

TEST_CASE("build prints the graph") {
    auto r = run_cli("build \"Fm(2)\"");
    CHECK(r.exitCode == 0);
    CHECK(r.out.find("4") != std::string::npos);

    auto j = run_cli("build \"Fm(2)\" --format json");
    CHECK(j.exitCode == 0);
    auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["n"] == 4);
    CHECK(parsed["edges"].size() == 3);
}

TEST_CASE("invariants in closed mode") {
    auto r = run_cli("invariants \"Fm(3)\" --mode closed --format json");
    CHECK(r.exitCode == 0);
    auto parsed = nlohmann::json::parse(r.out);
    CHECK(parsed["reg"] == 3);
    CHECK(parsed["extremalBetti"] == 5);
    CHECK(parsed["cmTypeConjectural"] == true);
}

TEST_CASE("betti table output") {
    auto r = run_cli("betti \"K(3)\" --subject J --format json");
    CHECK(r.exitCode == 0);
    auto parsed = nlohmann::json::parse(r.out);
    bool saw = false;
    for (const auto& e : parsed["entries"])
        if (e["i"] == 2 && e["j"] == 3) {
            CHECK(e["beta"] == 2);
            saw = true;
        }
    CHECK(saw);
}

TEST_CASE("hilbert output") {
    auto r = run_cli("hilbert \"Fm(2)\" --format json");
    CHECK(r.exitCode == 0);
    auto parsed = nlohmann::json::parse(r.out);
    CHECK(parsed["h"] == nlohmann::json::array({1, 3, 3, 1}));
    CHECK(parsed["d"] == 5);
}

TEST_CASE("verify exit codes") {
    CHECK(run_cli("verify \"Fm(3)\"").exitCode == 0);
    // beyond every oracle cap: not computable
    CHECK(run_cli("verify \"du(Fm(4),Fm(4))\"").exitCode == 3);
    // parse errors also map to 3
    CHECK(run_cli("verify \"K(\"").exitCode == 3);
}

TEST_CASE("scan over a parameter range") {
    // single quotes: $M must reach the program unexpanded by the shell
    auto r = run_cli("scan --template 'Fm($M)' --from 2 --to 3 --format json");
    CHECK(r.exitCode == 0);
    auto parsed = nlohmann::json::parse(r.out);
    REQUIRE(parsed.is_array());
    CHECK(parsed.size() == 2);
    CHECK(parsed[0]["M"] == 2);
    CHECK(parsed[0]["verdicts"]["extremalBetti"] == "match");
}
