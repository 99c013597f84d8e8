#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

namespace {

using nlohmann::json;

struct CliResult {
    int code;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    const char* exe = std::getenv("PALCF_CLI");
    REQUIRE_MESSAGE(exe != nullptr, "PALCF_CLI must point at the binary");
    std::string cmd = std::string(exe) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return CliResult{code, out};
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_CASE("construct text output and exit codes") {
    CliResult r = run_cli("construct -p 2,5,5,2 -k -11");
    CHECK(r.code == 0);
    CHECK(r.out.find("s: 107") != std::string::npos);
    CHECK(r.out.find("t: -49") != std::string::npos);
    CHECK(r.out.find("[0; {2, 5, 5, 2, 107}]") != std::string::npos);
    CHECK(r.out.find("match: yes") != std::string::npos);

    r = run_cli("construct -p 1,1,3,1,1 -k 3");
    CHECK(r.code == 0);
    CHECK(r.out.find("collapsed: yes") != std::string::npos);

    r = run_cli("construct -p 1 -k 0");
    CHECK(r.code == 2);
    CHECK(r.out.find("KTooSmall") != std::string::npos);

    r = run_cli("construct -p 1,2 -k 1");
    CHECK(r.code == 2);
}

TEST_CASE("construct json record") {
    CliResult r = run_cli("construct -p 2,5,5,2 -k -11 --format json");
    CHECK(r.code == 0);
    json rec = json::parse(r.out);
    CHECK(rec["command"] == "construct");
    CHECK(rec["verified"] == true);
    CHECK(rec["branch"].is_null());
    CHECK(rec["input"]["k"] == "-11");
    CHECK(rec["result"]["s"] == "107");
    CHECK(rec["result"]["t"] == "-49");
    CHECK(rec["result"]["expansion"]["formatted"] == "[0; {2, 5, 5, 2, 107}]");
    CHECK(rec["result"]["alpha"]["formatted"] == "(-107+sqrt(11645))/2");
}

TEST_CASE("beta command") {
    CliResult r = run_cli("beta -n 2 -m 2 -k 2 --format json");
    CHECK(r.code == 0);
    json rec = json::parse(r.out);
    CHECK(rec["command"] == "beta");
    CHECK(rec["branch"] == "even-n-even-k");
    CHECK(rec["verified"] == true);
    CHECK(rec["result"]["d"] == "164");
    CHECK(rec["result"]["cf"]["formatted"] == "[12; {1, 4, 6, 4, 1, 24}]");

    r = run_cli("beta -n 2 -m 100 -k 2");
    CHECK(r.code == 0);
    CHECK(r.out.find("404091208") != std::string::npos);

    r = run_cli("beta -n 2 -m 2 -k 0");
    CHECK(r.code == 2);
    r = run_cli("beta -n 2 -m 2");
    CHECK(r.code == 2);
}

TEST_CASE("pell command") {
    CliResult r = run_cli("pell -n 2 -m 2 -k 3 --sign -1");
    CHECK(r.code == 0);
    CHECK(r.out.find("x: 352618") != std::string::npos);
    CHECK(r.out.find("y: 19805") != std::string::npos);
    CHECK(r.out.find("branch: cube") != std::string::npos);

    r = run_cli("pell -n 1 -m 2 -k 2 --sign +1");
    CHECK(r.code == 0);
    CHECK(r.out.find("x: 5") != std::string::npos);

    r = run_cli("pell -n 1 -m 2 -k 2 --sign -1");
    CHECK(r.code == 2);
    CHECK(r.out.find("ParityViolated") != std::string::npos);

    r = run_cli("pell -n 2 -m 2 -k 3 --sign 7");
    CHECK(r.code == 2);
}

TEST_CASE("sqrt-family command") {
    CliResult r = run_cli("sqrt-family -p 2 -c 2");
    CHECK(r.code == 0);
    CHECK(r.out.find("D=2") != std::string::npos);
    CHECK(r.out.find("D=6") != std::string::npos);

    r = run_cli("sqrt-family -p 1,1 -c 1");
    CHECK(r.code == 2);
    CHECK(r.out.find("NotAdmissible") != std::string::npos);

    r = run_cli("sqrt-family -p 2,5,5,2 -c 1 --format json");
    CHECK(r.code == 0);
    json rec = json::parse(r.out);
    CHECK(rec["result"]["a0_class"]["value"] == "116");
    CHECK(rec["result"]["rows"][0]["d"] == "13562");
    CHECK(rec["result"]["rows"][0]["verified"] == true);
}

TEST_CASE("families command") {
    CliResult r = run_cli("families sleepers -n 2 -k 2 -m 2..10");
    CHECK(r.code == 0);
    for (const char* d : {"D=164", "D=1480", "D=6452", "D=19112", "D=45028"})
        CHECK(r.out.find(d) != std::string::npos);

    r = run_cli("families creepers -m 2 -j 1..5");
    CHECK(r.code == 0);
    for (const char* l : {"period_length=6", "period_length=10",
                          "period_length=14", "period_length=18",
                          "period_length=22"})
        CHECK(r.out.find(l) != std::string::npos);

    r = run_cli("families sleepers -n 5 -k 2 -m 2..3");
    CHECK(r.code == 2);
    CHECK(r.out.find("KTooSmall") != std::string::npos);

    r = run_cli("families nonsense -m 2 -j 1..2");
    CHECK(r.code == 2);
}

TEST_CASE("verify command") {
    CliResult r = run_cli("verify --suite beta --budget 10 --seed 3");
    CHECK(r.code == 0);
    CHECK(r.out.find("failures: 0") != std::string::npos);

    r = run_cli("verify --suite bogus --budget 5");
    CHECK(r.code == 2);

    r = run_cli("verify --suite all --budget 8 --seed 1 --format json");
    CHECK(r.code == 0);
    json rec = json::parse(r.out);
    CHECK(rec["result"]["total"] == 32);
    CHECK(rec["result"]["passed"] == 32);
}

TEST_CASE("batch mode emits one record per row") {
    std::string path = "cli_test_batch.txt";
    {
        std::ofstream out(path);
        out << "2,5,5,2 -11\n";
        out << "# skipped\n";
        out << "1 0\n";
        out << "1,1,3,1,1 3\n";
    }
    CliResult r = run_cli("construct --batch " + path + " --format json");
    CHECK(r.code == 2);  // one bad row, others still run
    std::vector<std::string> lines = lines_of(r.out);
    REQUIRE(lines.size() == 3);
    json first = json::parse(lines[0]);
    CHECK(first["result"]["s"] == "107");
    json second = json::parse(lines[1]);
    CHECK(second["error"]["code"] == "KTooSmall");
    CHECK(second["result"].is_null());
    json third = json::parse(lines[2]);
    CHECK(third["result"]["collapsed"] == true);
    std::remove(path.c_str());

    CliResult missing = run_cli("construct --batch does_not_exist.txt");
    CHECK(missing.code == 2);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("construct").code == 2);
    CHECK(run_cli("--nonsense").code == 2);
    CHECK(run_cli("").code == 2);  // a subcommand is required
    CHECK(run_cli("--help").code == 0);
}