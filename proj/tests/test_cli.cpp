#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "rainbow/io.hpp"
#include "rainbow/verify.hpp"

using namespace rainbow;
namespace fs = std::filesystem;

namespace {

struct Scratch {
    fs::path dir;
    Scratch() {
        dir = fs::temp_directory_path() / ("rainbow_cli_" + std::to_string(::getpid()));
        fs::create_directories(dir);
    }
    ~Scratch() { fs::remove_all(dir); }
    std::string path(const std::string& name) const { return (dir / name).string(); }
};

int run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " " + RAINBOW_CLI + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string read_all(const std::string& path) {
    std::ifstream in(path);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST_CASE("find exit codes") {
    Scratch tmp;
    const auto cert = tmp.path("c4.json");
    CHECK(run("find C4 --random 800 3 9 -o " + cert) == 0);
    REQUIRE(fs::exists(cert));
    const auto av = load_certificate(cert);
    CHECK(check_anchored(ColoringFamily::uniform(800, 3, 9), av).valid);

    const auto fam = tmp.path("mono.fam");
    CHECK(run("generate monochromatic 8 1 -o " + fam) == 0);
    CHECK(run("find S4 --family " + fam + " -o " + tmp.path("s4.json")) == 0);
    CHECK(run("verify --family " + fam + " --certificate " + tmp.path("s4.json")) == 0);

    CHECK(run("find I4 --random 24 9999 1 -o " + tmp.path("x.json")) == 2);
    CHECK_FALSE(fs::exists(tmp.path("x.json")));
    CHECK(run("find NOPE --mono 8") == 1);
    CHECK(run("find S4 --family " + tmp.path("missing.fam")) == 1);
    CHECK(run("find S4") == 1);
}

TEST_CASE("verify exit codes") {
    Scratch tmp;
    const auto mono = tmp.path("mono.fam");
    const auto inj = tmp.path("inj.fam");
    REQUIRE(run("generate monochromatic 5 3 -o " + mono) == 0);
    REQUIRE(run("generate injective 5 10 -o " + inj) == 0);
    CHECK(run("verify --family " + mono + " --pattern P2") == 3);
    CHECK(run("verify --family " + inj + " --pattern P2") == 0);
    CHECK(run("verify --family " + mono + " --pattern P2 --max-copies 3") == 4);

    // A certificate checked against a different family fails.
    CHECK(run("find S4 --mono 8 -o " + tmp.path("s4.json")) == 0);
    REQUIRE(run("generate injective 8 28 -o " + tmp.path("inj8.fam")) == 0);
    CHECK(run("verify --family " + tmp.path("inj8.fam") + " --certificate " + tmp.path("s4.json")) == 3);
    CHECK(run("verify --family " + mono) == 1);
}

TEST_CASE("exact, export-cnf and generate") {
    Scratch tmp;
    CHECK(run("exact 3 P2 --witness " + tmp.path("w.fam")) == 0);
    CHECK(family_is_good(load_family(tmp.path("w.fam")), path(2)).is_good);
    CHECK(run("exact 4 P2 --max-nodes 2 --k-max 2") == 4);
    CHECK(run("export-cnf 3 P2 2 " + tmp.path("p2.cnf")) == 0);
    CHECK(read_all(tmp.path("p2.cnf")).find("p cnf 27 ") != std::string::npos);
    CHECK(run("generate resampled-good 6 5 --pattern I2 -o " + tmp.path("g.fam")) == 0);
    CHECK(family_is_good(load_family(tmp.path("g.fam")), matching(2)).is_good);
    CHECK(run("generate resampled-good 6 1 --pattern P2 --budget 50") == 2);
    CHECK(run("generate plaid 6 1") == 1);
}

TEST_CASE("sweep output and run log") {
    Scratch tmp;
    const auto csv = tmp.path("sweep.csv");
    const auto log = tmp.path("run.jsonl");
    CHECK(run("sweep --patterns 'S4;K7,7' --hosts 90 --ks 3 --seeds 0-2 --threads 2 -o " + csv,
              "RAINBOW_LOG=" + log) == 0);
    const auto text = read_all(csv);
    std::istringstream lines(text);
    std::string line;
    std::vector<std::string> rows;
    while (std::getline(lines, line)) rows.push_back(line);
    REQUIRE(rows.size() == 7);
    CHECK(rows[0] == "pattern,n,k,seed,outcome,stage,micros");
    CHECK(rows[1].rfind("\"S4\",90,3,0,", 0) == 0);
    CHECK(rows[6].rfind("\"K7,7\",90,3,2,", 0) == 0);

    // Every log line is JSON; six sweep records.
    std::istringstream records(read_all(log));
    int count = 0;
    while (std::getline(records, line)) {
        const auto j = nlohmann::json::parse(line);
        CHECK(j.at("subcommand") == "sweep");
        CHECK(j.contains("timestamp"));
        ++count;
    }
    CHECK(count == 6);

    // A one-cell sweep reproduces the find outcome.
    CHECK(run("sweep --patterns C4 --hosts 800 --ks 3 --seeds 9 -o " + csv) == 0);
    CHECK(read_all(csv).find("\"C4\",800,3,9,success,") != std::string::npos);

    CHECK(run("sweep -o " + csv) == 0);
    CHECK(read_all(csv) == "pattern,n,k,seed,outcome,stage,micros\n");

    // --log overrides the environment.
    const auto other = tmp.path("other.jsonl");
    CHECK(run("--log " + other + " find P4 --mono 10 -o " + tmp.path("p4.json"), "RAINBOW_LOG=" + log) == 0);
    CHECK(read_all(other).find("\"subcommand\":\"find\"") != std::string::npos);
}
