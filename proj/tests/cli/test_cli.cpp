// End-to-end tests of the msrcert binary: exit codes, report contents and
// determinism of the machine-readable outputs. The binary path arrives in
// MSRCERT_BIN (set by ctest).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

namespace {

namespace fs = std::filesystem;

std::string bin() {
    const char* path = std::getenv("MSRCERT_BIN");
    REQUIRE_MESSAGE(path != nullptr, "MSRCERT_BIN must point at the msrcert binary");
    return path;
}

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = bin() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buffer[4096];
    while (std::size_t got = fread(buffer, 1, sizeof buffer, pipe)) out.append(buffer, got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

class TempDir {
public:
    TempDir() {
        dir_ = fs::temp_directory_path() / ("msrcert_cli_" + std::to_string(::getpid()));
        fs::create_directories(dir_);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(dir_, ec);
    }
    fs::path file(const std::string& name, const std::string& content) const {
        fs::path p = dir_ / name;
        std::ofstream(p) << content;
        return p;
    }
    fs::path path(const std::string& name) const { return dir_ / name; }

private:
    fs::path dir_;
};

std::string slurp(const fs::path& p) {
    std::ostringstream out;
    out << std::ifstream(p).rdbuf();
    return out.str();
}

const char* kC6 = "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n";
const char* kK4 = "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";

} // namespace

TEST_CASE("certify C_6: exit 0, msr 4, inequality holds") {
    TempDir tmp;
    auto input = tmp.file("c6.txt", kC6);
    RunResult r = run("certify " + input.string() + " --seed 3");
    CHECK(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["verdict"] == "certified");
    CHECK(j["msr_g"]["value"] == 4);
    CHECK(j["class"] == "unicyclic");
    CHECK((j["dim"] == 4 || j["dim"] == 5));
    CHECK(j["inequality"]["holds"] == true);
    CHECK(j["seed"] == 3);
}

TEST_CASE("certify K_4: exit 3") {
    TempDir tmp;
    CHECK(run("certify " + tmp.file("k4.txt", kK4).string()).exit_code == 3);
}

TEST_CASE("certify a disconnected graph: exit 3") {
    TempDir tmp;
    CHECK(run("certify " + tmp.file("dis.txt", "4 2\n0 1\n2 3\n").string()).exit_code == 3);
}

TEST_CASE("empty and malformed input: exit 1") {
    TempDir tmp;
    CHECK(run("certify " + tmp.file("empty.txt", "").string()).exit_code == 1);
    CHECK(run("certify " + tmp.file("bad.txt", "2 9\n0 1\n").string()).exit_code == 1);
    CHECK(run("certify /does/not/exist").exit_code == 1);
}

TEST_CASE("certify reads stdin and accepts JSON graphs") {
    TempDir tmp;
    auto input = tmp.file("p3.json", R"({"n":3,"edges":[[0,1],[1,2]]})");
    RunResult r = run("certify - < " + input.string());
    CHECK(r.exit_code == 0);
    CHECK(nlohmann::json::parse(r.out)["class"] == "tree");
}

TEST_CASE("recognize: cactus vs not") {
    TempDir tmp;
    RunResult r = run("recognize " + tmp.file("c6.txt", kC6).string());
    CHECK(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["is_cactus"] == true);
    CHECK(j["cycle_count"] == 1);

    r = run("recognize " + tmp.file("k4.txt", kK4).string() + " --oracle");
    CHECK(r.exit_code == 3);
    j = nlohmann::json::parse(r.out);
    CHECK(j["is_cactus"] == false);
    CHECK(j["oracle_agrees"] == true);
}

TEST_CASE("generate then recognize round trip") {
    TempDir tmp;
    auto out = tmp.path("gen.txt");
    CHECK(run("generate --n 14 --cycles 3 --seed 5 --out " + out.string()).exit_code == 0);
    RunResult r = run("recognize " + out.string());
    CHECK(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["is_cactus"] == true);
    CHECK(j["cycle_count"] == 3);
    CHECK(j["n"] == 14);

    CHECK(run("generate --n 4 --cycles 2 --seed 5").exit_code == 1); // infeasible
    CHECK(run("generate --n 5 --cycles 1 --seed 5 --format json --out " +
              tmp.path("gen.json").string()).exit_code == 0);
    CHECK(nlohmann::json::parse(slurp(tmp.path("gen.json")))["n"] == 5);
}

TEST_CASE("order produces a valid ordering and re-validates it") {
    TempDir tmp;
    auto input = tmp.file("c6.txt", kC6);
    auto ord_path = tmp.path("ord.json");
    CHECK(run("order " + input.string() + " --out " + ord_path.string()).exit_code == 0);
    nlohmann::json ord = nlohmann::json::parse(slurp(ord_path));
    CHECK(ord.size() == 6);

    CHECK(run("order " + input.string() + " --check " + ord_path.string()).exit_code == 0);

    auto bad = tmp.file("bad_ord.json", "[0,2,4,1,3,5]"); // first three independent in C_6
    CHECK(run("order " + input.string() + " --check " + bad.string()).exit_code == 2);
}

TEST_CASE("build-rep then verify round trip, tampering detected") {
    TempDir tmp;
    auto input = tmp.file("c6.txt", kC6);
    auto rep = tmp.path("rep.json");
    CHECK(run("build-rep " + input.string() + " --dim 5 --seed 9 --out " + rep.string())
              .exit_code == 0);
    RunResult r = run("verify " + input.string() + " --rep " + rep.string());
    CHECK(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["pattern_ok"] == true);
    CHECK(j["rank"].get<int>() <= 5);

    // duplicating a vector breaks pairwise independence and the pattern
    nlohmann::json tampered = nlohmann::json::parse(slurp(rep));
    tampered["vectors"][0] = tampered["vectors"][1];
    auto bad = tmp.file("tampered.json", tampered.dump());
    CHECK(run("verify " + input.string() + " --rep " + bad.string()).exit_code == 2);
}

TEST_CASE("certify --out writes the report and a representation artifact") {
    TempDir tmp;
    auto input = tmp.file("c6.txt", kC6);
    auto report_path = tmp.path("report.json");
    CHECK(run("certify " + input.string() + " --seed 4 --out " + report_path.string())
              .exit_code == 0);
    nlohmann::json report = nlohmann::json::parse(slurp(report_path));
    CHECK(report["verdict"] == "certified");
    REQUIRE(report["representation_ref"].is_string());
    fs::path rep_path = report_path.parent_path() / report["representation_ref"].get<std::string>();
    CHECK(fs::exists(rep_path));
    CHECK(run("verify " + input.string() + " --rep " + rep_path.string()).exit_code == 0);
}

TEST_CASE("batch is deterministic byte for byte") {
    TempDir tmp;
    auto a = tmp.path("a.json");
    auto b = tmp.path("b.json");
    CHECK(run("batch --count 10 --n-min 6 --n-max 14 --seed 77 --out " + a.string()).exit_code == 0);
    CHECK(run("batch --count 10 --n-min 6 --n-max 14 --seed 77 --out " + b.string()).exit_code == 0);
    std::string sa = slurp(a), sb = slurp(b);
    CHECK(sa == sb);
    nlohmann::json j = nlohmann::json::parse(sa);
    CHECK(j["certified_count"] == 10);
    CHECK(j["instances"].size() == 10);

    auto c = tmp.path("c.json");
    CHECK(run("batch --count 10 --n-min 6 --n-max 14 --seed 78 --out " + c.string()).exit_code == 0);
    CHECK(slurp(c) != sa);
}

TEST_CASE("batch with oracle mode cross-checks small instances") {
    TempDir tmp;
    auto out = tmp.path("o.json");
    CHECK(run("batch --count 6 --n-min 6 --n-max 10 --seed 13 --oracle --out " + out.string())
              .exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(slurp(out));
    for (const auto& inst : j["instances"]) CHECK(inst["oracle_checked"] == true);
}

TEST_CASE("--version and argument validation") {
    CHECK(run("--version").exit_code == 0);
    CHECK(run("frobnicate").exit_code == 1);
    TempDir tmp;
    auto input = tmp.file("c6.txt", kC6);
    CHECK(run("certify " + input.string() + " --dim 99").exit_code == 1);
    CHECK(run("generate --n 5 --cycles 0").exit_code == 1); // --seed required
}
