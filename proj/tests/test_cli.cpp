#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <nlohmann/json.hpp>

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code;
    std::string out;
};

fs::path tmp_dir() {
    fs::path dir(RHB_TEST_TMPDIR);
    fs::create_directories(dir);
    return dir;
}

std::string read_file(const fs::path& path) {
    std::ifstream is(path, std::ios::binary);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

RunResult run_cli(const std::string& args) {
    fs::path out_path = tmp_dir() / "stdout.txt";
    std::string cmd = std::string(RHB_CLI_BINARY) + " " + args + " > " + out_path.string() + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, read_file(out_path)};
}

}  // namespace

TEST_CASE("verify subcommand exit codes") {
    CHECK(run_cli("verify --k 0 --m 3").exit_code == 0);
    CHECK(run_cli("verify --k -1 --m 5").exit_code == 0);
    CHECK(run_cli("verify --k 0 --m 2").exit_code == 2);  // even m is a usage error
    CHECK(run_cli("verify --k 0").exit_code == 2);        // missing required flag
    CHECK(run_cli("bogus").exit_code == 2);
}

TEST_CASE("verify emits the verdict and certificate") {
    RunResult r = run_cli("verify --k 0 --m 3");
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["status"] == "ok");
    CHECK(j["verdict"]["p"] == "17");
    CHECK(j["verdict"]["q"] == "4");
    CHECK(j["verdict"]["symplectic"] == "obstructed");
    CHECK(j["trace"]["moves"].size() == 6);

    RunResult conic = run_cli("verify --k -1 --m 5");
    auto jc = nlohmann::json::parse(conic.out);
    CHECK(jc["verdict"]["symplectic"] == "yes");
    CHECK(jc["string"] == "2,2,2");
    CHECK_FALSE(jc.contains("trace"));
}

TEST_CASE("table sweep: deterministic output, csv shape, --jobs") {
    RunResult a = run_cli("table --k-range 0:2 --m-range 1:3 --format csv");
    RunResult b = run_cli("table --k-range 0:2 --m-range 1:3 --format csv --jobs 4");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);  // byte-identical regardless of parallelism
    int lines = 0;
    for (char c : a.out) lines += (c == '\n');
    CHECK(lines == 7);  // header + 6 rows
    CHECK(a.out.find("1,1,13,5,") != std::string::npos);

    RunResult j = run_cli("table --k-range 0:1 --m-range 1:1");
    auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["rows"].size() == 2);
    CHECK(doc["status"] == "ok");

    // empty grid: header-only csv, exit 0
    RunResult empty = run_cli("table --k-range 3:2 --m-range 1:1 --format csv");
    CHECK(empty.exit_code == 0);
    CHECK(empty.out == "k,m,p,q,lens_p,lens_q,smooth,symplectic,markov,divides_q2_plus_9,trace_moves,status\n");

    CHECK(run_cli("table --k-range 0:1 --m-range 2:4").exit_code == 2);
    CHECK(run_cli("table --k-range x:1 --m-range 1:3").exit_code == 2);
}

TEST_CASE("trace and verify-trace round-trip; tampering is caught") {
    fs::path cert = tmp_dir() / "cert.json";
    CHECK(run_cli("trace --k 1 --m 3 --out " + cert.string()).exit_code == 0);

    RunResult ok = run_cli("verify-trace " + cert.string());
    CHECK(ok.exit_code == 0);
    auto j = nlohmann::json::parse(ok.out);
    CHECK(j["replay_matches"] == true);
    CHECK(j["start_matches_tau"] == true);
    CHECK(j["end_is_normal_form"] == true);

    // trace(0,1) has 1 + 0 + 3 = 4 slide moves
    fs::path cert01 = tmp_dir() / "cert01.json";
    run_cli("trace --k 0 --m 1 --out " + cert01.string());
    auto doc = nlohmann::json::parse(read_file(cert01));
    CHECK(doc["moves"].size() == 4);
    for (const auto& move : doc["moves"]) {
        std::string kind = move["kind"].get<std::string>();
        CHECK(kind.starts_with("slide_"));
    }

    // corrupt the recorded end state
    auto tampered = nlohmann::json::parse(read_file(cert));
    tampered["end"][0][0] = "7";
    fs::path bad = tmp_dir() / "tampered.json";
    std::ofstream(bad) << tampered.dump(2);
    CHECK(run_cli("verify-trace " + bad.string()).exit_code == 1);

    std::ofstream(tmp_dir() / "garbage.json") << "{not json";
    CHECK(run_cli("verify-trace " + (tmp_dir() / "garbage.json").string()).exit_code == 2);
    CHECK(run_cli("verify-trace " + (tmp_dir() / "missing.json").string()).exit_code == 2);
}

TEST_CASE("identities and markov subcommands") {
    RunResult ids = run_cli("identities --l-max 50");
    CHECK(ids.exit_code == 0);
    auto j = nlohmann::json::parse(ids.out);
    CHECK(j["identities"].size() == 7);
    for (const auto& row : j["identities"]) CHECK(row["pass"] == true);

    RunResult mk = run_cli("markov --depth 3");
    CHECK(mk.exit_code == 0);
    auto mj = nlohmann::json::parse(mk.out);
    auto has = [&](const char* a, const char* b, const char* c) {
        return std::find(mj["triples"].begin(), mj["triples"].end(),
                         nlohmann::json::array({a, b, c})) != mj["triples"].end();
    };
    CHECK(has("1", "2", "5"));
    CHECK(has("1", "5", "13"));
    CHECK(has("2", "5", "29"));

    RunResult mk0 = run_cli("markov --depth 0");
    auto mj0 = nlohmann::json::parse(mk0.out);
    CHECK(mj0["triples"] == nlohmann::json::array({nlohmann::json::array({"1", "1", "1"})}));
}

TEST_CASE("hj subcommand evaluates string literals") {
    RunResult r = run_cli("hj \"2,(2^0,3)^1,2,2,(3)^1\"");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["string"] == "2,3,2,2,3");
    CHECK(j["fraction"]["num"] == "25");
    CHECK(j["fraction"]["den"] == "16");
    CHECK(j["dual"] == "3,5,2");
    CHECK(j["lens"]["p"] == "25");
    CHECK(j["lens"]["q"] == "9");
    CHECK(j["blows_down_to_zero"] == false);

    RunResult blow = run_cli("hj 2,1,2");
    auto bj = nlohmann::json::parse(blow.out);
    CHECK(bj["blows_down_to_zero"] == true);
    CHECK(bj["blow_down_moves"] == nlohmann::json::array({2, 1}));

    CHECK(run_cli("hj \"2,(\"").exit_code == 2);
}

TEST_CASE("repeated invocations are byte-identical") {
    RunResult a = run_cli("verify --k 2 --m 5");
    RunResult b = run_cli("verify --k 2 --m 5");
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
}
