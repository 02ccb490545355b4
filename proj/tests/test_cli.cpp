// End-to-end checks of the installed command surface. The binary path is
// injected at compile time; stdout and the exit code are captured via popen.
#include "vhh/sectors.hpp"

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(VHH_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
    const int status = pclose(p);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

size_t count_lines(const std::string& s) {
    size_t n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("surface dump emits the full grid with its header") {
    const auto r = run_cli("dump-surface --n 4");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("k1,k2,kplus,kminus,e,t1,t2,t3", 0) == 0);
    CHECK(count_lines(r.out) == 17);  // header plus 4x4 rows
}

TEST_CASE("sector table size matches the closed-form count") {
    const auto r = run_cli("sectors --j 4");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("s_a,s_b,class,l,r", 0) == 0);
    CHECK(count_lines(r.out) ==
          1 + static_cast<size_t>(vhh::sector_count_formula(4)));
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("no-such-command").exit_code == 2);
    CHECK(run_cli("sectors").exit_code == 2);                    // missing --j
    CHECK(run_cli("check bounds --suite no-such").exit_code == 2);
    CHECK(run_cli("expand arches --tree missing.json").exit_code == 2);
    CHECK(run_cli("--set gamma=2 sectors --j 3").exit_code == 2);  // invalid config
}

TEST_CASE("tadpole sweep prints one row per scale") {
    const auto r = run_cli("tadpole sweep --gamma 10 --T 1e-2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("j,value,j_rate,ratio", 0) == 0);
    CHECK(count_lines(r.out) == 4);  // header plus scales 0..2
}

TEST_CASE("jungle expansion emits one json object per line") {
    const auto r = run_cli("expand jungles --n 3 --layers 2");
    CHECK(r.exit_code == 0);
    CHECK(count_lines(r.out) == 19);
    CHECK(r.out.rfind("{", 0) == 0);
}

TEST_CASE("arch expansion reads a tree description") {
    const std::string path = "vhh_test_tree.tmp.json";
    {
        std::ofstream f(path);
        f << R"({"n":2,"edges":[[0,1]],"y":0,"z":1,"extra_fields":[2,2]})";
    }
    const auto r = run_cli("expand arches --tree " + path);
    CHECK(r.exit_code == 0);
    CHECK(count_lines(r.out) > 0);
    CHECK(r.out.find("\"is_1pi\"") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("environment variables feed the configuration layer") {
    setenv("VHH_GAMMA", "2", 1);
    CHECK(run_cli("sectors --j 3").exit_code == 2);  // invalid gamma rejected
    unsetenv("VHH_GAMMA");
    CHECK(run_cli("sectors --j 3").exit_code == 0);
}

TEST_CASE("suite runs write a mergeable json artifact") {
    const auto r = run_cli("--set out_dir=. check bounds --suite cutoffs");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("tag,name,measured,bound,ratio,asserted,pass,note", 0) == 0);
    const auto m = run_cli("report merge cutoffs.json cutoffs.json");
    CHECK(m.exit_code == 0);
    std::remove("cutoffs.json");
}

} // TEST_SUITE
