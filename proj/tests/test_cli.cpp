// End-to-end checks of the CLI contract: exit codes, format headers, and
// byte-identical reruns.  The binary path comes from the build system.

#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#ifndef FLAGCURV_CLI_PATH
#define FLAGCURV_CLI_PATH "flagcurv"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(FLAGCURV_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (fgets(buf.data(), static_cast<int>(buf.size()), pipe)) out += buf.data();
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("exit code contract") {
    CHECK(run("spaces").exit_code == 0);
    CHECK(run("report su3-full --metric 1,1,1 --acs +,+,-").exit_code == 0);
    // arity mismatch and unknown space are usage errors
    CHECK(run("report su3-full --metric 1,1 --acs +,+,-").exit_code == 2);
    CHECK(run("report su3-full --metric 1,1,1 --acs +,+").exit_code == 2);
    CHECK(run("report nope --metric 1 --acs +").exit_code == 2);
    CHECK(run("report su3-full --metric 1,0,1 --acs +,+,+").exit_code == 2);
    CHECK(run("sweep su3-full --acs +,+,- --family x,x,x --var x --range 2,1 --steps 5")
              .exit_code == 2);
    CHECK(run("solve su3-full --acs +,+,- --family x,y,z --var w").exit_code == 2);
    CHECK(run("reproduce --target bogus").exit_code == 2);
    CHECK(run("reproduce --target cp3").exit_code == 0);
}

TEST_CASE("deterministic output") {
    std::string a = run("report g2-u2 --metric 1,2 --acs +,- --format json").out;
    std::string b = run("report g2-u2 --metric 1,2 --acs +,- --format json").out;
    CHECK(a == b);
    CHECK(!a.empty());
    std::string c = run("solve su4-full --acs -,+,+,-,+,+ --family x^2,x^2,1,x^2,1,1 --var x").out;
    std::string d = run("solve su4-full --acs -,+,+,-,+,+ --family x^2,x^2,1,x^2,1,1 --var x").out;
    CHECK(c == d);
    CHECK(c.find("1.49534878122") != std::string::npos);
}

TEST_CASE("sweep CSV header and shape") {
    RunResult r =
        run("sweep su4-full --acs -,+,+,-,+,+ --family x^2,x^2,1,x^2,1,1 --var x --range 1,2 "
            "--steps 11");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("var,s,s1,s2_at_0,sJ,defect,gh_class\n", 0) == 0);
    int lines = 0;
    for (char ch : r.out)
        if (ch == '\n') ++lines;
    CHECK(lines == 12);  // header + 11 rows

    // defect changes sign exactly once across the grid (root at 5^(1/4))
    int sign_changes = 0;
    int prev = 0;
    std::size_t pos = r.out.find('\n') + 1;
    while (pos < r.out.size()) {
        std::size_t eol = r.out.find('\n', pos);
        std::string line = r.out.substr(pos, eol - pos);
        // defect is the 6th field
        std::size_t start = 0;
        for (int f = 0; f < 5; ++f) start = line.find(',', start) + 1;
        int s = line[start] == '-' ? -1 : 1;
        if (prev != 0 && s != prev) ++sign_changes;
        prev = s;
        pos = eol + 1;
    }
    CHECK(sign_changes == 1);
}

TEST_CASE("kaehler line report") {
    RunResult r = run("report cp3 --metric 1,2 --acs +,+");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("defect 2*s1-s = 0") != std::string::npos);
    CHECK(r.out.find("Kaehler") != std::string::npos);
}

TEST_CASE("integrable structure away from the kaehler line") {
    RunResult r = run("report su3-full --metric 1,1,3 --acs +,+,+");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("defect 2*s1-s = 1/18") != std::string::npos);
    CHECK(r.out.find("gh-class: W3") != std::string::npos);
}

TEST_CASE("sweep of a solution-free structure keeps a positive defect") {
    RunResult r =
        run("sweep su4-full --acs +,+,+,+,+,+ --family x^2,x^2,1,x^2,1,1 --var x "
            "--range 1/10,10 --steps 9");
    CHECK(r.exit_code == 0);
    std::size_t pos = r.out.find('\n') + 1;
    while (pos < r.out.size()) {
        std::size_t eol = r.out.find('\n', pos);
        std::string line = r.out.substr(pos, eol - pos);
        std::size_t start = 0;
        for (int f = 0; f < 5; ++f) start = line.find(',', start) + 1;
        CHECK(line[start] != '-');
        CHECK(line.substr(line.rfind(',') + 1) == "W3");
        pos = eol + 1;
    }
}

TEST_CASE("json schemas carry the documented keys") {
    RunResult r = run("report su3-full --metric 1,1,1 --acs +,+,- --t 1 --format json");
    CHECK(r.exit_code == 0);
    for (const char* key : {"\"space\"", "\"metric\"", "\"acs\"", "\"norms\"", "\"curvatures\"",
                            "\"gh_class\"", "\"defect\"", "\"num\"", "\"den\"", "\"decimal\"",
                            "\"at_t\""})
        CHECK(r.out.find(key) != std::string::npos);

    RunResult s = run("spaces --format json");
    CHECK(s.exit_code == 0);
    CHECK(s.out.find("\"zero_sum_triples\": 10") != std::string::npos);  // g2-full
    CHECK(s.out.find("\"su4-full\"") != std::string::npos);

    RunResult q =
        run("solve su4-full --acs +,+,-,+,+,+ --family x^2,x^2,1,x^2,1,1 --var x --format json");
    CHECK(q.exit_code == 0);
    for (const char* key : {"\"solutions\"", "\"kind\"", "\"roots\"", "\"interval\"",
                            "\"exact_surd_of_square\"", "\"multiplicity\""})
        CHECK(q.out.find(key) != std::string::npos);
}

TEST_CASE("reproduce emits one line per check and honors --format json") {
    RunResult r = run("reproduce --target su3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
    CHECK(r.out.find("overall: pass") != std::string::npos);
    RunResult j = run("reproduce --target g2-u2 --format json");
    CHECK(j.exit_code == 0);
    CHECK(j.out.find("\"overall\": \"pass\"") != std::string::npos);
}
