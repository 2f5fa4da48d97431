#include "helpers.hpp"

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

std::string quote(const std::string& s) {
    std::string q = "'";
    for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
    return q + "'";
}

Run ssu_run(const std::vector<std::string>& args) {
    std::string cmd = quote(SSU_BINARY);
    for (const auto& a : args) cmd += " " + quote(a);
    cmd += " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int st = pclose(p);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const std::string kData = std::string(SSU_SOURCE_DIR) + "/data";

}  // namespace

TEST_CASE("example emits the bundled documents byte for byte", "[cli]") {
    CHECK(ssu_run({"example", "ex5.1"}).out == slurp(kData + "/instances/ex5_1.json"));
    CHECK(ssu_run({"example", "ex5.2"}).out == slurp(kData + "/instances/ex5_2.json"));
    CHECK(ssu_run({"example", "ex5.3-trivial"}).out == slurp(kData + "/instances/ex5_3_trivial.json"));
    Run p = ssu_run({"example", "ex5.3(3,-3)"});
    CHECK(p.code == 0);
    CHECK(ssu::Json::parse(p.out) == ssu::Json::parse(ssu::bundled_example("ex5.3(3,-3)")));
    CHECK(ssu_run({"example", "bogus"}).code == 1);
}

TEST_CASE("exit codes follow the verdicts", "[cli]") {
    CHECK(ssu_run({"validate", "ex5.2"}).code == 0);
    CHECK(ssu_run({"analyze", "ex5.2"}).code == 0);
    CHECK(ssu_run({"analyze", "ex5.3-trivial"}).code == 2);
    CHECK(ssu_run({"analyze", "ex5.3(2,2)"}).code == 3);
    CHECK(ssu_run({"analyze"}).code == 1);
    CHECK(ssu_run({"analyze", "/nonexistent/doc.json"}).code == 1);
    CHECK(ssu_run({"analyze", "ex5.2", "--bounds", "max_path_len=0"}).code == 1);
}

TEST_CASE("the ex5.2 report matches the golden file", "[cli]") {
    Run r = ssu_run({"analyze", "ex5.2", "--json", "--bounds", "max_path_len=1"});
    CHECK(r.code == 0);
    CHECK(r.out == slurp(kData + "/golden/ex5_2_report.json"));
}

TEST_CASE("JSON reports are stable across runs and worker counts", "[cli]") {
    for (const char* name : {"ex5.1", "ex5.3-trivial", "ex5.3(3,-3)"}) {
        INFO(name);
        Run a = ssu_run({"analyze", name, "--json", "--threads", "1"});
        Run b = ssu_run({"analyze", name, "--json", "--threads", "4"});
        Run c = ssu_run({"analyze", name, "--json", "--threads", "4"});
        CHECK(a.out == b.out);
        CHECK(b.out == c.out);
        CHECK_FALSE(ssu::Json::parse(a.out).contains("timing_ms"));
    }
    CHECK(ssu::Json::parse(ssu_run({"analyze", "ex5.2", "--json", "--timing"}).out).contains("timing_ms"));
}

TEST_CASE("evaluators on the command line", "[cli]") {
    Run s = ssu_run({"semigroup", "eval", "ex5.2", "(e; {w}; 1; f) * (f; {v}; 0; w)"});
    CHECK(s.code == 0);
    CHECK(s.out == "(e; {w}; 1; w)\n");
    CHECK(ssu_run({"semigroup", "eval", "ex5.2", "(e; {w}; 1"}).code == 1);
    Run a = ssu_run({"algebra", "eval", "ex5.2", "(w; {v}; 0; w) delta[1] * (w; {w}; 0; w) delta[1]"});
    CHECK(a.out == "(w; {v}; 0; w) delta[0]\n");
    Run t = ssu_run({"theta", "ex5.2", "--elem", "(e; {w}; 1; f)", "--filter", "lasso:f/e"});
    CHECK(t.out == "lasso:e/f\n");
    Run f = ssu_run({"theta", "ex5.2", "--elem", "(e; {v}; 0; w)"});
    CHECK(f.out.find("lasso:/e") != std::string::npos);
}

TEST_CASE("documents can be read from a file", "[cli]") {
    Run r = ssu_run({"validate", kData + "/instances/ex5_1.json", "--json"});
    CHECK(r.code == 0);
    auto j = ssu::Json::parse(r.out);
    CHECK(j["instance"] == "ex5.1");
}
