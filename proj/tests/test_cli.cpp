#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "brauer/algebra.hpp"
#include "brauer/algebra_io.hpp"

using namespace brauer;

namespace {

struct RunResult {
    std::string out;
    int code;
};

std::string cli_path() {
    const char* p = std::getenv("BRAUER_CLI");
    REQUIRE(p != nullptr);
    return p;
}

RunResult run(const std::string& args) {
    std::string cmd = cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[256];
    while (size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    int status = pclose(pipe);
    return {out, WEXITSTATUS(status)};
}

StructureConstantAlgebra<Rat> quaternions() {
    std::vector<Rat> table(64, Rat(0));
    auto set = [&](int i, int j, int k, long v) { table[(i * 4 + j) * 4 + k] = Rat(v); };
    for (int i = 0; i < 4; ++i) {
        set(0, i, i, 1);
        if (i != 0) set(i, 0, i, 1);
    }
    set(1, 1, 0, -1);
    set(2, 2, 0, -1);
    set(3, 3, 0, -1);
    set(1, 2, 3, 1);
    set(2, 1, 3, -1);
    set(2, 3, 1, 1);
    set(3, 2, 1, -1);
    set(3, 1, 2, 1);
    set(1, 3, 2, -1);
    return StructureConstantAlgebra<Rat>::make(4, std::move(table), {Rat(1), Rat(0), Rat(0), Rat(0)});
}

}  // namespace

TEST_CASE("golden outputs and exit codes") {
    auto real = run("inv real -1 -1");
    CHECK(real.out == "inv_real(-1,-1) = 1/2\n");
    CHECK(real.code == 0);

    auto padic = run("inv padic --p 5 --f 3 --r 5");
    CHECK(padic.out == "1/3\n");
    CHECK(padic.code == 0);

    auto hensel = run("hensel --p 7 --prec 3 --poly \"-2,0,1\" --root 3");
    CHECK(hensel.out == "3 + 1·7 + 2·7² + O(7³)\n");
    CHECK(hensel.code == 0);
}

TEST_CASE("usage errors exit 2, domain errors exit 1") {
    CHECK(run("inv real -1").code == 2);          // missing argument
    CHECK(run("frobnicate").code == 2);           // unknown subcommand
    CHECK(run("inv quat 3 5 --prec 2").code == 2);  // p = 2 precision floor
    CHECK(run("hensel --p 7 --prec 3 --poly \"-2,0,1\" --root 1").code == 1);  // not a root
    CHECK(run("inv padic --p 6 --f 2 --r 5").code == 1);  // 6 is not prime
}

TEST_CASE("quaternion subcommand") {
    auto at2 = run("inv quat -1 -1 --place 2");
    CHECK(at2.out == "inv_2(-1,-1) = 1/2\n");
    CHECK(at2.code == 0);

    auto all = run("inv quat -1 -1");
    CHECK(all.out == "inv_real(-1,-1) = 1/2\ninv_2(-1,-1) = 1/2\nsum ≡ 0 (mod 1): yes\n");
    CHECK(all.code == 0);

    auto js = run("inv quat -1 -1 --json");
    CHECK(js.out ==
          "{\"invariants\":[{\"place\":\"real\",\"num\":1,\"den\":2},"
          "{\"place\":2,\"num\":1,\"den\":2}],\"sum_zero\":true}\n");
    CHECK(js.code == 0);
}

TEST_CASE("algebra check reports and normalized emission round-trips") {
    std::string dir = "cli_scratch";
    std::system(("mkdir -p " + dir).c_str());
    std::string in_path = dir + "/h.json";
    std::string emit1 = dir + "/h.norm.json";
    std::string emit2 = dir + "/h.norm2.json";
    {
        std::ofstream out(in_path);
        out << algebra_to_json(AnyAlgebra(quaternions()));
    }

    auto check1 = run("algebra check " + in_path + " --emit " + emit1);
    CHECK(check1.code == 0);
    CHECK(check1.out == "field: Q\ndim: 4\ncenter dimension: 1\ncentral simple: yes\n");

    auto check2 = run("algebra check " + emit1 + " --emit " + emit2);
    CHECK(check2.code == 0);

    auto slurp = [](const std::string& path) {
        std::ifstream in(path);
        return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    };
    std::string a = slurp(emit1), b = slurp(emit2);
    CHECK(!a.empty());
    CHECK(a == b);

    CHECK(run("algebra check " + dir + "/missing.json").code == 1);
}

TEST_CASE("verify subcommand") {
    auto rep = run("verify --suite cocycle");
    CHECK(rep.code == 0);
    CHECK(rep.out.find("suite cocycle:") == 0);
    CHECK(rep.out.find(" 0 failed") != std::string::npos);
    CHECK(run("verify --suite nonsense").code == 1);
}
