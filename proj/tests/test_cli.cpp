#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

using nlohmann::json;

namespace {

#ifndef PADCELL_CLI_PATH
#error "PADCELL_CLI_PATH must point at the built binary"
#endif

struct RunResult {
    int code = -1;
    std::string out;
};

// Run the tool, capture stdout and the exit code. Diagnostics stay on the
// test's stderr, which keeps failures readable.
RunResult run(const std::string& args) {
    std::string cmd = std::string(PADCELL_CLI_PATH) + " " + args;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

} // namespace

TEST_CASE("coset listing") {
    auto r = run("cosets -p 3 -n 2 -m 1");
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["prime"] == 3);
    CHECK(j["n"] == 2);
    CHECK(j["m"] == 1);
    CHECK(j["count"] == 4);
    CHECK(j["reps"] == json::array({1, 2, 3, 6}));
}

TEST_CASE("term evaluation") {
    auto r = run("eval -p 3 -N 8 --assign t=2 \"star(t,t)\"");
    CHECK(r.code == 0);
    CHECK(r.out == "4\n");

    auto rj = run("eval -p 3 --json --assign t=2 \"star(t,t)\"");
    CHECK(json::parse(rj.out)["value"] == "4");

    auto rf = run("eval -p 3 --assign t=4 \"Pn[2](t)\"");
    CHECK(rf.code == 0);
    CHECK(rf.out == "true\n");
}

TEST_CASE("decomposition output") {
    auto r = run("decompose -p 3 \"Pn[2](t)\"");
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["input"] == "Pn[2](t)");
    CHECK(j["var"] == "t");
    REQUIRE(j["cells"].size() == 1);
    const json& c = j["cells"][0];
    CHECK(c["var"] == "t");
    CHECK(c["center"] == "0");
    CHECK(c["lower"].is_null());
    CHECK(c["upper"].is_null());
    CHECK(c["coset"]["kind"] == "Qnm");
    CHECK(c["coset"]["lambda"] == "1");
    CHECK(c["coset"]["n"] == 2);
    CHECK(c["coset"]["m"] == 1);
    CHECK(j["stats"].contains("depth_cap"));
    CHECK(j["stats"].contains("ball_splits"));
    CHECK(j["stats"].contains("recenterings"));
}

TEST_CASE("parse and reprint") {
    auto r = run("parse \"div(1,t)\"");
    CHECK(r.code == 0);
    CHECK(r.out == "ord(1) < ord(t)\n");

    auto rj = run("parse --json \"star(t, t) + 1\"");
    json j = json::parse(rj.out);
    CHECK(j["kind"] == "term");
    CHECK(j["text"] == "star(t, t) + 1");
}

TEST_CASE("existential decision") {
    auto r = run("qe -p 3 \"exists t. t - 5 = 0\"");
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["value"] == true);

    auto rf = run("qe -p 3 \"exists t. ord(9) < ord(t) and ord(t) < ord(27) and Pn[3](t)\"");
    CHECK(json::parse(rf.out)["value"] == false);
}

TEST_CASE("equivalence reports and exit codes") {
    auto same = run("equiv -p 3 -V 3 -D 3 \"Pn[2](t)\" \"Pn[2](t)\"");
    CHECK(same.code == 0);
    json j = json::parse(same.out);
    CHECK(j["equivalent"] == true);
    CHECK(j["disagreements"].empty());

    auto diff = run("equiv -p 5 -V 3 -D 2 \"Pn[2](t)\" \"Qnm[2,1](1,t)\" 2>/dev/null");
    CHECK(diff.code == 2);
    CHECK(json::parse(diff.out)["equivalent"] == false);

    auto jobs = run("equiv -p 5 -V 3 -D 2 --jobs 4 \"Pn[2](t)\" \"Qnm[2,1](1,t)\" 2>/dev/null");
    CHECK(jobs.code == 2);
    CHECK(json::parse(jobs.out) == json::parse(diff.out)); // parallel merge is deterministic
}

TEST_CASE("linearization output") {
    auto r = run("linearize -p 3 \"star(t, t)\"");
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 2);
    for (const json& nf : j) {
        CHECK(nf.contains("region"));
        CHECK(nf.contains("q"));
        CHECK(nf.contains("c"));
        CHECK(nf.contains("tail_bound"));
    }
}

TEST_CASE("file input") {
    std::string path = "/tmp/padcell_cli_input.txt";
    std::ofstream(path) << "Pn[2](t)\n";
    auto r = run("parse --file " + path);
    CHECK(r.code == 0);
    CHECK(r.out == "Pn[2](t)\n");
}

TEST_CASE("prime from the environment") {
    auto r = run("cosets -n 1 -m 1");
    CHECK(json::parse(r.out)["prime"] == 3);
    RunResult renv;
    {
        std::string cmd = "PADCELL_PRIME=5 " + std::string(PADCELL_CLI_PATH) + " cosets -n 1 -m 1";
        FILE* pipe = popen(cmd.c_str(), "r");
        REQUIRE(pipe != nullptr);
        std::array<char, 4096> buf;
        size_t n;
        while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) renv.out.append(buf.data(), n);
        renv.code = WEXITSTATUS(pclose(pipe));
    }
    CHECK(renv.code == 0);
    CHECK(json::parse(renv.out)["prime"] == 5);
    CHECK(json::parse(renv.out)["count"] == 4);
}

TEST_CASE("failure exit codes") {
    CHECK(run("eval -p 3 \"ord(t <\" 2>/dev/null").code == 1);      // syntax
    CHECK(run("qe -p 3 \"exists t. exists s. s = t\" 2>/dev/null").code == 1);
    CHECK(run("bogus 2>/dev/null").code == 64);                     // usage
    CHECK(run("decompose 2>/dev/null").code == 1);                  // missing input
    CHECK(run("decompose -p 3 --cap 1 \"t - 5 = 0 and Pn[2](t - 2)\" 2>/dev/null").code == 2);
    CHECK(run("--help >/dev/null").code == 0);
}
