#include <array>
#include <cstdio>
#include <cstdlib>
#include <regex>
#include <string>

#include "doctest.h"

#ifndef CYCLO_CLI_PATH
#error "CYCLO_CLI_PATH must point at the cyclo binary"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " " + std::string(CYCLO_CLI_PATH) + " " +
                            args + " 2>/dev/null";
    RunResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.output.append(buffer.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string strip_elapsed(const std::string& report) {
    static const std::regex elapsed(R"("elapsed_ms": \d+,?\n)");
    return std::regex_replace(report, elapsed, "");
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("poly prints the cyclotomic polynomial") {
    RunResult r = run("poly --k 12");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "\"pretty\": \"X^4 - X^2 + 1\""));
    CHECK(contains(r.output, "\"pass\": true"));
}

TEST_CASE("check-cns mirrors the boundary remark") {
    RunResult good = run("check-cns --k 11 --m 10");
    CHECK(good.exit_code == 0);
    CHECK(contains(good.output, "\"monotone_ok\": true"));
    CHECK(contains(good.output, "\"pass\": true"));

    RunResult bad = run("check-cns --k 22 --m 10");
    CHECK(bad.exit_code == 1);
    CHECK(contains(bad.output, "\"pass\": false"));
    CHECK(contains(bad.output, "p_1 > p_0"));
}

TEST_CASE("independence reports the torsion certificate") {
    RunResult r = run("independence --k 3 --m 18 --n 2");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "\"outcome\": \"independent\""));
    CHECK(contains(r.output, "\"certificate\": \"torsion-check\""));
}

TEST_CASE("dependent verdicts exit with 1 and carry the witness") {
    RunResult r = run("independence --k 6 --m 5 --n 1");
    CHECK(r.exit_code == 1);
    CHECK(contains(r.output, "\"outcome\": \"dependent\""));
    CHECK(contains(r.output, "\"verified\": true"));
}

TEST_CASE("encode/decode roundtrip through the CLI") {
    RunResult enc = run("encode --k 4 --m 1 --element \"-1,0\"");
    CHECK(enc.exit_code == 0);
    CHECK(contains(enc.output, "\"status\": \"terminated\""));

    RunResult dec = run("decode --k 4 --m 1 --digits \"1,0,1,1,1\"");
    CHECK(dec.exit_code == 0);
    CHECK(contains(dec.output, "\"-1\""));
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run("check-cns --k 11").exit_code == 2);
    CHECK(run("frobnicate").exit_code == 2);
    CHECK(run("poly --k 12 --format csv").exit_code == 2);
    CHECK(run("decode --k 4 --m 1 --digits \"7\"").exit_code == 2);
    CHECK(run("independence --k 6 --m 5 --n 5").exit_code == 2);
    CHECK(run("poly --k 99999999999").exit_code == 2);
    CHECK(run("encode --k 4 --m 1 --element \"1,banana\"").exit_code == 2);
}

TEST_CASE("check-cns with the box witness") {
    RunResult r = run("check-cns --k 4 --m 1 --exhaustive --box 2");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "\"all_terminated\": true"));
    CHECK(contains(r.output, "\"tested\": 25"));
}

TEST_CASE("reports are byte-identical across runs apart from timing") {
    const std::string cmd = "sweep-independence --k 5 --max 12";
    RunResult a = run(cmd);
    RunResult b = run(cmd);
    CHECK(a.exit_code == 0);
    CHECK(strip_elapsed(a.output) == strip_elapsed(b.output));
    CHECK(contains(a.output, "numerical evidence only"));
}

TEST_CASE("sweep output is independent of the job count") {
    RunResult serial = run("sweep-theorem1 --phi-max 8 --m-max 12 --jobs 1");
    RunResult parallel = run("sweep-theorem1 --phi-max 8 --m-max 12 --jobs 4");
    CHECK(serial.exit_code == 0);
    CHECK(strip_elapsed(serial.output) == strip_elapsed(parallel.output));

    RunResult csv1 = run("sweep-independence --k 6 --max 10 --format csv --jobs 1");
    RunResult csv4 = run("sweep-independence --k 6 --max 10 --format csv --jobs 4");
    CHECK(csv1.output == csv4.output);
    CHECK(contains(csv1.output, "m,n,outcome,p,q,j,verified"));
    CHECK(contains(csv1.output, "2,1,dependent,0,3,0,true"));
}

TEST_CASE("the step fuse honors CYCLO_MAX_STEPS") {
    RunResult r = run("encode --k 4 --m 1 --element \"-1,0\"",
                      "CYCLO_MAX_STEPS=2");
    CHECK(r.exit_code == 1);
    CHECK(contains(r.output, "\"status\": \"budget-exceeded\""));

    // an explicit flag overrides the environment
    RunResult f = run("encode --k 4 --m 1 --element \"-1,0\" --max-steps 50",
                      "CYCLO_MAX_STEPS=2");
    CHECK(f.exit_code == 0);
    CHECK(contains(f.output, "\"status\": \"terminated\""));
}

TEST_CASE("text format flattens the report") {
    RunResult r = run("base --k 3 --m 3 --format text");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "results.digit_bound: 13"));
    CHECK(contains(r.output, "results.polynomial.pretty: X^2 + 7*X + 13"));
}

TEST_CASE("searches and certificates through the CLI") {
    RunResult nagell = run("nagell --x-max 3 --k-max 5 --q-max 2");
    CHECK(nagell.exit_code == 0);
    CHECK(contains(nagell.output, "\"count\": 1"));
    CHECK(contains(nagell.output, "\"y\": \"11\""));

    RunResult quartic = run("quartic --x-max 37 --q-max 5");
    CHECK(quartic.exit_code == 0);
    CHECK(contains(quartic.output, "\"x\": 37"));

    RunResult cert = run("certificates --q 17");
    CHECK(cert.exit_code == 0);
    CHECK(contains(cert.output, "\"gcd_p0_p1\": \"1\""));
    CHECK(contains(cert.output, "\"gcd_p3_p4\": \"17*n\""));
    CHECK(contains(cert.output, "-n^17 + 17*n + 1"));
    CHECK(contains(cert.output, "\"matches_displayed_values\": true"));
    CHECK(run("certificates --q 5").exit_code == 2);
}
