#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "qcf/cli.hpp"
#include "qcf/json_io.hpp"

using namespace qcf;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("help and usage errors") {
    CHECK(run({"--help"}).code == 0);
    CHECK_FALSE(run({"--help"}).out.empty());
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"compute", "--family", "touchard"}).code == 2);   // missing --n
    CHECK(run({"verify", "--suite", "nonsense"}).code == 2);     // unknown suite
    CHECK(run({"compute", "--family", "nope", "--n", "1"}).code == 2);
    CHECK(run({"enumerate", "--objects", "dyck", "--k", "-1"}).code == 2);
    CHECK(run({"bijection", "--name", "unknown", "--k", "2"}).code == 2);
    CHECK(run({"funeq", "--which", "unknown"}).code == 2);
    CHECK(run({"matrix", "--family", "unknown"}).code == 2);
    // Usage errors explain themselves on the error stream.
    CHECK_FALSE(run({"verify", "--suite", "nonsense"}).err.empty());
}

TEST_CASE("frozen compute output") {
    CliRun r = run({"compute", "--family", "touchard", "--form", "s", "--n", "2"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "{\"family\":\"touchard\",\"form\":\"s\",\"n\":2,\"a\":\"0\",\"b\":\"0\","
          "\"coefficient\":{\"g\":1,\"terms\":[{\"q\":0,\"y\":0,\"c\":\"2\"},"
          "{\"q\":1,\"y\":0,\"c\":\"1\"}]}}\n");
}

TEST_CASE("frozen enumerate output") {
    CliRun r = run({"enumerate", "--objects", "md_star", "--k", "1", "--weight", "g1g2"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "{\"objects\":\"md_star\",\"k\":1,\"count\":3,\"items\":[\"UD\",\"Ud\",\"uD\"],"
          "\"weight\":\"g1g2\",\"weight_sum\":{\"g\":1,\"terms\":"
          "[{\"q\":1,\"y\":0,\"c\":\"-2\"},{\"q\":2,\"y\":0,\"c\":\"1\"}]}}\n");
}

TEST_CASE("output is byte-identical across runs") {
    const std::vector<std::vector<std::string>> calls = {
        {"compute", "--family", "jtp", "--form", "t", "--n", "3"},
        {"compute", "--family", "mu", "--form", "s", "--n", "2", "--a", "1/2", "--b", "3/2"},
        {"enumerate", "--objects", "delta_plus", "--k", "2", "--weight", "q"},
        {"funeq", "--which", "theta", "--order", "4"},
        {"matrix", "--family", "omega", "--n", "1"},
    };
    for (const auto& call : calls) {
        CliRun first = run(call);
        CliRun second = run(call);
        CHECK(first.code == 0);
        CHECK(first.out == second.out);
        CHECK_FALSE(first.out.empty());
    }
}

TEST_CASE("verify subcommand") {
    CliRun r = run({"verify", "--suite", "tourio"});
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["suite"] == "tourio");
    CHECK(j["pass"] == true);
    CHECK(!j["cases"].empty());
    for (const auto& c : j["cases"]) CHECK(c["pass"] == true);
}

TEST_CASE("enumerate agrees with frozen counts") {
    CliRun r = run({"enumerate", "--objects", "schroder", "--k", "3"});
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["count"] == 22);
    // The weighted positive-family sum at k = 2 is the alternating square sum.
    CliRun w = run({"enumerate", "--objects", "delta_plus", "--k", "2", "--weight", "q"});
    Json jw = Json::parse(w.out);
    CHECK(jw["count"] == 21);
    Json expect = Json::parse(
        R"({"g":1,"terms":[{"q":0,"y":0,"c":"1"},{"q":1,"y":0,"c":"-2"},{"q":4,"y":0,"c":"2"}]})");
    CHECK(jw["weight_sum"] == expect);
    // Enumeration limits surface as input errors.
    CHECK(run({"enumerate", "--objects", "delta_plus", "--k", "3", "--limit", "5"}).code == 2);
}

TEST_CASE("bijection subcommand") {
    CliRun r = run({"bijection", "--name", "psi", "--k", "3"});
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["pass"] == true);
    CHECK(j["count"] == 183);
    CliRun f = run({"bijection", "--name", "f", "--k", "2"});
    Json jf = Json::parse(f.out);
    CHECK(f.code == 0);
    CHECK(jf["count"] == 16);
    // Traces list the staged intermediate configurations.
    CliRun t = run({"bijection", "--name", "psi", "--k", "1", "--trace"});
    Json jt = Json::parse(t.out);
    CHECK(jt["traces"].size() == 3);
    for (const auto& trace : jt["traces"]) CHECK(trace.size() == 5);
}

TEST_CASE("funeq and matrix subcommands") {
    CliRun r = run({"funeq", "--which", "genocchi-closed", "--order", "6"});
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["pass"] == true);
    CliRun m = run({"matrix", "--family", "lambda", "--n", "2"});
    CHECK(m.code == 0);
    Json jm = Json::parse(m.out);
    CHECK(jm["recurrence"] == true);
    CHECK(jm["base"] == true);
}
