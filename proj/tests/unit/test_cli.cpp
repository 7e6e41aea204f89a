#include <doctest.h>

#include <sstream>

#include "ttskit/workbench/cli.hpp"

using ttskit::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string doc(const std::string& name) { return std::string(TTSKIT_DOCUMENTS_DIR) + "/" + name; }

}  // namespace

TEST_CASE("check exit codes") {
    CHECK(call({"check", doc("sierpinski.json")}).code == 0);
    CHECK(call({"check", doc("closed-union-not-closed.json")}).code == 0);
    CHECK(call({"check", doc("union-cover-failure.json")}).code == 0);
    CHECK(call({"derive", doc("union-cover-failure.json")}).code == 1);
    CHECK(call({"check", doc("missing.json")}).code == 2);
    CHECK(call({"check"}).code == 2);
    CHECK(call({"frobnicate"}).code == 2);
}

TEST_CASE("json report format") {
    const Result r = call({"--format", "json", "check", doc("sierpinski.json")});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"holds\"") != std::string::npos);
}

TEST_CASE("derive and embed") {
    CHECK(call({"derive", doc("sierpinski.json")}).code == 0);
    CHECK(call({"embed", doc("chain-convergence.json")}).code == 0);
    CHECK(call({"embed", doc("partition-uniformity.json")}).code == 0);
    CHECK(call({"embed", doc("incomplete.json")}).code == 0);
    CHECK(call({"embed", doc("incomplete.json"), "--token-cap", "1"}).code == 3);
}

TEST_CASE("enumerate, audit, search, list") {
    const Result e = call({"enumerate", "topology", "--n", "3", "--count-only"});
    CHECK(e.code == 0);
    CHECK(e.out.find("29") != std::string::npos);
    CHECK(call({"enumerate", "topology", "--n", "5"}).code == 3);
    CHECK(call({"audit", "SIGMA_LAMBDA_IS_TTS", "--n", "2"}).code == 0);
    CHECK(call({"audit", "DERIVE_ROUNDTRIP", "--n", "2"}).code == 1);
    CHECK(call({"audit", "NOPE"}).code == 2);
    CHECK(call({"search", "not-topological", "--samples", "2000"}).code == 1);
    CHECK(call({"search", "symmetry-fails", "--samples", "500"}).code == 0);
    CHECK(call({"list"}).code == 0);
}

TEST_CASE("ms-check") {
    CHECK(call({"ms-check", doc("class-sierpinski.json")}).code == 0);
    CHECK(call({"ms-check", doc("class-value-at-index.json")}).code == 1);
    CHECK(call({"ms-check", doc("class-sierpinski.json"), "--bound", "9"}).code == 3);
}
