#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "cli.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <sstream>

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = asymih::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args) {
    args.insert(args.begin(), {"--format", "json"});
    const auto r = run(args);
    return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("proper prints a verdict") {
    const auto r = run({"proper", "F=(x, x*y)"});
    CHECK(r.code == asymih::cli::ok);
    CHECK(r.out == "non_proper\n");
    CHECK(run({"proper", "F=(x, y)"}).out == "proper\n");
}

TEST_CASE("ih on a named complex") {
    const auto r = run({"ih", "pinched_torus", "--perversity", "0"});
    CHECK(r.code == 0);
    CHECK(r.out.find("(1,0,1)") != std::string::npos);
    const auto j = run_json({"ih", "pinched_torus", "--perversity", "0"});
    CHECK(j["result"]["perversities"][0]["ranks"] == nlohmann::json::array({1, 0, 1}));
}

TEST_CASE("verify-theorem over the catalog") {
    const auto r = run({"verify-theorem", "--all"});
    CHECK(r.code == 0);
    CHECK(r.out.find("all entries as expected") != std::string::npos);
    const auto j = run_json({"verify-theorem", "blowup"});
    CHECK(j["result"]["entries"][0]["consistent"] == true);
    CHECK(run({"verify-theorem"}).code == asymih::cli::input_error);
    CHECK(run({"verify-theorem", "missing-entry"}).code == asymih::cli::input_error);
}

TEST_CASE("input errors exit with status 2") {
    CHECK(run({"proper", "F=(x+y^2, y+x*?)"}).code == asymih::cli::input_error);
    CHECK(run({"ih", "no-such-complex"}).code == asymih::cli::input_error);
    CHECK(run({"ih", "pinched_torus", "--perversity", "q"}).code == asymih::cli::input_error);
    CHECK(run({"jelonek", "F=(x + y, x + y)"}).code == asymih::cli::input_error);
    CHECK(run({"duality", "torus", "--p", "0", "--q", "0,1"}).code == asymih::cli::input_error);
    CHECK(run({"bogus"}).code == asymih::cli::input_error);
    CHECK(run({}).code == asymih::cli::input_error);
    CHECK(run({"--format", "xml", "proper", "(x, y)"}).code == asymih::cli::input_error);
    CHECK_FALSE(run({"proper", "F=(x,"}).err.empty());
}

TEST_CASE("global options may follow the subcommand") {
    const auto j = run_json({"proper", "(x, x*y)", "--seed", "9", "--samples", "2"});
    CHECK(j["config"]["seed"] == 9);
    CHECK(j["config"]["samples"] == 2);
    CHECK(j["result"]["verdict"] == "non_proper");
}

TEST_CASE("json documents are self-describing") {
    const auto j = run_json({"jelonek", "(x, x*y)"});
    CHECK(j["tool"] == "asymih");
    CHECK(j["command"] == "jelonek");
    CHECK(j["result"]["verdict"] == "non_proper");
    CHECK(j["result"]["jelonek_set"]["components"][0]["equation"] == "y1");
    CHECK(j["result"]["jelonek_set"]["components"][0]["status"] == "certified");
}

TEST_CASE("other subcommands") {
    CHECK(run({"initial-forms", "(x^2 + y, x*y)"}).out.find("F1^ = x^2") != std::string::npos);
    CHECK(run({"directions", "(x, x*y)"}).out == "[0 : 1]\n");
    const auto lim = run_json({"arc-limit", "(x, x*y)", "(1) t^1, (1) t^-1"});
    CHECK(lim["result"]["limit"]["values"] == nlohmann::json::array({"0", "1"}));
    CHECK(lim["result"]["cone_check"] == "holds");
    const auto h = run_json({"homology", "torus", "--generators"});
    CHECK(h["result"]["betti"] == nlohmann::json::array({1, 2, 1}));
    CHECK(h["result"]["generators"].size() == 4);
    const auto d = run({"duality", "suspension_torus", "--p", "0", "--q", "t"});
    CHECK(d.code == 0);
    CHECK(d.out.find("duality holds") != std::string::npos);
    CHECK(run({"duality", "ball4", "--p", "0", "--q", "t"}).out.find("not applicable") != std::string::npos);
    CHECK(run({"catalog", "list"}).out.find("blowup") != std::string::npos);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("output is deterministic") {
    const std::vector<std::string> args{"--format", "json", "--seed", "3", "verify-theorem", "--all"};
    CHECK(run(args).out == run(args).out);
}
