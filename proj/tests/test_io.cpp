#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "insdel/commands.hpp"
#include "insdel/io.hpp"
#include "insdel/registry.hpp"

using namespace insdel;
using nlohmann::json;

TEST_CASE("code files round-trip through emit and load") {
    for (const char* id : {"ex1-gf49", "ex2-gf121", "ex3-gf169", "ex-11-4-binary"}) {
        LinearCode c = example_code(id);
        json file = emit_code_json(c, id);
        CHECK(file["metadata"]["name"] == id);
        LinearCode back = load_code_json(file);
        CHECK(back.n() == c.n());
        CHECK(back.k() == c.k());
        CHECK(back.canonical() == c.canonical());
        CHECK(back.field()->q() == c.field()->q());
    }
}

TEST_CASE("loading accepts token strings and integers") {
    LinearCode c = load_code_json(std::string(R"({
        "field": {"p": 7, "e": 2},
        "generator": [["w^3", 2, "0", 1], ["1", "w^40", "2", "0"]]
    })"));
    CHECK(c.n() == 4);
    CHECK(c.k() == 2);
    auto f = c.field();
    CHECK(c.generator().at(0, 0) == f->pow(f->generator(), 3));
    CHECK(c.generator().at(0, 1) == f->add(1, 1));

    // explicit modulus overrides the default
    LinearCode c2 = load_code_json(std::string(R"({
        "field": {"p": 2, "e": 3, "modulus": [1, 1, 0, 1]},
        "generator": [["1", "w^1", "w^2"]]
    })"));
    CHECK(c2.field()->q() == 8);
}

TEST_CASE("malformed code files are rejected") {
    CHECK_THROWS_AS((void)load_code_json(std::string("not json")), FieldError);
    CHECK_THROWS_AS((void)load_code_json(std::string("{}")), FieldError);
    CHECK_THROWS_AS((void)load_code_json(std::string(
                        R"({"field": {"p": 4}, "generator": [["1"]]})")),
                    FieldError);
    CHECK_THROWS_AS((void)load_code_json(std::string(
                        R"({"field": {"p": 2}, "generator": [["1","0"],["1"]]})")),
                    FieldError);
    CHECK_THROWS_AS((void)load_code_json(std::string(
                        R"({"field": {"p": 2}, "generator": [["1","1"],["1","1"]]})")),
                    FieldError);  // rank deficient
}

TEST_CASE("input digest is stable and content-sensitive") {
    CHECK(input_digest("abc") == input_digest("abc"));
    CHECK(input_digest("abc") != input_digest("abd"));
    CHECK(input_digest("").size() == 16);
}

TEST_CASE("command reports carry the envelope fields") {
    json file = emit_code_json(example_code("ex-11-4-binary"));
    auto res = cmd_distance(file.dump());
    CHECK(res.status == 0);
    CHECK(res.report["command"] == "distance");
    CHECK(res.report["summary"] == "d_I = 4");
    CHECK(res.report["result"]["distance"] == 4);
    CHECK(res.report["result"]["lcs_length"] == 9);
    CHECK(res.report.contains("input_digest"));
    CHECK(res.report.contains("elapsed_ms"));

    auto cert = cmd_certify(emit_code_json(example_code("ex1-gf49")).dump());
    CHECK(cert.status == 0);
    CHECK(cert.report["result"]["verdict"] == "pass");
    CHECK(cert.report["result"]["qualifying_pair_count"] == 3);
    CHECK(cert.report["result"]["pair_convention"] ==
          CertificateReport::kPairConvention);

    // failure maps to status 1
    auto fail = cmd_certify(std::string(
        R"({"field": {"p": 2}, "generator": [["1","0","1","0","0"],["0","1","0","1","0"]]})"));
    CHECK(fail.status == 1);
    CHECK(fail.report["result"]["verdict"] == "fail");

    // bad input maps to status 2
    CHECK(cmd_bounds("nonsense").status == 2);
    CHECK(cmd_search(5, 2, "bogus", "none").status == 2);
    CHECK(cmd_verify_example("no-such-id").status == 2);
    CHECK(cmd_construct("no-such-family", 2, 1, 2, "").status == 2);

    // exhausted budgets map to status 3
    Budgets tiny;
    tiny.pairs = 5;
    CHECK(cmd_distance(file.dump(), tiny).status == 3);
}

TEST_CASE("construct emits a loadable code file") {
    auto res = cmd_construct("odd", 3, 1, 2, "");
    REQUIRE(res.status == 0);
    LinearCode c = load_code_json(res.report["result"]["code_file"]);
    CHECK(c.n() == 5);
    CHECK(c.k() == 2);
    auto res2 = cmd_construct("odd", 3, 1, 2, "2 0");
    CHECK(res2.status == 0);
    CHECK(load_code_json(res2.report["result"]["code_file"]).canonical() == c.canonical());
    CHECK(cmd_construct("odd", 2, 1, 2, "").status == 2);
}
