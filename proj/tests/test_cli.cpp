#include "support.hpp"

#include "skein/cli.hpp"
#include "skein/expr.hpp"
#include "skein/sweeps.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace skein;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json first_json(const std::string& out) {
    return nlohmann::json::parse(out.substr(0, out.find('\n')));
}

}  // namespace

TEST_CASE("parser examples") {
    CHECK(parse_expression("x(2)") == SkeinVector(Word::x(2)));
    CHECK(parse_expression("t(1) + A^2*l^2") ==
          SkeinVector(Word::lambda(1), -Apow(3)) + SkeinVector(Word::lambda(2), Apow(2)));
    CHECK(parse_expression("x(0)*x(1) - R(1)") ==
          SkeinVector(Word::x(0) * Word::x(1)) - SkeinVector::from_poly(poly_R(1)));
    CHECK(parse_expression("x(1)*x(0)") != parse_expression("x(0)*x(1)"));
    CHECK(parse_expression("l*A*x(0)") == parse_expression("A*l*x(0)"));
    CHECK(parse_expression("A^-2 * 3") == SkeinVector(Laurent::monomial(-2, 3)));
    CHECK(parse_expression("-x(1) + x(1)").is_zero());
    CHECK(parse_expression("P(0,1)") == SkeinVector::from_poly(poly_Pmk(0, 1)));
    CHECK(parse_expression("(l + 1)^2") == parse_expression("l^2 + 2*l + 1"));
    CHECK(parse_expression("psi(1)", Nu1Context::from_beta1(3)) ==
          parse_expression("x(1)*l - x(1)"));
}

TEST_CASE("parser errors") {
    CHECK_THROWS_AS(parse_expression("x(1"), ParseError);
    CHECK_THROWS_AS(parse_expression("l^-1"), ParseError);
    CHECK_THROWS_AS(parse_expression("x(0)^-2"), ParseError);
    CHECK_THROWS_AS(parse_expression("t(1,-1)"), ParseError);
    CHECK_THROWS_AS(parse_expression("psi(0)"), ParseError);
    CHECK_THROWS_AS(parse_expression("foo(1)"), ParseError);
    CHECK_THROWS_AS(parse_expression("1 +"), ParseError);
    CHECK_THROWS_AS(parse_expression(""), ParseError);
    try {
        parse_expression("x(1) + * 2");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 7);
    }
}

TEST_CASE("format examples") {
    CHECK(format_expression(SkeinVector()) == "0");
    CHECK(format_expression(parse_expression("1")) == "1");
    CHECK(format_expression(parse_expression("A^2 + A^-2")) == "(A^2+A^-2)");
    CHECK(format_expression(parse_expression("x(0) - 2*A*l*x(1)")) == "x(0) - 2*A*l*x(1)");
}

TEST_CASE("print/parse round trip") {
    std::mt19937_64 rng(50);
    RandomWordSpec spec;
    for (int i = 0; i < 50; ++i) {
        const SkeinVector v = random_skein_vector(rng, spec);
        const std::string s = format_expression(v);
        CAPTURE(s);
        CHECK(parse_expression(s) == v);
        CHECK(format_expression(parse_expression(s)) == s);
    }
}

TEST_CASE("reduce goldens") {
    Run r = cli({"reduce", "--manifold", "lens-p2", "--beta1", "1", "--format", "json", "x(0)"});
    REQUIRE(r.code == 0);
    nlohmann::json j = first_json(r.out);
    CHECK(j["coords"][0]["basis"] == "l^0");
    CHECK(j["coords"][0]["coeff"] == "-A^2-A^-2");

    r = cli({"reduce", "--manifold", "lens-4k", "--beta1", "1", "--beta2", "1", "--format", "json", "x(0)*l"});
    REQUIRE(r.code == 0);
    j = first_json(r.out);
    CHECK(j["manifold"] == "L(4,3)");
    CHECK(j["basis"] == nlohmann::json::array({"l^0", "l^1", "x*l^0"}));
    CHECK(j["coords"][2]["coeff"] == "-A^4-A^2");

    r = cli({"reduce", "--manifold", "s2xs1", "--beta1", "1", "--format", "json", "l - 1"});
    REQUIRE(r.code == 0);
    j = first_json(r.out);
    REQUIRE(j["torsion"].size() == 1);
    CHECK(j["torsion"][0] == nlohmann::json({{"gen", "phi(1)"}, {"modulus", 8}, {"residue", "1"}}));
}

TEST_CASE("negative betas and text output") {
    Run r = cli({"reduce", "--manifold", "lens-p2", "--beta1", "-3", "x(2)"});
    CHECK(r.code == 0);
    CHECK(r.out.find("l^0: 1-A^-8") != std::string::npos);
    CHECK(r.out.find("l^1: A^-8") != std::string::npos);
}

TEST_CASE("basis command") {
    Run r = cli({"basis", "--manifold", "lens-p2", "--beta1", "5", "--format", "json"});
    REQUIRE(r.code == 0);
    nlohmann::json j = first_json(r.out);
    CHECK(j["rank"] == 3);
    CHECK(j["rank_check"] == 3);
    CHECK(j["basis"] == nlohmann::json::array({"l^0", "l^1", "l^2"}));

    r = cli({"basis", "--manifold", "s2xs1", "--beta1", "1", "--max-index", "2", "--format", "json"});
    REQUIRE(r.code == 0);
    j = first_json(r.out);
    CHECK(j["basis"] == nlohmann::json::array({"phi(0)"}));
    std::vector<std::pair<std::string, int>> t;
    for (const auto& e : j["torsion"]) t.emplace_back(e["gen"], e["modulus"]);
    CHECK(t == std::vector<std::pair<std::string, int>>{{"phi(1)", 8}, {"phi(2)", 12}, {"psi(0)", 6}, {"psi(1)", 10}});
}

TEST_CASE("usage errors") {
    CHECK(cli({}).code == kExitUsage);
    CHECK(cli({"reduce", "--manifold", "lens-p2", "--beta1", "2", "x(0)"}).code == kExitUsage);
    CHECK(cli({"reduce", "--manifold", "lens-p2", "--beta1", "1", "x(0"}).code == kExitUsage);
    CHECK(cli({"reduce", "--manifold", "lens-4k", "--beta1", "1", "x(0)"}).code == kExitUsage);
    CHECK(cli({"reduce", "--manifold", "lens-4k", "--beta1", "1", "--beta2", "-1", "x(0)"}).code == kExitUsage);
    CHECK(cli({"reduce", "--manifold", "s2xs1", "--beta1", "1", "--beta2", "3", "x(0)"}).code == kExitUsage);
    CHECK(cli({"reduce", "--manifold", "torus", "--beta1", "1", "x(0)"}).code == kExitUsage);
    CHECK(cli({"verify", "--suite", "nope"}).code == kExitUsage);
}

TEST_CASE("file input and deterministic bytes") {
    const std::string path = "cli_test_input.txt";
    {
        std::ofstream f(path);
        f << "x(0)\n\nl^2 - x(1)*x(-1)\r\nt(2,1)\n";
    }
    const std::vector<std::string> args{"reduce", "--manifold", "lens-4k", "--beta1", "3", "--beta2", "-7",
                                        "--format", "json", "--file", path};
    const Run a = cli(args), b = cli(args);
    std::remove(path.c_str());
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(std::count(a.out.begin(), a.out.end(), '\n') == 3);
}

TEST_CASE("verify command") {
    Run r = cli({"verify", "--suite", "families", "--range", "5"});
    CHECK(r.code == 0);
    CHECK(r.out.find("passed") != std::string::npos);
    CHECK(cli({"verify", "--suite", "families", "--range", "-1"}).code == kExitUsage);
}
