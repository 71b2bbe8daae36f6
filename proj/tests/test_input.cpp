#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "polsyz/input.hpp"

using namespace polsyz;

static Poly pe(const std::string& s, const std::vector<std::string>& vars) {
    return parse_expression(s, vars, 1);
}

TEST_CASE("expressions parse to the expected polynomials") {
    std::vector<std::string> v = {"x", "y"};
    Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
    CHECK(pe("x^2 - 2*x*y + y^2", v) == (x - y) * (x - y));
    CHECK(pe("(x + y)^3", v) == (x + y) * (x + y) * (x + y));
    CHECK(pe("-x", v) == -x);
    CHECK(pe("- (x - y)", v) == y - x);
    CHECK(pe("1/2*x + 1/2*x", v) == x);
    CHECK(pe("3", v) == Poly::constant(2, 3));
    CHECK(pe("2/4", v) == Poly::constant(2, mpq_class(1, 2)));
    CHECK(pe("x - x", v) == Poly::zero(2));
    CHECK(pe("x*(y + 1)^2", v) == x * (y + Poly::constant(2, 1)) * (y + Poly::constant(2, 1)));
}

TEST_CASE("malformed expressions are rejected with positions") {
    std::vector<std::string> v = {"x", "y"};
    CHECK_THROWS_AS(pe("x^y", v), ParseError);
    CHECK_THROWS_AS(pe("x^0 + x^-1", v), ParseError);
    CHECK_THROWS_AS(pe("x y", v), ParseError); // no implicit multiplication
    CHECK_THROWS_AS(pe("x + ", v), ParseError);
    CHECK_THROWS_AS(pe("(x + y", v), ParseError);
    CHECK_THROWS_AS(pe("x + z", v), ParseError); // undeclared variable
    CHECK_THROWS_AS(pe("x ** y", v), ParseError);
    CHECK_THROWS_AS(pe("", v), ParseError);
    CHECK_THROWS_AS(pe("1/0", v), ParseError);

    try {
        pe("x + z", v);
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line == 1);
        CHECK(e.col == 5);
    }
}

TEST_CASE("document structure") {
    InputDoc d = parse_input("# comment\nvars: x y\n\nx^2 + y^2  # trailing\nx*y\n");
    CHECK(d.vars == std::vector<std::string>{"x", "y"});
    REQUIRE(d.forms.size() == 2);
    Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
    CHECK(d.forms[0] == x * x + y * y);
    CHECK(d.forms[1] == x * y);

    CHECK_THROWS_AS(parse_input("x^2\n"), ParseError);             // missing header
    CHECK_THROWS_AS(parse_input("vars: x x\nx\n"), ParseError);    // duplicate var
    CHECK_THROWS_AS(parse_input("vars: x 2y\nx\n"), ParseError);   // bad name
    CHECK_THROWS_AS(parse_input("vars: x\nx - x\n"), ParseError);  // zero form
    CHECK_THROWS_AS(parse_input("vars: x\n"), ParseError);         // no forms
}

TEST_CASE("render/parse round-trip") {
    InputDoc d = parse_input("vars: x y z\nx^2*y - z^3\nx*y*z + 1/3*x^3\n");
    InputDoc d2 = parse_input(render_input(d));
    CHECK(d2.vars == d.vars);
    REQUIRE(d2.forms.size() == d.forms.size());
    for (size_t i = 0; i < d.forms.size(); ++i) CHECK(d2.forms[i] == d.forms[i]);
}

TEST_CASE("every corpus file parses and round-trips") {
    namespace fs = std::filesystem;
    int seen = 0;
    for (const auto& ent : fs::directory_iterator(CORPUS_DIR)) {
        if (ent.path().extension() != ".in") continue;
        ++seen;
        std::ifstream in(ent.path());
        std::stringstream ss;
        ss << in.rdbuf();
        INFO("file: " << ent.path().string());
        InputDoc d = parse_input(ss.str());
        CHECK(!d.forms.empty());
        InputDoc d2 = parse_input(render_input(d));
        REQUIRE(d2.forms.size() == d.forms.size());
        for (size_t i = 0; i < d.forms.size(); ++i) CHECK(d2.forms[i] == d.forms[i]);
    }
    CHECK(seen >= 10);
}
