#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "semirel/srs.hpp"

using namespace semirel;

TEST_CASE("parses the example system") {
    auto srs = parse_srs("a a -> a b a\n");
    CHECK(srs.alphabet == std::vector<std::string>{"a", "b"});
    REQUIRE(srs.rules.size() == 1);
    CHECK(srs.rules[0].lhs == std::vector<Symbol>{0, 0});
    CHECK(srs.rules[0].rhs == std::vector<Symbol>{0, 1, 0});
}

TEST_CASE("empty right-hand side is allowed") {
    auto srs = parse_srs("a b ->\n");
    REQUIRE(srs.rules.size() == 1);
    CHECK(srs.rules[0].lhs.size() == 2);
    CHECK(srs.rules[0].rhs.empty());
}

TEST_CASE("comments and blank lines are skipped") {
    auto srs = parse_srs("# a system\n\na a -> a b a  # trailing\n   \n");
    CHECK(srs.rules.size() == 1);
    CHECK(srs.alphabet.size() == 2);
}

TEST_CASE("multi-character tokens") {
    auto srs = parse_srs("foo bar -> bar foo\n");
    CHECK(srs.alphabet == std::vector<std::string>{"bar", "foo"});
    CHECK(srs.rules[0].lhs == std::vector<Symbol>{1, 0});
}

TEST_CASE("parse errors name the line") {
    CHECK_THROWS_AS(parse_srs("-> a\n"), parse_error);
    CHECK_THROWS_AS(parse_srs("a b c\n"), parse_error);
    CHECK_THROWS_AS(parse_srs("a -> b -> c\n"), parse_error);
    CHECK_THROWS_AS(parse_srs(""), parse_error);
    CHECK_THROWS_AS(parse_srs("# only comments\n"), parse_error);
    try {
        parse_srs("a -> b\n-> c\n");
    } catch (const parse_error& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("rule rendering") {
    auto srs = parse_srs("a a -> a b a\n");
    CHECK(show_rule(srs.rules[0], srs.alphabet) == "a a -> a b a");
}
