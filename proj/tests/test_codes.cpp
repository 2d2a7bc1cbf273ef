#include <doctest.h>

#include <fstream>
#include <sstream>

#include "neuralpol/codes.hpp"

using namespace neuralpol;

TEST_CASE("code files") {
    const Code c = parse_code("# A18\n000\n100\n\n111\n");
    CHECK(c.n() == 3);
    CHECK(c.size() == 3);
    CHECK(c.contains(0b001));  // word 100
    CHECK_FALSE(c.contains(0b010));
    CHECK(c.to_string() == "000\n100\n111\n");
    CHECK(parse_code("111\n000\n000\n").size() == 2);
}

TEST_CASE("words are ordered by their strings") {
    const Code c = parse_code("011\n100\n010\n001\n");
    std::vector<std::string> shown;
    for (Word w : c.words()) shown.push_back(format_word(w, 3));
    CHECK(shown == std::vector<std::string>{"001", "010", "011", "100"});
}

TEST_CASE("malformed code files name the line") {
    auto line_of = [](const std::string& text) {
        try {
            parse_code(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return -1;
    };
    CHECK(line_of("000\n10\n") == 2);
    CHECK(line_of("000\n1x0\n") == 2);
    CHECK_THROWS_AS(parse_code("# nothing\n"), ParseError);
    CHECK_THROWS_AS(parse_code(""), ParseError);
}

TEST_CASE("covers") {
    std::ifstream in(NEURALPOL_TEST_DATA "/three_region_cover.json");
    REQUIRE(in);
    const Cover cover = parse_cover(in);
    CHECK(cover.n() == 3);
    CHECK(cover.points.size() == 6);
    CHECK(code_of_cover(cover) == parse_code("000\n100\n010\n110\n101\n111\n"));
    CHECK_THROWS_AS(parse_cover(R"({"points":["a"],"sets":{"1":["b"]}})"), ParseError);
    CHECK_THROWS_AS(parse_cover("not json"), ParseError);
    CHECK(code_of_cover(parse_cover(R"({"points":[],"sets":{"1":[],"2":[]}})")).empty());
}

TEST_CASE("quotient codes") {
    const Code b5 = parse_code("000\n100\n110\n011\n");
    const QuotientCode by1 = quotient_code(b5, index_set({1}));
    CHECK(by1.code == parse_code("00\n10\n11\n"));
    CHECK(by1.kept == std::vector<int>{2, 3});
    CHECK(quotient_code(b5, index_set({2})).code == parse_code("00\n10\n01\n"));
    CHECK(quotient_code(b5, all_indices(3)).code.n() == 0);
    CHECK(quotient_code(b5, all_indices(3)).code.size() == 1);
}

TEST_CASE("intervals") {
    const IntervalSpec a = IntervalSpec::parse("1*0");
    CHECK(a.to_string() == "1*0");
    CHECK(a.stars() == index_set({2}));
    CHECK(a.fixed_count() == 2);
    CHECK(a.words().size() == 2);
    CHECK(a.contains(0b001));
    CHECK(a.contains(0b011));
    CHECK_FALSE(a.contains(0b101));
    CHECK_THROWS_AS(IntervalSpec::parse("1x0"), Error);
    // 0 < 1 < * position by position
    CHECK(interval_order(IntervalSpec::parse("01*"), IntervalSpec::parse("1**")));
    CHECK(interval_order(IntervalSpec::parse("1**"), IntervalSpec::parse("**0")));
}

TEST_CASE("maximal intervals") {
    const Code b5 = parse_code("000\n100\n110\n011\n");
    std::vector<std::string> shown;
    for (const auto& a : maximal_intervals(b5)) shown.push_back(a.to_string());
    CHECK(shown == std::vector<std::string>{"011", "1*0", "*00"});

    const Code e4 = parse_code("000\n110\n011\n101\n");
    CHECK(maximal_intervals(e4).size() == 4);
    for (const auto& a : maximal_intervals(e4)) CHECK(a.fixed_count() == 3);

    CHECK(maximal_intervals(Code::full(3)).size() == 1);
    CHECK(maximal_intervals(Code(3, {})).empty());
}
