#include <doctest.h>

#include "neuralpol/neural_ideal.hpp"
#include "oracles.hpp"

using namespace neuralpol;

namespace {
const AmbientRing R3 = AmbientRing::plain(3);

std::vector<std::string> shown(const PsmIdeal& ideal) {
    std::vector<std::string> out;
    for (const auto& f : ideal.generators) out.push_back(f.to_string());
    return out;
}
}  // namespace

TEST_CASE("indicator generators") {
    CHECK(indicator_generator(0b100, 3).to_string() == "(1-x1)*(1-x2)*x3");
    const Code three_region = parse_code("000\n100\n010\n110\n101\n111\n");
    CHECK(shown(neural_ideal_generators(three_region)) ==
          std::vector<std::string>{"(1-x1)*(1-x2)*x3", "(1-x1)*x2*x3"});
    CHECK(shown(neural_ideal_generators(Code(3, {}))) == std::vector<std::string>{"1"});
    CHECK(neural_ideal_generators(Code::full(3)).is_zero());
}

TEST_CASE("membership") {
    const Code b5 = parse_code("000\n100\n110\n011\n");
    CHECK(psm_in_ideal(Pseudomonomial(R3, index_set({1, 3}), 0), b5));
    CHECK_FALSE(psm_in_ideal(Pseudomonomial(R3, index_set({1}), 0), b5));
    const Code three_region = parse_code("000\n100\n010\n110\n101\n111\n");
    CHECK(psm_in_ideal(Pseudomonomial(R3, index_set({3}), index_set({1})), three_region));
    CHECK(psm_in_ideal(Pseudomonomial(R3, index_set({3}), index_set({1, 2})), three_region));
}

TEST_CASE("canonical forms of the worked codes") {
    CHECK(shown(canonical_form(parse_code("000\n100\n111\n"))) ==
          std::vector<std::string>{"(1-x1)*x2", "x2*(1-x3)", "(1-x1)*x3", "(1-x2)*x3"});
    CHECK(shown(canonical_form(parse_code("000\n100\n110\n011\n"))) ==
          std::vector<std::string>{"x1*x3", "(1-x2)*x3", "(1-x1)*x2*(1-x3)"});
    CHECK(shown(canonical_form(parse_code("000\n100\n010\n110\n101\n111\n"))) ==
          std::vector<std::string>{"(1-x1)*x3"});
    CHECK(canonical_form(Code::full(2)).is_zero());
    CHECK(shown(canonical_form(Code(2, {}))) == std::vector<std::string>{"1"});
}

TEST_CASE("canonical form matches brute force") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + trial % 3;
        const Code c = oracle::random_code(rng, n);
        std::vector<oracle::Mask> words(c.words().begin(), c.words().end());
        std::set<oracle::Psm> mine;
        const PsmIdeal cf = canonical_form(c);
        for (const auto& f : cf.generators) mine.emplace(f.sigma(), f.tau());
        CHECK(mine == oracle::canonical_form(n, words));
        CHECK(std::is_sorted(cf.generators.begin(), cf.generators.end(), canonical_order));
    }
}

TEST_CASE("primary decomposition") {
    auto primes = [](const std::string& text) {
        std::vector<std::string> out;
        for (const auto& p : primary_decomposition(parse_code(text))) out.push_back(p.to_string());
        return out;
    };
    CHECK(primes("000\n100\n010\n110\n101\n111\n") == std::vector<std::string>{"<1-x1>", "<x3>"});
    CHECK(primes("000\n100\n110\n011\n") ==
          std::vector<std::string>{"<x1, 1-x2, 1-x3>", "<1-x1, x3>", "<x2, x3>"});
    CHECK(primes("111\n") == std::vector<std::string>{"<1-x1, 1-x2, 1-x3>"});
    CHECK(primes("00\n01\n10\n11\n") == std::vector<std::string>{"<0>"});
}

TEST_CASE("ideal in prime") {
    const Code b5 = parse_code("000\n100\n110\n011\n");
    const PsmIdeal cf = canonical_form(b5);
    CHECK(ideal_in_prime(cf, PsmPrime(IntervalSpec::parse("011"))));
    CHECK(ideal_in_prime(cf, PsmPrime(IntervalSpec::parse("*00"))));
    CHECK_FALSE(ideal_in_prime(cf, PsmPrime(IntervalSpec::parse("*0*"))));
    CHECK_THROWS_AS(ideal_in_prime(neural_ideal_generators(b5), PsmPrime(IntervalSpec::parse("011"))), Error);
}

TEST_CASE("receptive-field relations") {
    Cover cover;
    cover.points = {"p000", "p100", "p010", "p110", "p101", "p111"};
    cover.sets = {{"p100", "p110", "p101", "p111"}, {"p010", "p110", "p111"}, {"p101", "p111"}};
    const auto relations = receptive_field_relations(cover);
    REQUIRE(relations.size() == 1);
    CHECK(relations[0].to_string() == "U3 <= U1");
    CHECK(relations[0].verified());

    Cover disjoint;
    disjoint.points = {"a", "b", "c"};
    disjoint.sets = {{"a"}, {"b"}};
    std::vector<std::string> shown_relations;
    for (const auto& r : receptive_field_relations(disjoint)) shown_relations.push_back(r.to_string());
    CHECK(shown_relations == std::vector<std::string>{"U1 & U2 <= {}"});
}
