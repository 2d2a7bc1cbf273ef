#include <doctest.h>

#include "neuralpol/polarization.hpp"
#include "neuralpol/simplicial.hpp"
#include "oracles.hpp"

using namespace neuralpol;

namespace {
const AmbientRing S3 = AmbientRing::polar(3);

std::vector<std::string> shown(const std::vector<VariableSubset>& primes) {
    std::vector<std::string> out;
    for (const auto& w : primes) out.push_back(w.to_string());
    return out;
}

const std::vector<std::string> abcd = {"a", "b", "c", "d"};
}  // namespace

TEST_CASE("variable subsets") {
    const VariableSubset w(S3, Monomial::squarefree(S3, index_set({1, 3}), index_set({2, 3})).support());
    CHECK(w.to_string() == "<x1, x3, y2, y3>");
    CHECK(w.x_only() == index_set({1}));
    CHECK(w.y_only() == index_set({2}));
    CHECK(w.both() == index_set({3}));
    CHECK(w.neither() == 0);
    CHECK(subset_interval_string(w) == "01-");
    CHECK(VariableSubset(S3, 0).to_string() == "<0>");
}

TEST_CASE("minimal primes by transversals") {
    const auto a18 = polarize_ideal(parse_code("000\n100\n111\n"));
    CHECK(shown(minimal_primes(a18.ring, a18.generators)) ==
          std::vector<std::string>{"<x2, x3>", "<x2, y1, y2>", "<x3, y1, y3>", "<y1, y2, y3>"});
    CHECK(minimal_primes(S3, std::vector<Monomial>{}).size() == 1);
    CHECK(minimal_primes(S3, std::vector<Monomial>{Monomial(S3)}).empty());
}

TEST_CASE("redundant primes") {
    const std::vector<VariableSubset> primes = {VariableSubset(S3, 0b000110), VariableSubset(S3, 0b000010)};
    const auto r = redundant_primes(primes);
    REQUIRE(r.size() == 1);
    CHECK(r[0] == std::pair<std::size_t, std::size_t>{0, 1});
}

TEST_CASE("interval method over the polar ideal") {
    const Code b5 = parse_code("000\n100\n110\n011\n");
    CHECK(shown(primes_over_polar(b5, true)) ==
          std::vector<std::string>{"<x2, x3>", "<x3, y1>", "<x3, y3>", "<x1, x2, y2>", "<x1, y1, y2>",
                                   "<x1, y2, y3>"});
    const auto all = primes_over_polar(b5, false);
    CHECK(all.size() > 6);
    for (const auto& w : all) CHECK(interval_of_subset(w, b5));
    const VariableSubset w(S3, Monomial::squarefree(S3, 0, index_set({1, 2, 3})).support());
    CHECK_FALSE(interval_of_subset(w, b5));
}

TEST_CASE("simplicial complexes") {
    const SimplicialComplex k(abcd, {0b0011, 0b0001, 0b0110});
    CHECK(k.facets() == std::vector<VariableMask>{0b0011, 0b0110});
    CHECK(k.dimension() == 1);
    CHECK(k.is_face(0b0010));
    CHECK_FALSE(k.is_face(0b0101));
    CHECK(k.faces().size() == 6);
    CHECK(k.link(0b0010).facets() == std::vector<VariableMask>{0b0001, 0b0100});
    CHECK(k.to_string() == "{a, b}\n{b, c}\n");
    CHECK(SimplicialComplex(abcd, {}).dimension() == -2);
    CHECK(SimplicialComplex(abcd, {0}).dimension() == -1);
    CHECK(k.cone("e").dimension() == 2);
}

TEST_CASE("Stanley-Reisner and polar complexes") {
    const Code a18 = parse_code("000\n100\n111\n");
    const SimplicialComplex polar = polar_complex(a18);
    std::vector<std::string> facets;
    for (auto f : polar.facets()) {
        std::string s;
        for (const auto& v : polar.facet_names(f)) s += v;
        facets.push_back(s);
    }
    CHECK(facets == std::vector<std::string>{"x1x2x3", "x1y2y3", "y1y2y3"});
    CHECK(codeword_facet(0b001, 3) == Monomial::squarefree(S3, index_set({1}), index_set({2, 3})).support());

    const auto ideal = polarize_ideal(a18);
    const SimplicialComplex sr = stanley_reisner_complex(ideal.ring, ideal.generators);
    std::vector<oracle::Mask> supports;
    for (const auto& m : ideal.generators) supports.push_back(m.support());
    const auto expected = oracle::independence_facets(6, supports);
    CHECK(std::set<VariableMask>(sr.facets().begin(), sr.facets().end()) == expected);
}

TEST_CASE("reduced homology") {
    const SimplicialComplex hollow(abcd, {0b0011, 0b0101, 0b0110});
    CHECK(reduced_homology_all(hollow) == std::vector<std::size_t>{0, 0, 1});
    CHECK(reduced_homology(hollow, 1) == 1);
    CHECK(reduced_euler_characteristic(hollow) == -1 + 3 - 3);
    const SimplicialComplex two_points(abcd, {0b0001, 0b0010});
    CHECK(reduced_homology(two_points, 0) == 1);
    CHECK(reduced_homology_all(SimplicialComplex(abcd, {0})) == std::vector<std::size_t>{1});
    // The projective plane has H1 = Z/2, visible over F2.
    const std::vector<std::string> six = {"1", "2", "3", "4", "5", "6"};
    const std::vector<VariableMask> rp2 = {0b000111, 0b001011, 0b010101, 0b011001, 0b100110,
                                           0b101010, 0b110001, 0b011100, 0b101100, 0b110010};
    const SimplicialComplex p(six, rp2);
    CHECK(reduced_homology(p, 1) == 1);
    CHECK(reduced_homology(p, 2) == 1);
    CHECK(oracle::reduced_homology(rp2) == reduced_homology_all(p));
}

TEST_CASE("Cohen-Macaulay checks") {
    const SimplicialComplex sphere(abcd, {0b0111, 0b1011, 0b1101, 0b1110});
    CHECK(is_cohen_macaulay(sphere));
    CHECK(is_cohen_macaulay(sphere.cone("e")));
    const SimplicialComplex two_edges(abcd, {0b0011, 0b1100});
    CHECK_FALSE(is_cohen_macaulay(two_edges));
    CHECK_FALSE(is_cohen_macaulay(two_edges.cone("e")));
    const SimplicialComplex mixed(abcd, {0b0011, 0b0100});
    CHECK_FALSE(is_cohen_macaulay(mixed));
}

TEST_CASE("Krull dimensions and CM verdicts") {
    const Code e4 = parse_code("000\n110\n011\n101\n");
    CHECK(krull_dimensions(e4, Side::neural) == std::set<int>{0});
    CHECK(krull_dimensions(e4, Side::polar) == std::set<int>{3, 4});
    CHECK_FALSE(is_cm_polar(e4));
    CHECK(cm_report_neural(e4) == CmVerdict::cm);

    const Code three_region = parse_code("000\n100\n010\n110\n101\n111\n");
    CHECK(krull_dimensions(three_region, Side::neural) == std::set<int>{2});
    CHECK(krull_dimensions(three_region, Side::polar) == std::set<int>{5});
    CHECK(is_cm_polar(three_region));

    const Code a18 = parse_code("000\n100\n111\n");
    CHECK(cm_report_neural(a18) == CmVerdict::inconclusive);
    CHECK(std::string(to_string(CmVerdict::inconclusive)) == "inconclusive");
}

TEST_CASE("depolarization misses every minimal prime") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        CHECK(depolarization_avoids_minimal_primes(oracle::random_code(rng, 3 + trial % 2)));
    }
}
