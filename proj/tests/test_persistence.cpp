#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "morseforge/persistence.hpp"
#include "morseforge/synthetic.hpp"
#include "oracle.hpp"

using namespace morseforge;

namespace {

// Rearranges a pair list into the oracle's value-multiset form.
oracle::PairSummary summarize(const std::vector<PersistencePair>& pairs) {
    oracle::PairSummary summary;
    for (const auto& pair : pairs) {
        const int k = pair.birth.morse_index;
        summary.births[k].push_back(pair.birth.value);
        if (pair.essential) {
            ++summary.essential[k];
        } else {
            summary.deaths[k].push_back(pair.death->value);
        }
    }
    for (int k = 0; k < 3; ++k) {
        std::sort(summary.births[k].begin(), summary.births[k].end());
        std::sort(summary.deaths[k].begin(), summary.deaths[k].end());
    }
    return summary;
}

void check_against_oracle(const CellComplex& complex, const ScalarField& field) {
    const auto pairs = persistence_pairs(complex, field);
    const auto expected = oracle::pair_summary(complex, field);
    const auto got = summarize(pairs);
    for (int k = 0; k < 3; ++k) {
        CHECK(got.births[k] == expected.births[k]);
        CHECK(got.deaths[k] == expected.deaths[k]);
        CHECK(got.essential[k] == expected.essential[k]);
    }

    const auto gradient = build_gradient(complex, field);
    const auto census = gradient.census(complex);
    std::int32_t finite = 0, essential = 0;
    for (const auto& pair : pairs) {
        if (pair.essential) {
            ++essential;
        } else {
            ++finite;
            CHECK(pair.death->morse_index == pair.birth.morse_index + 1);
            CHECK(pair.persistence >= 0.0);
            CHECK(pair.persistence == pair.death->value - pair.birth.value);
        }
    }
    CHECK(2 * finite + essential == census[0] + census[1] + census[2]);
}

}  // namespace

TEST_CASE("monotone path has one essential class") {
    const auto c = CellComplex::from_edges(4, {{{0, 1}}, {{1, 2}}, {{2, 3}}});
    const ScalarField f({0.0, 1.0, 2.0, 3.0});
    const auto pairs = persistence_pairs(c, f);
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0].essential);
    CHECK(pairs[0].birth.cell == vertex_cell(0));
    CHECK(std::isinf(pairs[0].persistence));
    check_against_oracle(c, f);
}

TEST_CASE("circle pairing") {
    const auto c = CellComplex::from_edges(4, {{{0, 1}}, {{1, 2}}, {{2, 3}}, {{3, 0}}});
    const ScalarField f({0.0, 3.0, 1.0, 4.0});
    const auto pairs = persistence_pairs(c, f);
    REQUIRE(pairs.size() == 3);

    CHECK(pairs[0].essential);
    CHECK(pairs[0].birth.cell == vertex_cell(0));

    CHECK_FALSE(pairs[1].essential);
    CHECK(pairs[1].birth.cell == vertex_cell(2));
    CHECK(pairs[1].birth.value == 1.0);
    CHECK(pairs[1].death->cell == edge_cell(c.find_edge(1, 2)));
    CHECK(pairs[1].death->value == 3.0);
    CHECK(pairs[1].persistence == 2.0);

    CHECK(pairs[2].essential);
    CHECK(pairs[2].birth.cell == edge_cell(c.find_edge(2, 3)));
    CHECK(pairs[2].birth.morse_index == 1);

    SUBCASE("schedule") {
        CHECK(schedule(pairs, 2.0) ==
              std::vector<std::pair<CellId, CellId>>{
                  {edge_cell(c.find_edge(1, 2)), vertex_cell(2)}});
        CHECK(schedule(pairs, 1.9).empty());
        CHECK(schedule({}, 10.0).empty());
    }
    check_against_oracle(c, f);
}

TEST_CASE("sphere essentials") {
    const auto mesh = synthetic::octahedron();
    const ScalarField height({0.0, 1.0, 2.0, 3.0, 4.0, 5.0});
    const auto pairs = persistence_pairs(mesh.complex, height);
    REQUIRE(pairs.size() == 2);
    CHECK(pairs[0].essential);
    CHECK(pairs[0].birth.morse_index == 0);
    CHECK(pairs[1].essential);
    CHECK(pairs[1].birth.morse_index == 2);
    check_against_oracle(mesh.complex, height);

    const ScalarField spurious({1.0, 0.1, 2.0, 0.2, 3.0, 4.0});
    const auto noisy = persistence_pairs(mesh.complex, spurious);
    REQUIRE(noisy.size() == 3);
    CHECK(noisy[0].essential);
    CHECK(noisy[0].birth.cell == vertex_cell(1));
    CHECK_FALSE(noisy[1].essential);
    CHECK(noisy[1].birth.cell == vertex_cell(3));
    CHECK(noisy[1].death->cell == edge_cell(mesh.complex.find_edge(0, 3)));
    CHECK(noisy[1].persistence == doctest::Approx(0.8));
    CHECK(noisy[2].essential);
    CHECK(noisy[2].birth.morse_index == 2);
    check_against_oracle(mesh.complex, spurious);
}

TEST_CASE("torus essentials") {
    const auto mesh = synthetic::torus9();
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const ScalarField f(synthetic::random_field(9, seed));
        const auto pairs = persistence_pairs(mesh.complex, f);
        std::array<std::int32_t, 3> essential{};
        for (const auto& pair : pairs) {
            if (pair.essential) ++essential[pair.birth.morse_index];
        }
        CHECK(essential == std::array<std::int32_t, 3>{1, 2, 1});
        check_against_oracle(mesh.complex, f);
    }
}

TEST_CASE("pair summaries match the oracle across meshes and seeds") {
    const auto octa = synthetic::octahedron();
    const auto patch = synthetic::grid(4, 4);
    const auto band = synthetic::cylinder(6, 3);
    for (std::uint64_t seed = 11; seed <= 18; ++seed) {
        check_against_oracle(octa.complex,
                             ScalarField(synthetic::random_field(octa.complex.vertex_count(), seed)));
        check_against_oracle(patch.complex,
                             ScalarField(synthetic::random_field(patch.complex.vertex_count(), seed)));
        check_against_oracle(band.complex,
                             ScalarField(synthetic::random_field(band.complex.vertex_count(), seed)));
    }
}

TEST_CASE("pairing is deterministic") {
    const auto mesh = synthetic::grid(5, 5);
    const ScalarField f(synthetic::random_field(25, 99));
    const auto a = persistence_pairs(mesh.complex, f);
    const auto b = persistence_pairs(mesh.complex, f);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].birth.cell == b[i].birth.cell);
        CHECK(a[i].essential == b[i].essential);
        if (!a[i].essential) CHECK(a[i].death->cell == b[i].death->cell);
    }
}
