#include <doctest.h>

#include "fixtures.hpp"
#include "hcolor/factory.hpp"
#include "hcolor/proper.hpp"
#include "hcolor/theorems.hpp"

using namespace hcolor;

namespace {

constexpr Vertex a = 0, r = 0, s = 1, t = 2, x = 6;

// Properly colored K9 with 9 colors: edge ij gets (i + j) mod 9, so every vertex sees 8 colors.
HColoredGraph cyclic_k9() {
    std::vector<Color> colors;
    for (int i = 0; i < 9; ++i)
        for (int j = i + 1; j < 9; ++j) colors.push_back((i + j) % 9);
    return HColoredGraph::complete(9, PatternGraph::complete_loopless(9), colors);
}

}  // namespace

TEST_CASE("statement names, ranges and lengths") {
    for (auto st : {Statement::T3cycle, Statement::T4small, Statement::T4large, Statement::Cor4})
        CHECK(parse_statement(to_string(st)) == st);
    CHECK_FALSE(parse_statement("T5").has_value());
    CHECK(conclusion_length(Statement::T3cycle) == 3);
    CHECK(conclusion_length(Statement::Cor4) == 4);
    CHECK(in_range(Statement::T3cycle, 3));
    CHECK_FALSE(in_range(Statement::T4small, 3));
    CHECK(in_range(Statement::T4small, 8));
    CHECK_FALSE(in_range(Statement::T4small, 9));
    CHECK_FALSE(in_range(Statement::T4large, 8));
    CHECK(in_range(Statement::T4large, 9));
    CHECK(in_range(Statement::Cor4, 4));
    CHECK(requires_c3_hypothesis(Statement::T4large));
    CHECK(requires_c3_hypothesis(Statement::Cor4));
    CHECK_FALSE(requires_c3_hypothesis(Statement::T4small));
}

TEST_CASE("degree hypothesis examples") {
    const auto fig2 = check_degree_hypothesis(fixtures::figure2());
    CHECK(fig2.holds);
    CHECK(fig2.k == std::vector<int>(7, 4));

    const auto fig1 = check_degree_hypothesis(fixtures::figure1());
    CHECK_FALSE(fig1.holds);
    CHECK(fig1.k == std::vector<int>(4, 2));

    CHECK(check_degree_hypothesis(fixtures::proper_k4()).holds);

    // Even n: 2k >= n + 1 needs k >= 3 at n = 4; k = 2 fails exactly.
    const HColoredGraph sparse(SimpleGraph(4, {{0, 1}}), PatternGraph(1, {}), {{0, 1, 0}});
    CHECK_THROWS_AS(check_degree_hypothesis(sparse), DomainError);
    const PatternGraph h(4, {{1, 3}});
    const auto bad = HColoredGraph::complete(4, h, std::vector<Color>{1, 2, 3, 1, 1, 1});
    CHECK_THROWS_AS(check_degree_hypothesis(bad), NotMultipartiteError);
}

TEST_CASE("cycle hypothesis examples") {
    CHECK(check_no_c4_exactly3(fixtures::figure1()).holds);

    const auto fig2 = check_no_c4_exactly3(fixtures::figure2());
    CHECK_FALSE(fig2.holds);
    CHECK(fig2.total == fig2.offending.size());
    const auto target = canonical_cycle(std::vector<Vertex>{r, s, x, t});
    CHECK(std::any_of(fig2.offending.begin(), fig2.offending.end(),
                      [&](const CycleReport& rep) { return rep.walk.vertices == target; }));

    const auto k4 = fixtures::proper_k4();
    CHECK(check_no_c4_exactly3(k4).holds);
    CHECK(check_no_c3_exactly2(k4).holds);

    // A monochromatic triangle with loopless H has 3 obstructions, not 2.
    CHECK(check_no_c3_exactly2(fixtures::monochromatic(3, false)).holds);
}

TEST_CASE("offending lists are capped") {
    // K7 with random colors over a sparse pattern produces many C4 with three obstructions.
    auto rng = fixtures::make_rng(3);
    const PatternGraph h(3, {{0, 1}});
    for (int trial = 0; trial < 20; ++trial) {
        const auto inst = fixtures::random_complete(rng, 8, h);
        const auto check = check_no_c4_exactly3(inst);
        CHECK(check.offending.size() == std::min<std::size_t>(check.total, kMaxListed));
        CHECK(check.holds == (check.total == 0));
    }
}

TEST_CASE("verify_theorem on the figure instances") {
    const auto v1 = verify_theorem(fixtures::figure1(), Statement::T3cycle);
    CHECK_FALSE(v1.hypotheses_hold);
    REQUIRE(v1.degree.has_value());
    CHECK_FALSE(v1.degree->holds);
    CHECK(v1.no_c4_exactly3.holds);
    CHECK_FALSE(v1.conclusion_holds);
    CHECK(v1.counterexample == Counterexample{a, 3});
    CHECK_FALSE(v1.violation());

    const auto v2 = verify_theorem(fixtures::figure2(), Statement::T3cycle);
    CHECK_FALSE(v2.hypotheses_hold);
    CHECK(v2.degree->holds);
    CHECK_FALSE(v2.no_c4_exactly3.holds);
    CHECK_FALSE(v2.conclusion_holds);
    CHECK(v2.counterexample == Counterexample{r, 3});
}

TEST_CASE("verify_theorem on a properly colored K9") {
    const auto inst = cyclic_k9();
    const auto v = verify_theorem(inst, Statement::T4large);
    CHECK(v.hypotheses_hold);
    CHECK(v.conclusion_holds);
    CHECK_FALSE(v.counterexample.has_value());
    REQUIRE(v.cycles.size() == 9);
    for (Vertex y = 0; y < 9; ++y) {
        REQUIRE(v.cycles[y].has_value());
        CHECK(v.cycles[y]->vertices.size() == 4);
        CHECK(v.cycles[y]->vertices.front() == y);
    }
    CHECK(hypotheses_hold(inst, Statement::T4large));
}

TEST_CASE("verify_theorem range and shape errors") {
    CHECK_THROWS_AS(verify_theorem(fixtures::monochromatic(3, false), Statement::T4small), DomainError);
    CHECK_THROWS_AS(verify_theorem(fixtures::proper_k4(), Statement::T4large), DomainError);
    const HColoredGraph sparse(SimpleGraph(4, {{0, 1}}), PatternGraph(1, {}), {{0, 1, 0}});
    CHECK_THROWS_AS(verify_theorem(sparse, Statement::T3cycle), DomainError);
}

TEST_CASE("verify_theorem records a failed multipartite assumption") {
    const PatternGraph h(4, {{1, 3}});
    const auto bad = HColoredGraph::complete(4, h, std::vector<Color>{1, 2, 3, 1, 1, 1});
    const auto v = verify_theorem(bad, Statement::T3cycle);
    CHECK_FALSE(v.hypotheses_hold);
    REQUIRE(v.not_multipartite.has_value());
    CHECK(v.not_multipartite->x == 0);
    CHECK_FALSE(v.degree.has_value());
}

TEST_CASE("property: Cor4 hypotheses imply T4small hypotheses below nine") {
    auto rng = fixtures::make_rng(77);
    int cor4_passes = 0;
    for (int trial = 0; trial < 600; ++trial) {
        const int n = 4 + trial % 5;
        const auto h = trial % 3 == 0 ? PatternGraph::complete_loopless(n) : fixtures::random_h(rng, 3 + trial % 4);
        const auto inst = fixtures::random_complete(rng, n, h);
        const auto cor = verify_theorem(inst, Statement::Cor4);
        const auto small = verify_theorem(inst, Statement::T4small);
        REQUIRE(cor.hypotheses_hold == hypotheses_hold(inst, Statement::Cor4));
        REQUIRE(small.hypotheses_hold == hypotheses_hold(inst, Statement::T4small));
        if (cor.hypotheses_hold) {
            ++cor4_passes;
            REQUIRE(small.hypotheses_hold);
        }
        REQUIRE_FALSE(cor.violation());
        REQUIRE_FALSE(small.violation());
        REQUIRE(cor.conclusion_holds == small.conclusion_holds);
    }
    CHECK(cor4_passes > 0);
}

TEST_CASE("property: deleting a vertex is rechecked from scratch") {
    int rechecked = 0;
    for (int n = 5; n <= 8; ++n)
        for (std::uint64_t seed = 0; seed < 25; ++seed) {
            const auto sample = sample_hypothesis_satisfying(n, seed, Statement::T4small, SampleMode::ProperlyColored);
            REQUIRE(sample.instance.has_value());
            const auto& inst = *sample.instance;
            for (Vertex gone = 0; gone < n; ++gone) {
                std::vector<Vertex> keep;
                for (Vertex y = 0; y < n; ++y)
                    if (y != gone) keep.push_back(y);
                const auto sub = fixtures::induced(inst, keep);
                const auto v = verify_theorem(sub, Statement::T4small);
                const auto degree = check_degree_hypothesis(sub);
                REQUIRE(v.degree == degree);
                REQUIRE_FALSE(v.violation());
                ++rechecked;
            }
        }
    CHECK(rechecked > 0);
}
