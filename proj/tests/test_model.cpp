#include <doctest.h>

#include "fixtures.hpp"
#include "hcolor/errors.hpp"
#include "hcolor/model.hpp"

using namespace hcolor;

TEST_CASE("transition_allowed follows H adjacency including loops") {
    const PatternGraph edge_12(3, {{1, 2}});
    CHECK(transition_allowed(edge_12, 1, 2));
    CHECK(transition_allowed(edge_12, 2, 1));
    CHECK_FALSE(transition_allowed(edge_12, 1, 1));

    const auto k3 = PatternGraph::complete_loopless(3);
    CHECK_FALSE(transition_allowed(k3, 2, 2));
    CHECK(transition_allowed(k3, 2, 0));

    const PatternGraph looped(2, {{1, 1}});
    CHECK(transition_allowed(looped, 1, 1));
    CHECK(looped.has_loop(1));
    CHECK_FALSE(looped.has_loop(0));
}

TEST_CASE("transition_allowed rejects undeclared colors") {
    const PatternGraph h(2, {{0, 1}});
    CHECK_THROWS_AS(transition_allowed(h, 0, 2), DomainError);
    CHECK_THROWS_AS(transition_allowed(h, -1, 0), DomainError);
}

TEST_CASE("transition_allowed is symmetric on random pattern graphs") {
    auto rng = make_rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const auto h = fixtures::random_h(rng, 1 + trial % 6);
        for (Color a = 0; a < h.color_count(); ++a)
            for (Color b = 0; b < h.color_count(); ++b)
                REQUIRE(transition_allowed(h, a, b) == transition_allowed(h, b, a));
    }
}

TEST_CASE("pattern graph normalizes and deduplicates pairs") {
    const PatternGraph h(3, {{2, 0}, {0, 2}, {1, 1}, {1, 1}});
    CHECK(h.edges() == std::vector<Edge>{{0, 2}, {1, 1}});
    CHECK_THROWS_AS(PatternGraph(2, {{0, 2}}), PreconditionError);
    CHECK(PatternGraph::complete_loopless(4).is_complete_loopless());
    CHECK_FALSE(h.is_complete_loopless());
}

TEST_CASE("simple graph rejects loops, repeats and stray vertices") {
    CHECK_THROWS_AS(SimpleGraph(3, {{1, 1}}), PreconditionError);
    CHECK_THROWS_AS(SimpleGraph(3, {{0, 1}, {1, 0}}), PreconditionError);
    CHECK_THROWS_AS(SimpleGraph(3, {{0, 3}}), PreconditionError);

    const SimpleGraph g(4, {{3, 1}, {0, 2}});
    CHECK(g.edges() == std::vector<Edge>{{0, 2}, {1, 3}});
    CHECK(g.adjacent(1, 3));
    CHECK(g.adjacent(3, 1));
    CHECK_FALSE(g.adjacent(0, 1));
    CHECK(g.degree(0) == 1);
    CHECK_FALSE(g.is_complete());
    CHECK(SimpleGraph::complete(5).edges().size() == 10);
    CHECK(SimpleGraph::complete(5).is_complete());
}

TEST_CASE("validate_instance reports each violation with its code") {
    SUBCASE("well-formed K4") { CHECK(validate_instance(fixtures::proper_k4()).empty()); }

    SUBCASE("missing edge color") {
        auto g = SimpleGraph::complete(4);
        std::vector<ColoredEdge> coloring{{0, 1, 0}, {0, 2, 1}, {0, 3, 2}, {1, 2, 2}, {1, 3, 1}};
        const HColoredGraph inst(g, PatternGraph::complete_loopless(3), coloring);
        const auto v = validate_instance(inst);
        REQUIRE(v.size() == 1);
        CHECK(v[0] == Violation{ViolationCode::MissingEdgeColor, 2, 3, kNoColor});
    }

    SUBCASE("color outside V(H)") {
        auto g = SimpleGraph::complete(3);
        const HColoredGraph inst(g, PatternGraph::complete_loopless(2), {{0, 1, 0}, {0, 2, 1}, {1, 2, 5}});
        const auto v = validate_instance(inst);
        REQUIRE(v.size() == 1);
        CHECK(v[0].code == ViolationCode::UnknownColor);
        CHECK(v[0].color == 5);
    }

    SUBCASE("colored non-edge, duplicate and out-of-range entries") {
        const SimpleGraph g(3, {{0, 1}});
        const HColoredGraph inst(g, PatternGraph(1, {}), {{0, 1, 0}, {1, 0, 0}, {1, 2, 0}, {0, 7, 0}});
        std::multiset<ViolationCode> codes;
        for (const auto& v : validate_instance(inst)) codes.insert(v.code);
        CHECK(codes.count(ViolationCode::DuplicateEdgeColor) == 1);
        CHECK(codes.count(ViolationCode::ColoredNonEdge) == 1);
        CHECK(codes.count(ViolationCode::VertexOutOfRange) == 1);
        CHECK(codes.size() == 3);
    }
}

TEST_CASE("color lookup is symmetric and reports absent edges") {
    const auto inst = fixtures::proper_k4();
    CHECK(inst.color(0, 1) == 0);
    CHECK(inst.color(1, 0) == 0);
    CHECK(inst.color(1, 2) == 2);
    CHECK(inst.color(2, 2) == kNoColor);
    CHECK(inst.color(0, 9) == kNoColor);
}

TEST_CASE("walk, path and cycle predicates") {
    const SimpleGraph g(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    CHECK(is_walk(g, {{0, 1, 0, 1}, false}));
    CHECK_FALSE(is_path(g, {{0, 1, 0}, false}));
    CHECK(is_path(g, {{0, 1, 2}, false}));
    CHECK_FALSE(is_walk(g, {{0, 2}, false}));
    CHECK(is_cycle(g, {{0, 1, 2, 3}, true}));
    CHECK_FALSE(is_cycle(g, {{0, 1, 2}, true}));  // 2-0 missing
    CHECK_FALSE(is_cycle(g, {{0, 1}, true}));     // too short
    CHECK(is_walk(g, {{0, 1}, true}));             // closed walk of length 2
    CHECK_FALSE(is_walk(g, {{}, false}));
}
