#include <doctest.h>

#include <numeric>

#include "fixtures.hpp"
#include "hcolor/local_structure.hpp"
#include "hcolor/proper.hpp"
#include "hcolor/walks.hpp"

using namespace hcolor;

namespace {

EdgeColoredGraph proper_k4_ecg() { return EdgeColoredGraph::complete(4, 3, {0, 1, 2, 2, 1, 0}); }

EdgeColoredGraph random_ecg(Rng& rng, int n, int colors) {
    std::uniform_int_distribution<Color> pick(0, colors - 1);
    std::vector<Color> assignment(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (auto& c : assignment) c = pick(rng);
    return EdgeColoredGraph::complete(n, colors, assignment);
}

// Independent properly-colored cycle scan: DFS over simple paths checking
// consecutive colors differ, closing back to the start.
bool pc_cycle_oracle(const EdgeColoredGraph& ecg) {
    const int n = ecg.graph().order();
    std::vector<Vertex> path;
    std::vector<bool> used(n, false);
    std::function<bool()> extend = [&]() -> bool {
        const Vertex last = path.back();
        for (Vertex next = path.front() + 1; next < n; ++next) {
            if (used[next] || !ecg.graph().adjacent(last, next)) continue;
            if (path.size() >= 2 && ecg.color(path[path.size() - 2], last) == ecg.color(last, next)) continue;
            path.push_back(next);
            used[next] = true;
            if (path.size() >= 3 && ecg.graph().adjacent(next, path.front())) {
                const Color closing = ecg.color(next, path.front());
                if (closing != ecg.color(path[path.size() - 2], next) && closing != ecg.color(path[0], path[1]))
                    return true;
            }
            if (extend()) return true;
            used[next] = false;
            path.pop_back();
        }
        return false;
    };
    for (Vertex start = 0; start < n; ++start) {
        path = {start};
        std::fill(used.begin(), used.end(), false);
        used[start] = true;
        if (extend()) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("edge-colored graph validation") {
    CHECK_THROWS_AS(EdgeColoredGraph::complete(3, 2, {0, 1}), PreconditionError);
    CHECK_THROWS_AS(EdgeColoredGraph::complete(3, 2, {0, 1, 2}), PreconditionError);
    const auto ecg = proper_k4_ecg();
    CHECK(ecg.color(3, 2) == 0);
    CHECK(ecg.used_color_count() == 3);
}

TEST_CASE("lift_to_h examples") {
    const auto mono = lift_to_h(EdgeColoredGraph::complete(3, 1, {0, 0, 0}));
    CHECK(mono.pattern().color_count() == 1);
    CHECK(mono.pattern().edges().empty());
    CHECK(k_x(mono, 0) == 1);
    CHECK(build_gx(mono, 0).edge_count() == 0);

    const auto k4 = lift_to_h(proper_k4_ecg());
    for (Vertex y = 0; y < 4; ++y) CHECK(k_x(k4, y) == 3);
    CHECK(drop_pattern(k4).assignment() == proper_k4_ecg().assignment());
    CHECK_THROWS_AS(drop_pattern(fixtures::monochromatic(3, true)), PreconditionError);

    auto rng = fixtures::make_rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const auto ecg = random_ecg(rng, 8, 5);
        const auto inst = lift_to_h(ecg);
        for (Vertex y = 0; y < 8; ++y) {
            std::set<Color> seen;
            for (Vertex z = 0; z < 8; ++z)
                if (z != y) seen.insert(ecg.color(y, z));
            REQUIRE(k_x(inst, y) == static_cast<int>(seen.size()));
            REQUIRE(color_degree(ecg, y) == static_cast<int>(seen.size()));
        }
    }
}

TEST_CASE("color_degree examples") {
    const EdgeColoredGraph star(SimpleGraph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}), 4, {0, 1, 2, 3});
    CHECK(color_degree(star, 0) == 4);
    CHECK(color_degree(star, 3) == 1);
    const EdgeColoredGraph sparse(SimpleGraph(3, {{0, 1}}), 1, {0});
    CHECK_THROWS_AS(color_degree(sparse, 2), DomainError);
}

TEST_CASE("yeo_vertex examples") {
    const EdgeColoredGraph path(SimpleGraph(3, {{0, 1}, {1, 2}}), 2, {0, 1});
    CHECK(yeo_vertex(path) == 0);  // G - 0 is one component joined by color 0 only

    const auto k3 = EdgeColoredGraph::complete(3, 2, {0, 0, 1});
    CHECK_FALSE(has_pc_cycle(k3));
    const auto z = yeo_vertex(k3);
    REQUIRE(z.has_value());
    // Direct check of the returned vertex.
    std::set<Color> to_z;
    for (Vertex y = 0; y < 3; ++y)
        if (y != *z) to_z.insert(k3.color(*z, y));
    CHECK(to_z.size() == 1);

    CHECK_THROWS_AS(yeo_vertex(EdgeColoredGraph::complete(3, 2, {0, 0, 0})), DomainError);
    // K4 has PC cycles; the result is only reported, never required absent.
    CHECK(has_pc_cycle(proper_k4_ecg()));
    (void)yeo_vertex(proper_k4_ecg());
}

TEST_CASE("has_pc_cycle examples and refusal") {
    CHECK_FALSE(has_pc_cycle(EdgeColoredGraph::complete(4, 1, {0, 0, 0, 0, 0, 0})));
    CHECK(has_pc_cycle(proper_k4_ecg()));
    const auto big = EdgeColoredGraph::complete(10, 1, std::vector<Color>(45, 0));
    CHECK_THROWS_AS(has_pc_cycle(big), RefusedError);
    CHECK_FALSE(has_pc_cycle(big, 10));
}

TEST_CASE("property: has_pc_cycle agrees with an independent scan") {
    auto rng = fixtures::make_rng(6);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 3 + trial % 5;
        std::vector<Edge> edges;
        std::bernoulli_distribution keep(0.6);
        for (Vertex i = 0; i < n; ++i)
            for (Vertex j = i + 1; j < n; ++j)
                if (keep(rng)) edges.push_back({i, j});
        const int colors = 2 + trial % 3;
        std::uniform_int_distribution<Color> pick(0, colors - 1);
        std::vector<Color> assignment(edges.size());
        for (auto& c : assignment) c = pick(rng);
        const EdgeColoredGraph ecg(SimpleGraph(n, edges), colors, assignment);
        REQUIRE(has_pc_cycle(ecg) == pc_cycle_oracle(ecg));
    }
}

TEST_CASE("property: properly colored walks are exactly the obstruction-free ones") {
    auto rng = fixtures::make_rng(14);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 3 + trial % 6;
        const auto ecg = random_ecg(rng, n, 2 + trial % 4);
        const auto inst = lift_to_h(ecg);
        for (int len = 3; len <= std::min(n, 5); ++len)
            for_each_cycle(inst.graph(), len, [&](std::span<const Vertex> cyc) {
                bool proper = true;
                for (int i = 0; i < len; ++i)
                    proper = proper && ecg.color(cyc[i], cyc[(i + 1) % len]) !=
                                           ecg.color(cyc[(i + 1) % len], cyc[(i + 2) % len]);
                REQUIRE(proper == is_h_cycle(inst, {{cyc.begin(), cyc.end()}, true}));
                // Open walks along the same vertices.
                bool open_proper = true;
                for (int i = 0; i + 2 < len; ++i)
                    open_proper = open_proper && ecg.color(cyc[i], cyc[i + 1]) != ecg.color(cyc[i + 1], cyc[i + 2]);
                REQUIRE(open_proper == is_h_path(inst, {{cyc.begin(), cyc.end()}, false}));
            });
    }
}

TEST_CASE("verify_corollary examples") {
    const auto rainbow = EdgeColoredGraph::complete(5, 10, [] {
        std::vector<Color> c(10);
        std::iota(c.begin(), c.end(), 0);
        return c;
    }());
    for (int length : {3, 4}) {
        const auto v = verify_corollary(rainbow, length);
        CHECK(v.hypothesis_holds);
        CHECK(v.conclusion_holds());
    }

    const auto two = EdgeColoredGraph::complete(4, 2, {0, 1, 0, 0, 1, 0});
    const auto v = verify_corollary(two, 4);
    CHECK_FALSE(v.hypothesis_holds);
    CHECK_FALSE(v.verdict.has_value());
    CHECK(v.color_degrees == std::vector<int>{2, 2, 2, 2});

    CHECK_THROWS_AS(verify_corollary(rainbow, 5), DomainError);
    const EdgeColoredGraph sparse(SimpleGraph(4, {{0, 1}}), 1, {0});
    CHECK_THROWS_AS(verify_corollary(sparse, 3), DomainError);
}

TEST_CASE("seven-colored K7 with four colors per vertex has PC triangles everywhere") {
    // Edge ij colored (i + j) mod 7: proper, so every vertex sees six colors.
    std::vector<Color> colors;
    for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j) colors.push_back((i + j) % 7);
    const auto v = verify_corollary(EdgeColoredGraph::complete(7, 7, colors), 3);
    CHECK(v.hypothesis_holds);
    CHECK(v.conclusion_holds());
}

TEST_CASE("exhaustive small 2-colorings: no PC cycle implies a Yeo vertex") {
    int acyclic = 0;
    for (int n = 3; n <= 5; ++n) {
        std::vector<Edge> all;
        for (Vertex i = 0; i < n; ++i)
            for (Vertex j = i + 1; j < n; ++j) all.push_back({i, j});
        for (std::uint32_t mask = 1; mask < (1u << all.size()); ++mask) {
            std::vector<Edge> edges;
            for (std::size_t e = 0; e < all.size(); ++e)
                if (mask >> e & 1u) edges.push_back(all[e]);
            const SimpleGraph g(n, edges);
            bool spanning = true;
            for (Vertex y = 0; y < n; ++y) spanning = spanning && g.degree(y) > 0;
            if (!spanning) continue;
            for (std::uint32_t cmask = 0; cmask < (1u << edges.size()); ++cmask) {
                std::vector<Color> assignment(edges.size());
                for (std::size_t e = 0; e < edges.size(); ++e) assignment[e] = cmask >> e & 1u;
                const EdgeColoredGraph ecg(g, 2, assignment);
                if (ecg.used_color_count() < 2 || has_pc_cycle(ecg)) continue;
                ++acyclic;
                REQUIRE(yeo_vertex(ecg).has_value());
            }
        }
    }
    CHECK(acyclic > 0);
}
