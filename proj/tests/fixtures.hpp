#pragma once

// Shared instances and brute-force oracles for the unit tests. The oracles
// read colors and pattern adjacency directly and never call the walk or
// local-structure modules.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "hcolor/model.hpp"
#include "hcolor/random.hpp"
#include "hcolor/search.hpp"

namespace fixtures {

using namespace hcolor;

/// K4 with perfect matchings {01,23}, {02,13}, {03,12} as colors 0, 1, 2.
inline HColoredGraph proper_k4() {
    // Sorted K4 edges: 01 02 03 12 13 23
    const std::vector<Color> colors{0, 1, 2, 2, 1, 0};
    return HColoredGraph::complete(4, PatternGraph::complete_loopless(3), colors);
}

inline HColoredGraph monochromatic(int n, bool loop) {
    const std::vector<Color> colors(static_cast<std::size_t>(n) * (n - 1) / 2, 0);
    return HColoredGraph::complete(n, PatternGraph(1, loop ? std::vector<Edge>{{0, 0}} : std::vector<Edge>{}),
                                   colors);
}

inline HColoredGraph rainbow(int n) {
    const int m = n * (n - 1) / 2;
    std::vector<Color> colors(m);
    for (int i = 0; i < m; ++i) colors[i] = i;
    return HColoredGraph::complete(n, PatternGraph::complete_loopless(m), colors);
}

inline const HColoredGraph& figure1() {
    static const HColoredGraph inst = *search_tightness(figure1_spec()).instance;
    return inst;
}

inline const HColoredGraph& figure2() {
    static const HColoredGraph inst = *search_tightness(figure2_spec()).instance;
    return inst;
}

/// Random pattern graph with loops, independent of the factory module.
inline PatternGraph random_h(Rng& rng, int colors) {
    std::bernoulli_distribution edge(0.6), loop(0.3);
    std::vector<Edge> edges;
    for (Color a = 0; a < colors; ++a)
        for (Color b = a; b < colors; ++b)
            if (a == b ? loop(rng) : edge(rng)) edges.push_back({a, b});
    return PatternGraph(colors, edges);
}

inline HColoredGraph random_complete(Rng& rng, int n, const PatternGraph& h) {
    std::uniform_int_distribution<Color> pick(0, h.color_count() - 1);
    std::vector<Color> colors(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (auto& c : colors) c = pick(rng);
    return HColoredGraph::complete(n, h, colors);
}

/// Brute-force obstruction flags of a closed vertex sequence.
inline std::vector<bool> oracle_obstructions(const HColoredGraph& inst, const std::vector<Vertex>& cycle) {
    const std::size_t len = cycle.size();
    std::vector<bool> out(len);
    for (std::size_t i = 0; i < len; ++i) {
        const Color before = inst.color(cycle[(i + len - 1) % len], cycle[i]);
        const Color after = inst.color(cycle[i], cycle[(i + 1) % len]);
        out[i] = !inst.pattern().allows(before, after);
    }
    return out;
}

/// Whether some triangle through v is an H-cycle, over all C(n-1, 2) pairs.
inline bool oracle_h_triangle(const HColoredGraph& inst, Vertex v) {
    const int n = inst.order();
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b) {
            if (a == v || b == v) continue;
            const auto flags = oracle_obstructions(inst, {v, a, b});
            if (std::none_of(flags.begin(), flags.end(), [](bool f) { return f; })) return true;
        }
    return false;
}

/// Induced subinstance on `keep`, relabeled 0..|keep|-1 in the given order.
inline HColoredGraph induced(const HColoredGraph& inst, const std::vector<Vertex>& keep) {
    std::vector<Edge> edges;
    std::vector<ColoredEdge> coloring;
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (inst.graph().adjacent(keep[i], keep[j])) {
                edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
                coloring.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j), inst.color(keep[i], keep[j])});
            }
    return HColoredGraph(SimpleGraph(static_cast<int>(keep.size()), edges), inst.pattern(), coloring);
}

/// Vertices of `cycle` at the given positions, sorted.
inline std::vector<Vertex> at_positions(const std::vector<Vertex>& cycle, const std::vector<int>& positions) {
    std::vector<Vertex> out;
    for (int p : positions) out.push_back(cycle[p]);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace fixtures
