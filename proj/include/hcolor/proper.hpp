#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hcolor/model.hpp"
#include "hcolor/theorems.hpp"

namespace hcolor {

/// A graph whose edges carry colors 0..colors-1, with no transition rule
/// attached. Properly colored walks change color at every step.
class EdgeColoredGraph {
public:
    EdgeColoredGraph() = default;
    /// `assignment[i]` colors `g.edges()[i]`.
    EdgeColoredGraph(SimpleGraph g, int colors, std::vector<Color> assignment);

    static EdgeColoredGraph complete(int n, int colors, std::vector<Color> assignment);

    const SimpleGraph& graph() const { return g_; }
    int color_count() const { return colors_; }
    const std::vector<Color>& assignment() const { return assignment_; }
    Color color(Vertex a, Vertex b) const;
    int used_color_count() const;

private:
    SimpleGraph g_;
    int colors_ = 0;
    std::vector<Color> assignment_;
    std::vector<Color> matrix_;
};

/// Attaches the complete loopless pattern graph on the palette.
HColoredGraph lift_to_h(const EdgeColoredGraph& ecg);

/// Inverse of lift_to_h for instances whose pattern is complete and loopless.
EdgeColoredGraph drop_pattern(const HColoredGraph& inst);

/// Number of distinct colors at x. Throws DomainError for isolated x.
int color_degree(const EdgeColoredGraph& ecg, Vertex x);

/// Smallest z such that every component of G - z is joined to z by edges of
/// at most one color. Throws DomainError when fewer than two colors are used.
std::optional<Vertex> yeo_vertex(const EdgeColoredGraph& ecg);

inline constexpr int kDefaultExhaustiveBound = 9;

/// Exhaustive search for a properly colored cycle of any length.
/// Throws RefusedError when n exceeds `bound`.
bool has_pc_cycle(const EdgeColoredGraph& ecg, int bound = kDefaultExhaustiveBound);

struct CorollaryVerdict {
    int length = 3;
    bool hypothesis_holds = false;
    std::vector<int> color_degrees;
    std::optional<TheoremVerdict> verdict;  // evaluated only when the hypothesis holds

    bool conclusion_holds() const { return verdict && verdict->conclusion_holds; }
};

/// Properly colored cycles of length 3 or 4 through every vertex of a complete
/// graph with 2 * color_degree >= n + 1 everywhere.
CorollaryVerdict verify_corollary(const EdgeColoredGraph& ecg, int length);

}  // namespace hcolor
