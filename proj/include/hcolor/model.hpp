#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hcolor {

using Vertex = int;
using Color = int;

inline constexpr Color kNoColor = -1;

/// Unordered vertex pair stored with `u < v` (or `u == v` for pattern loops).
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(Vertex a, Vertex b) { return a <= b ? Edge{a, b} : Edge{b, a}; }

/// Simple undirected graph on vertices 0..n-1.
///
/// Construction rejects loops, repeated pairs and out-of-range endpoints, so a
/// SimpleGraph value always satisfies its invariants. Edges are kept sorted.
class SimpleGraph {
public:
    SimpleGraph() = default;
    SimpleGraph(int n, std::vector<Edge> edges);

    static SimpleGraph complete(int n);

    int order() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    bool adjacent(Vertex a, Vertex b) const;
    std::span<const Vertex> neighbors(Vertex x) const { return neighbors_[x]; }
    int degree(Vertex x) const { return static_cast<int>(neighbors_[x].size()); }
    bool is_complete() const;
    bool contains(Vertex x) const { return x >= 0 && x < n_; }

    friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::uint8_t> adjacency_;
    std::vector<std::vector<Vertex>> neighbors_;
};

/// The graph H on colors 0..colors-1. Loops are stored as (c, c) in the same
/// pair set as ordinary edges.
class PatternGraph {
public:
    PatternGraph() = default;
    PatternGraph(int colors, std::vector<Edge> edges);

    static PatternGraph complete_loopless(int colors);

    int color_count() const { return colors_; }
    const std::vector<Edge>& edges() const { return edges_; }
    bool has_color(Color c) const { return c >= 0 && c < colors_; }
    bool has_loop(Color c) const { return allows(c, c); }
    bool is_complete_loopless() const;

    // No range check; callers guarantee both colors are declared.
    bool allows(Color a, Color b) const { return adjacency_[a * colors_ + b] != 0; }

    friend bool operator==(const PatternGraph& a, const PatternGraph& b) {
        return a.colors_ == b.colors_ && a.edges_ == b.edges_;
    }

private:
    int colors_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::uint8_t> adjacency_;
};

/// Adjacency query in H including loops. Throws DomainError for undeclared colors.
bool transition_allowed(const PatternGraph& h, Color a, Color b);

struct ColoredEdge {
    Vertex u = 0;
    Vertex v = 0;
    Color color = 0;

    friend auto operator<=>(const ColoredEdge&, const ColoredEdge&) = default;
};

/// A simple graph G, a pattern graph H and an assignment of colors to edges.
///
/// The assignment is stored as given (normalized and sorted) and is not
/// validated on construction; validate_instance() reports every inconsistency.
/// Query operations elsewhere in the library assume a valid instance.
class HColoredGraph {
public:
    HColoredGraph() = default;
    HColoredGraph(SimpleGraph g, PatternGraph h, std::vector<ColoredEdge> coloring);

    /// K_n colored by `colors`, indexed in the sorted edge order of K_n.
    static HColoredGraph complete(int n, PatternGraph h, std::span<const Color> colors);

    const SimpleGraph& graph() const { return g_; }
    const PatternGraph& pattern() const { return h_; }
    const std::vector<ColoredEdge>& coloring() const { return coloring_; }
    int order() const { return g_.order(); }

    /// Color of edge ab, or kNoColor when ab is uncolored or not an edge.
    Color color(Vertex a, Vertex b) const;

    /// True when the walk (a, b, c) has an obstruction at b.
    bool obstructed_at(Vertex a, Vertex b, Vertex c) const {
        return !h_.allows(color(a, b), color(b, c));
    }

    friend bool operator==(const HColoredGraph& a, const HColoredGraph& b) {
        return a.g_ == b.g_ && a.h_ == b.h_ && a.coloring_ == b.coloring_;
    }

private:
    SimpleGraph g_;
    PatternGraph h_;
    std::vector<ColoredEdge> coloring_;
    std::vector<Color> color_matrix_;
};

enum class ViolationCode {
    MissingEdgeColor,
    UnknownColor,
    ColoredNonEdge,
    DuplicateEdgeColor,
    VertexOutOfRange,
};

std::string to_string(ViolationCode code);

struct Violation {
    ViolationCode code;
    Vertex u = 0;
    Vertex v = 0;
    Color color = kNoColor;

    friend bool operator==(const Violation&, const Violation&) = default;
};

std::vector<Violation> validate_instance(const HColoredGraph& inst);

/// Vertex sequence; a closed walk lists each vertex once and implicitly
/// returns from the last vertex to the first.
struct Walk {
    std::vector<Vertex> vertices;
    bool closed = false;

    std::size_t size() const { return vertices.size(); }
    friend bool operator==(const Walk&, const Walk&) = default;
};

bool is_walk(const SimpleGraph& g, const Walk& w);
bool is_path(const SimpleGraph& g, const Walk& w);
bool is_cycle(const SimpleGraph& g, const Walk& w);

}  // namespace hcolor
