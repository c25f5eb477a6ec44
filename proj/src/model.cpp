#include "hcolor/model.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "hcolor/errors.hpp"

namespace hcolor {

SimpleGraph::SimpleGraph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw PreconditionError("graph order must be non-negative");
    for (auto& e : edges) {
        if (!contains(e.u) || !contains(e.v)) {
            std::ostringstream msg;
            msg << "edge (" << e.u << "," << e.v << ") references a vertex outside 0.." << n - 1;
            throw PreconditionError(msg.str());
        }
        if (e.u == e.v) throw PreconditionError("loop at vertex " + std::to_string(e.u));
        e = make_edge(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end());
    if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
        std::ostringstream msg;
        msg << "edge (" << dup->u << "," << dup->v << ") appears twice";
        throw PreconditionError(msg.str());
    }
    edges_ = std::move(edges);
    adjacency_.assign(static_cast<std::size_t>(n) * n, 0);
    neighbors_.assign(n, {});
    for (const auto& e : edges_) {
        adjacency_[e.u * n + e.v] = adjacency_[e.v * n + e.u] = 1;
        neighbors_[e.u].push_back(e.v);
        neighbors_[e.v].push_back(e.u);
    }
    for (auto& row : neighbors_) std::sort(row.begin(), row.end());
}

SimpleGraph SimpleGraph::complete(int n) {
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2);
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b) edges.push_back({a, b});
    return SimpleGraph(n, std::move(edges));
}

bool SimpleGraph::adjacent(Vertex a, Vertex b) const {
    if (!contains(a) || !contains(b)) return false;
    return adjacency_[a * n_ + b] != 0;
}

bool SimpleGraph::is_complete() const {
    return edges_.size() == static_cast<std::size_t>(n_) * (n_ > 0 ? n_ - 1 : 0) / 2;
}

PatternGraph::PatternGraph(int colors, std::vector<Edge> edges) : colors_(colors) {
    if (colors < 0) throw PreconditionError("color count must be non-negative");
    for (auto& e : edges) {
        if (!has_color(e.u) || !has_color(e.v)) {
            std::ostringstream msg;
            msg << "pattern edge (" << e.u << "," << e.v << ") references an undeclared color";
            throw PreconditionError(msg.str());
        }
        e = make_edge(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
    adjacency_.assign(static_cast<std::size_t>(colors) * colors, 0);
    for (const auto& e : edges_) adjacency_[e.u * colors + e.v] = adjacency_[e.v * colors + e.u] = 1;
}

PatternGraph PatternGraph::complete_loopless(int colors) {
    std::vector<Edge> edges;
    for (Color a = 0; a < colors; ++a)
        for (Color b = a + 1; b < colors; ++b) edges.push_back({a, b});
    return PatternGraph(colors, std::move(edges));
}

bool PatternGraph::is_complete_loopless() const {
    for (Color a = 0; a < colors_; ++a)
        for (Color b = 0; b < colors_; ++b)
            if (allows(a, b) != (a != b)) return false;
    return true;
}

bool transition_allowed(const PatternGraph& h, Color a, Color b) {
    if (!h.has_color(a) || !h.has_color(b)) {
        std::ostringstream msg;
        msg << "unknown color in transition (" << a << "," << b << ")";
        throw DomainError(msg.str());
    }
    return h.allows(a, b);
}

HColoredGraph::HColoredGraph(SimpleGraph g, PatternGraph h, std::vector<ColoredEdge> coloring)
    : g_(std::move(g)), h_(std::move(h)) {
    const int n = g_.order();
    for (auto& ce : coloring) {
        if (ce.u > ce.v) std::swap(ce.u, ce.v);
    }
    std::sort(coloring.begin(), coloring.end());
    coloring_ = std::move(coloring);
    color_matrix_.assign(static_cast<std::size_t>(n) * n, kNoColor);
    for (const auto& ce : coloring_) {
        if (!g_.contains(ce.u) || !g_.contains(ce.v)) continue;
        color_matrix_[ce.u * n + ce.v] = color_matrix_[ce.v * n + ce.u] = ce.color;
    }
}

HColoredGraph HColoredGraph::complete(int n, PatternGraph h, std::span<const Color> colors) {
    auto g = SimpleGraph::complete(n);
    if (colors.size() != g.edges().size())
        throw PreconditionError("complete coloring needs one color per edge of K_n");
    std::vector<ColoredEdge> coloring;
    coloring.reserve(colors.size());
    for (std::size_t i = 0; i < colors.size(); ++i)
        coloring.push_back({g.edges()[i].u, g.edges()[i].v, colors[i]});
    return HColoredGraph(std::move(g), std::move(h), std::move(coloring));
}

Color HColoredGraph::color(Vertex a, Vertex b) const {
    if (!g_.contains(a) || !g_.contains(b)) return kNoColor;
    return color_matrix_[a * g_.order() + b];
}

std::string to_string(ViolationCode code) {
    switch (code) {
        case ViolationCode::MissingEdgeColor: return "MissingEdgeColor";
        case ViolationCode::UnknownColor: return "UnknownColor";
        case ViolationCode::ColoredNonEdge: return "ColoredNonEdge";
        case ViolationCode::DuplicateEdgeColor: return "DuplicateEdgeColor";
        case ViolationCode::VertexOutOfRange: return "VertexOutOfRange";
    }
    return "Unknown";
}

std::vector<Violation> validate_instance(const HColoredGraph& inst) {
    std::vector<Violation> out;
    const auto& g = inst.graph();
    std::set<Edge> colored;
    for (const auto& ce : inst.coloring()) {
        if (!g.contains(ce.u) || !g.contains(ce.v)) {
            out.push_back({ViolationCode::VertexOutOfRange, ce.u, ce.v, ce.color});
            continue;
        }
        if (!g.adjacent(ce.u, ce.v)) {
            out.push_back({ViolationCode::ColoredNonEdge, ce.u, ce.v, ce.color});
            continue;
        }
        if (!colored.insert({ce.u, ce.v}).second)
            out.push_back({ViolationCode::DuplicateEdgeColor, ce.u, ce.v, ce.color});
        if (!inst.pattern().has_color(ce.color))
            out.push_back({ViolationCode::UnknownColor, ce.u, ce.v, ce.color});
    }
    for (const auto& e : g.edges())
        if (!colored.contains(e)) out.push_back({ViolationCode::MissingEdgeColor, e.u, e.v, kNoColor});
    return out;
}

bool is_walk(const SimpleGraph& g, const Walk& w) {
    const auto& vs = w.vertices;
    if (vs.empty()) return false;
    for (Vertex x : vs)
        if (!g.contains(x)) return false;
    for (std::size_t i = 0; i + 1 < vs.size(); ++i)
        if (!g.adjacent(vs[i], vs[i + 1])) return false;
    if (w.closed) {
        if (vs.size() < 2) return false;
        if (!g.adjacent(vs.back(), vs.front())) return false;
    }
    return true;
}

namespace {

bool distinct(const std::vector<Vertex>& vs) {
    std::vector<Vertex> sorted = vs;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

}  // namespace

bool is_path(const SimpleGraph& g, const Walk& w) {
    return !w.closed && is_walk(g, w) && distinct(w.vertices);
}

bool is_cycle(const SimpleGraph& g, const Walk& w) {
    return w.closed && w.vertices.size() >= 3 && is_walk(g, w) && distinct(w.vertices);
}

}  // namespace hcolor
