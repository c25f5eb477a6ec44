#include "hcolor/proper.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "hcolor/errors.hpp"

namespace hcolor {

EdgeColoredGraph::EdgeColoredGraph(SimpleGraph g, int colors, std::vector<Color> assignment)
    : g_(std::move(g)), colors_(colors), assignment_(std::move(assignment)) {
    if (colors < 1) throw PreconditionError("an edge-colored graph needs at least one color");
    if (assignment_.size() != g_.edges().size()) throw PreconditionError("every edge needs exactly one color");
    const int n = g_.order();
    matrix_.assign(static_cast<std::size_t>(n) * n, kNoColor);
    for (std::size_t i = 0; i < assignment_.size(); ++i) {
        const Color c = assignment_[i];
        if (c < 0 || c >= colors) throw PreconditionError("color " + std::to_string(c) + " outside the palette");
        const auto& e = g_.edges()[i];
        matrix_[e.u * n + e.v] = matrix_[e.v * n + e.u] = c;
    }
}

EdgeColoredGraph EdgeColoredGraph::complete(int n, int colors, std::vector<Color> assignment) {
    return EdgeColoredGraph(SimpleGraph::complete(n), colors, std::move(assignment));
}

Color EdgeColoredGraph::color(Vertex a, Vertex b) const {
    if (!g_.contains(a) || !g_.contains(b)) return kNoColor;
    return matrix_[a * g_.order() + b];
}

int EdgeColoredGraph::used_color_count() const {
    return static_cast<int>(std::set<Color>(assignment_.begin(), assignment_.end()).size());
}

HColoredGraph lift_to_h(const EdgeColoredGraph& ecg) {
    std::vector<ColoredEdge> coloring;
    coloring.reserve(ecg.assignment().size());
    for (std::size_t i = 0; i < ecg.assignment().size(); ++i) {
        const auto& e = ecg.graph().edges()[i];
        coloring.push_back({e.u, e.v, ecg.assignment()[i]});
    }
    return HColoredGraph(ecg.graph(), PatternGraph::complete_loopless(ecg.color_count()), std::move(coloring));
}

EdgeColoredGraph drop_pattern(const HColoredGraph& inst) {
    if (!inst.pattern().is_complete_loopless())
        throw PreconditionError("pattern graph is not complete and loopless");
    std::vector<Color> assignment;
    for (const auto& e : inst.graph().edges()) assignment.push_back(inst.color(e.u, e.v));
    return EdgeColoredGraph(inst.graph(), std::max(1, inst.pattern().color_count()), std::move(assignment));
}

int color_degree(const EdgeColoredGraph& ecg, Vertex x) {
    if (!ecg.graph().contains(x) || ecg.graph().degree(x) == 0)
        throw DomainError("color degree is undefined at isolated vertex " + std::to_string(x));
    std::set<Color> seen;
    for (Vertex y : ecg.graph().neighbors(x)) seen.insert(ecg.color(x, y));
    return static_cast<int>(seen.size());
}

std::optional<Vertex> yeo_vertex(const EdgeColoredGraph& ecg) {
    if (ecg.used_color_count() < 2) throw DomainError("Yeo's condition needs at least two colors in use");
    const auto& g = ecg.graph();
    const int n = g.order();
    for (Vertex z = 0; z < n; ++z) {
        std::vector<int> component(n, -1);
        component[z] = n;  // removed
        bool ok = true;
        for (Vertex s = 0; s < n && ok; ++s) {
            if (component[s] != -1) continue;
            component[s] = s;
            std::vector<Vertex> queue{s};
            Color joined = kNoColor;
            for (std::size_t head = 0; head < queue.size() && ok; ++head) {
                const Vertex cur = queue[head];
                if (g.adjacent(cur, z)) {
                    const Color c = ecg.color(cur, z);
                    if (joined != kNoColor && joined != c) ok = false;
                    joined = c;
                }
                for (Vertex next : g.neighbors(cur)) {
                    if (component[next] != -1) continue;
                    component[next] = s;
                    queue.push_back(next);
                }
            }
        }
        if (ok) return z;
    }
    return std::nullopt;
}

namespace {

struct PcCycleSearch {
    const EdgeColoredGraph& ecg;
    std::vector<Vertex> path;
    std::vector<bool> used;

    bool extend() {
        const auto& g = ecg.graph();
        const Vertex start = path.front();
        const Vertex last = path.back();
        const std::size_t depth = path.size();
        const Color incoming = depth >= 2 ? ecg.color(path[depth - 2], last) : kNoColor;
        if (depth >= 3 && g.adjacent(last, start)) {
            const Color closing = ecg.color(last, start);
            if (closing != incoming && closing != ecg.color(start, path[1])) return true;
        }
        for (Vertex next : g.neighbors(last)) {
            if (next <= start || used[next]) continue;
            if (ecg.color(last, next) == incoming) continue;
            used[next] = true;
            path.push_back(next);
            if (extend()) return true;
            path.pop_back();
            used[next] = false;
        }
        return false;
    }
};

}  // namespace

bool has_pc_cycle(const EdgeColoredGraph& ecg, int bound) {
    const int n = ecg.graph().order();
    if (n > bound)
        throw RefusedError("exhaustive PC-cycle search refused: n = " + std::to_string(n) + " exceeds bound " +
                           std::to_string(bound));
    PcCycleSearch search{ecg, {}, std::vector<bool>(n, false)};
    for (Vertex s = 0; s < n; ++s) {
        search.path = {s};
        std::fill(search.used.begin(), search.used.end(), false);
        search.used[s] = true;
        if (search.extend()) return true;
    }
    return false;
}

CorollaryVerdict verify_corollary(const EdgeColoredGraph& ecg, int length) {
    if (length != 3 && length != 4) throw DomainError("corollaries cover cycle lengths 3 and 4 only");
    const auto& g = ecg.graph();
    const int n = g.order();
    if (!g.is_complete()) throw DomainError("the corollaries need a complete graph");
    if (n < length) throw DomainError("order too small for the requested cycle length");

    CorollaryVerdict out;
    out.length = length;
    out.hypothesis_holds = true;
    for (Vertex x = 0; x < n; ++x) {
        out.color_degrees.push_back(color_degree(ecg, x));
        if (2 * out.color_degrees.back() < n + 1) out.hypothesis_holds = false;
    }
    if (!out.hypothesis_holds) return out;
    out.verdict = verify_theorem(lift_to_h(ecg), length == 3 ? Statement::T3cycle : Statement::Cor4);
    return out;
}

}  // namespace hcolor
