#include "hcolor/dependence.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "hcolor/local_structure.hpp"

namespace hcolor {

Tournament::Tournament(std::vector<Vertex> vertices, const std::vector<std::pair<Vertex, Vertex>>& arcs)
    : vertices_(std::move(vertices)) {
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
        throw PreconditionError("tournament vertices must be distinct");
    const std::size_t m = vertices_.size();
    arc_.assign(m * m, 0);
    for (auto [from, to] : arcs) {
        const int i = index_of(from), j = index_of(to);
        if (i < 0 || j < 0) throw PreconditionError("arc references a vertex outside the tournament");
        if (i == j) throw PreconditionError("tournaments have no self-arcs");
        if (arc_[i * m + j] || arc_[j * m + i]) throw PreconditionError("pair oriented more than once");
        arc_[i * m + j] = 1;
    }
    if (arcs.size() != m * (m - (m > 0 ? 1 : 0)) / 2) throw PreconditionError("some pair is not oriented");
}

int Tournament::index_of(Vertex x) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), x);
    if (it == vertices_.end() || *it != x) return -1;
    return static_cast<int>(it - vertices_.begin());
}

bool Tournament::has_arc(Vertex from, Vertex to) const {
    const int i = index_of(from), j = index_of(to);
    if (i < 0 || j < 0) return false;
    return arc_[i * vertices_.size() + j] != 0;
}

int Tournament::out_degree(Vertex x) const {
    const int i = index_of(x);
    if (i < 0) throw DomainError("vertex " + std::to_string(x) + " is not in the tournament");
    const std::size_t m = vertices_.size();
    return static_cast<int>(std::count(arc_.begin() + i * m, arc_.begin() + (i + 1) * m, 1));
}

std::vector<std::pair<Vertex, Vertex>> Tournament::arcs() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    const std::size_t m = vertices_.size();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (arc_[i * m + j]) out.emplace_back(vertices_[i], vertices_[j]);
    return out;
}

namespace {

void check_dependence_inputs(const HColoredGraph& inst, std::span<const Vertex> a_set, Vertex v) {
    const auto& g = inst.graph();
    if (!g.contains(v)) throw DomainError("vertex " + std::to_string(v) + " is not in the graph");
    std::vector<Vertex> sorted(a_set.begin(), a_set.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw DomainError("A lists a vertex twice");
    for (Vertex a : sorted) {
        if (!g.contains(a)) throw DomainError("A references vertex " + std::to_string(a));
        if (a == v) throw DomainError("v must not belong to A");
        if (a_set.size() >= 2 && !g.adjacent(v, a))
            throw DomainError("missing edge between v and " + std::to_string(a));
    }
    for (std::size_t i = 0; i < sorted.size(); ++i)
        for (std::size_t j = i + 1; j < sorted.size(); ++j)
            if (!g.adjacent(sorted[i], sorted[j])) {
                std::ostringstream msg;
                msg << "missing edge " << sorted[i] << "-" << sorted[j] << " inside A";
                throw DomainError(msg.str());
            }
}

// First pair {a, b} of A with neither a obstructing (v,a,b) nor b obstructing (a,b,v).
std::optional<std::pair<Vertex, Vertex>> dependence_violation(const HColoredGraph& inst,
                                                              std::span<const Vertex> a_set, Vertex v) {
    std::vector<Vertex> sorted(a_set.begin(), a_set.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        for (std::size_t j = i + 1; j < sorted.size(); ++j) {
            const Vertex a = sorted[i], b = sorted[j];
            if (!inst.obstructed_at(v, a, b) && !inst.obstructed_at(a, b, v)) return std::pair{a, b};
        }
    return std::nullopt;
}

void require_dependence(const HColoredGraph& inst, std::span<const Vertex> a_set, Vertex v) {
    check_dependence_inputs(inst, a_set, v);
    if (auto bad = dependence_violation(inst, a_set, v)) {
        std::ostringstream msg;
        msg << "A lacks the H-dependence property w.r.t. " << v << ": pair {" << bad->first << ","
            << bad->second << "}";
        throw PreconditionError(msg.str());
    }
}

DependenceWitness witness_in(const HColoredGraph& inst, std::vector<Vertex> a_set, Vertex v) {
    if (a_set.size() == 1) return {a_set.front(), 1, std::nullopt};

    const auto t = orient_dependence(inst, a_set, v);
    const auto [a, out_degree] = max_outdegree_vertex(t);
    for (Vertex partner : a_set) {
        if (partner != a && inst.obstructed_at(v, a, partner))
            return {a, l_x_induced(inst, a_set, a), partner};
    }

    // a obstructs none of its walks; the witness for A \ {a} also serves A.
    std::vector<Vertex> rest;
    std::copy_if(a_set.begin(), a_set.end(), std::back_inserter(rest), [a = a](Vertex x) { return x != a; });
    auto inner = witness_in(inst, rest, v);
    inner.bound = l_x_induced(inst, a_set, inner.a);
    return inner;
}

}  // namespace

bool has_h_dependence(const HColoredGraph& inst, std::span<const Vertex> a_set, Vertex v) {
    check_dependence_inputs(inst, a_set, v);
    return !dependence_violation(inst, a_set, v).has_value();
}

Tournament orient_dependence(const HColoredGraph& inst, std::span<const Vertex> a_set, Vertex v) {
    require_dependence(inst, a_set, v);
    std::vector<Vertex> sorted(a_set.begin(), a_set.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::pair<Vertex, Vertex>> arcs;
    for (std::size_t i = 0; i < sorted.size(); ++i)
        for (std::size_t j = i + 1; j < sorted.size(); ++j) {
            const Vertex x = sorted[i], y = sorted[j];
            if (inst.obstructed_at(v, x, y))
                arcs.emplace_back(x, y);
            else
                arcs.emplace_back(y, x);
        }
    return Tournament(std::move(sorted), arcs);
}

std::pair<Vertex, int> max_outdegree_vertex(const Tournament& t) {
    if (t.order() == 0) throw DomainError("empty tournament has no maximum out-degree");
    std::pair<Vertex, int> best{t.vertices().front(), -1};
    for (Vertex x : t.vertices()) {
        const int d = t.out_degree(x);
        if (d > best.second) best = {x, d};
    }
    return best;
}

DependenceWitness bounded_part_vertex(const HColoredGraph& inst, std::span<const Vertex> a_set, Vertex v) {
    if (a_set.empty()) throw PreconditionError("A must be nonempty");
    require_dependence(inst, a_set, v);
    for (Vertex a : a_set) {
        const auto partition = local_partition(inst, a);
        if (const auto* nm = std::get_if<NotMultipartite>(&partition)) throw NotMultipartiteError(*nm);
    }
    return witness_in(inst, {a_set.begin(), a_set.end()}, v);
}

}  // namespace hcolor
