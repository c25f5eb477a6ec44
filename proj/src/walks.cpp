#include "hcolor/walks.hpp"

#include <algorithm>
#include <string>

#include "hcolor/errors.hpp"

namespace hcolor {

std::vector<int> obstructions_of(const HColoredGraph& inst, const Walk& w) {
    if (!is_walk(inst.graph(), w)) throw DomainError("vertex sequence is not a walk of G");
    const auto& vs = w.vertices;
    const int len = static_cast<int>(vs.size());
    std::vector<int> out;
    if (!w.closed) {
        if (len < 2) throw DomainError("an open walk needs at least one edge");
        for (int i = 1; i + 1 < len; ++i)
            if (inst.obstructed_at(vs[i - 1], vs[i], vs[i + 1])) out.push_back(i);
        return out;
    }
    for (int i = 0; i < len; ++i) {
        const Vertex prev = vs[(i + len - 1) % len];
        const Vertex next = vs[(i + 1) % len];
        if (inst.obstructed_at(prev, vs[i], next)) out.push_back(i);
    }
    return out;
}

bool is_h_walk(const HColoredGraph& inst, const Walk& w) { return obstructions_of(inst, w).empty(); }

bool is_h_path(const HColoredGraph& inst, const Walk& w) {
    if (!is_path(inst.graph(), w)) throw DomainError("vertex sequence is not a path of G");
    return obstructions_of(inst, w).empty();
}

bool is_h_cycle(const HColoredGraph& inst, const Walk& w) {
    if (!is_cycle(inst.graph(), w)) throw DomainError("vertex sequence is not a cycle of G");
    return obstructions_of(inst, w).empty();
}

CycleReport report_cycle(const HColoredGraph& inst, const Walk& cycle) {
    return {cycle, obstructions_of(inst, cycle)};
}

std::vector<Vertex> canonical_cycle(std::span<const Vertex> cycle) {
    const std::size_t len = cycle.size();
    if (len == 0) return {};
    const auto lead = static_cast<std::size_t>(std::min_element(cycle.begin(), cycle.end()) - cycle.begin());
    std::vector<Vertex> forward(len), backward(len);
    for (std::size_t i = 0; i < len; ++i) {
        forward[i] = cycle[(lead + i) % len];
        backward[i] = cycle[(lead + len - i) % len];
    }
    return std::min(forward, backward);
}

namespace {

struct CycleEnumerator {
    const SimpleGraph& g;
    int length;
    const std::function<void(std::span<const Vertex>)>& visit;
    std::vector<Vertex> path;
    std::vector<bool> used;

    void extend() {
        const Vertex last = path.back();
        if (static_cast<int>(path.size()) == length) {
            if (g.adjacent(last, path.front()) && path[1] < path.back()) visit(path);
            return;
        }
        for (Vertex next : g.neighbors(last)) {
            if (next <= path.front() || used[next]) continue;
            used[next] = true;
            path.push_back(next);
            extend();
            path.pop_back();
            used[next] = false;
        }
    }
};

}  // namespace

void for_each_cycle(const SimpleGraph& g, int length, const std::function<void(std::span<const Vertex>)>& visit) {
    if (length < 3 || length > g.order()) return;
    CycleEnumerator en{g, length, visit, {}, std::vector<bool>(g.order(), false)};
    for (Vertex start = 0; start < g.order(); ++start) {
        en.path = {start};
        en.used[start] = true;
        en.extend();
        en.used[start] = false;
    }
}

namespace {

struct HCycleFinder {
    const HColoredGraph& inst;
    int length;
    std::vector<Vertex> path;
    std::vector<bool> used;

    bool extend() {
        const auto& g = inst.graph();
        const int depth = static_cast<int>(path.size());
        const Vertex last = path.back();
        if (depth == length) {
            const Vertex start = path.front();
            if (!g.adjacent(last, start) || path[1] > last) return false;
            return !inst.obstructed_at(path[depth - 2], last, start) && !inst.obstructed_at(last, start, path[1]);
        }
        for (Vertex next : g.neighbors(last)) {
            if (used[next]) continue;
            if (depth >= 2 && inst.obstructed_at(path[depth - 2], last, next)) continue;
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

std::optional<Walk> find_h_cycle_through(const HColoredGraph& inst, Vertex v, int length) {
    const int n = inst.order();
    if (!inst.graph().contains(v)) throw DomainError("vertex " + std::to_string(v) + " is not in the graph");
    if (length < 3 || length > n)
        throw DomainError("cycle length " + std::to_string(length) + " outside 3.." + std::to_string(n));
    HCycleFinder finder{inst, length, {v}, std::vector<bool>(n, false)};
    finder.used[v] = true;
    if (!finder.extend()) return std::nullopt;
    return Walk{finder.path, true};
}

std::vector<CycleReport> cycles_with_obstruction_count(const HColoredGraph& inst, int length, int count) {
    if (length < 3) throw DomainError("cycle length must be at least 3");
    std::vector<CycleReport> out;
    for_each_cycle(inst.graph(), length, [&](std::span<const Vertex> cycle) {
        int obstructions = 0;
        for (int i = 0; i < length; ++i) {
            if (inst.obstructed_at(cycle[(i + length - 1) % length], cycle[i], cycle[(i + 1) % length]))
                ++obstructions;
        }
        if (obstructions == count) {
            Walk w{{cycle.begin(), cycle.end()}, true};
            out.push_back(report_cycle(inst, w));
        }
    });
    return out;
}

}  // namespace hcolor
