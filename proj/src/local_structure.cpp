#include "hcolor/local_structure.hpp"

#include <algorithm>
#include <sstream>
#include <string>

namespace hcolor {

namespace {

void require_non_isolated(const HColoredGraph& inst, Vertex x) {
    if (!inst.graph().contains(x))
        throw DomainError("vertex " + std::to_string(x) + " is not in the graph");
    if (inst.graph().degree(x) == 0)
        throw PreconditionError("G_x is undefined for isolated vertex " + std::to_string(x));
}

std::string describe(const NotMultipartite& nm) {
    std::ostringstream msg;
    msg << "G_" << nm.x << " is not complete multipartite: edges to " << nm.witness[0] << ","
        << nm.witness[1] << "," << nm.witness[2] << " break transitivity";
    return msg.str();
}

}  // namespace

int AuxiliaryGraph::edge_count() const {
    int count = 0;
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j) count += adjacent(i, j) ? 1 : 0;
    return count;
}

int LocalPartition::part_of(Vertex opposite) const {
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (std::binary_search(parts[i].begin(), parts[i].end(), opposite)) return static_cast<int>(i);
    return -1;
}

NotMultipartiteError::NotMultipartiteError(NotMultipartite detail)
    : PreconditionError(describe(detail)), detail_(detail) {}

AuxiliaryGraph build_gx(const HColoredGraph& inst, Vertex x) {
    require_non_isolated(inst, x);
    AuxiliaryGraph aux;
    aux.center = x;
    const auto nbrs = inst.graph().neighbors(x);
    aux.nodes.assign(nbrs.begin(), nbrs.end());
    const std::size_t d = aux.nodes.size();
    aux.adjacency.assign(d * d, 0);
    const auto& h = inst.pattern();
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j) {
            const bool adj = h.allows(inst.color(x, aux.nodes[i]), inst.color(x, aux.nodes[j]));
            aux.adjacency[i * d + j] = aux.adjacency[j * d + i] = adj ? 1 : 0;
        }
    }
    return aux;
}

MultipartiteResult complete_multipartite_parts(int size, const std::function<bool(int, int)>& adjacent) {
    std::vector<int> component(size, -1);
    std::vector<std::vector<int>> parts;
    for (int start = 0; start < size; ++start) {
        if (component[start] != -1) continue;
        const int id = static_cast<int>(parts.size());
        parts.push_back({start});
        component[start] = id;
        for (std::size_t head = 0; head < parts[id].size(); ++head) {
            const int cur = parts[id][head];
            for (int next = 0; next < size; ++next) {
                if (next == cur || component[next] != -1 || adjacent(cur, next)) continue;
                component[next] = id;
                parts[id].push_back(next);
            }
        }
        std::sort(parts[id].begin(), parts[id].end());
    }

    bool cliques = true;
    for (const auto& part : parts) {
        for (std::size_t i = 0; i < part.size() && cliques; ++i)
            for (std::size_t j = i + 1; j < part.size() && cliques; ++j)
                if (adjacent(part[i], part[j])) cliques = false;
    }
    if (cliques) return parts;

    for (int e = 0; e < size; ++e)
        for (int f = 0; f < size; ++f) {
            if (f == e || adjacent(e, f)) continue;
            for (int g = 0; g < size; ++g) {
                if (g == e || g == f || adjacent(f, g)) continue;
                if (adjacent(e, g)) return std::array<int, 3>{e, f, g};
            }
        }
    // Unreachable: a complement component that is not a clique contains an induced P3.
    return std::array<int, 3>{0, 0, 0};
}

PartitionResult local_partition(const HColoredGraph& inst, Vertex x) {
    const auto aux = build_gx(inst, x);
    auto result = complete_multipartite_parts(aux.size(), [&aux](int i, int j) { return aux.adjacent(i, j); });
    if (auto* triple = std::get_if<std::array<int, 3>>(&result)) {
        return NotMultipartite{x, {aux.nodes[(*triple)[0]], aux.nodes[(*triple)[1]], aux.nodes[(*triple)[2]]}};
    }
    LocalPartition lp;
    lp.x = x;
    for (const auto& part : std::get<0>(result)) {
        auto& out = lp.parts.emplace_back();
        for (int i : part) out.push_back(aux.nodes[i]);
    }
    return lp;
}

int k_x(const HColoredGraph& inst, Vertex x) {
    auto result = local_partition(inst, x);
    if (auto* nm = std::get_if<NotMultipartite>(&result)) throw NotMultipartiteError(*nm);
    return std::get<LocalPartition>(result).k();
}

int l_x_induced(const HColoredGraph& inst, std::span<const Vertex> d_vertices, Vertex x) {
    if (std::find(d_vertices.begin(), d_vertices.end(), x) == d_vertices.end())
        throw PreconditionError("vertex " + std::to_string(x) + " is not in D");
    for (Vertex y : d_vertices)
        if (!inst.graph().contains(y)) throw DomainError("D references vertex " + std::to_string(y));

    auto result = local_partition(inst, x);
    if (auto* nm = std::get_if<NotMultipartite>(&result)) throw NotMultipartiteError(*nm);
    const auto& lp = std::get<LocalPartition>(result);

    std::vector<bool> hit(lp.parts.size(), false);
    bool any = false;
    for (Vertex y : d_vertices) {
        if (y == x || !inst.graph().adjacent(x, y)) continue;
        hit[lp.part_of(y)] = true;
        any = true;
    }
    if (!any) throw PreconditionError("vertex " + std::to_string(x) + " is isolated in D");
    return static_cast<int>(std::count(hit.begin(), hit.end(), true));
}

}  // namespace hcolor
