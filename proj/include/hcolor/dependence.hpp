#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hcolor/errors.hpp"
#include "hcolor/model.hpp"

namespace hcolor {

/// Tournament on an explicit vertex set: exactly one arc per unordered pair.
class Tournament {
public:
    Tournament() = default;
    /// `arcs` must orient every pair of `vertices` exactly once; throws PreconditionError otherwise.
    Tournament(std::vector<Vertex> vertices, const std::vector<std::pair<Vertex, Vertex>>& arcs);

    const std::vector<Vertex>& vertices() const { return vertices_; }
    int order() const { return static_cast<int>(vertices_.size()); }
    bool has_arc(Vertex from, Vertex to) const;
    int out_degree(Vertex x) const;
    std::vector<std::pair<Vertex, Vertex>> arcs() const;

private:
    int index_of(Vertex x) const;

    std::vector<Vertex> vertices_;  // ascending
    std::vector<std::uint8_t> arc_;
};

/// A vertex a of A with a small restricted part count.
struct DependenceWitness {
    Vertex a = 0;
    int bound = 0;                              // l_a^D for D = G[A]
    std::optional<Vertex> obstruction_partner;  // a' with a an obstruction of (v, a, a')

    friend bool operator==(const DependenceWitness&, const DependenceWitness&) = default;
};

/// True iff for every pair {a, a'} of A, a obstructs (v, a, a') or a'
/// obstructs (a, a', v).
bool has_h_dependence(const HColoredGraph& inst, std::span<const Vertex> a_set, Vertex v);

/// Orients each pair x-y of A from the vertex that obstructs (v, x, y);
/// when both qualify the arc runs from the smaller index to the larger.
Tournament orient_dependence(const HColoredGraph& inst, std::span<const Vertex> a_set, Vertex v);

/// A vertex of maximum out-degree, smallest index on ties.
std::pair<Vertex, int> max_outdegree_vertex(const Tournament& t);

DependenceWitness bounded_part_vertex(const HColoredGraph& inst, std::span<const Vertex> a_set, Vertex v);

}  // namespace hcolor
