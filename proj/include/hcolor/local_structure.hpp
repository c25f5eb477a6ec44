#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <variant>
#include <vector>

#include "hcolor/errors.hpp"
#include "hcolor/model.hpp"

namespace hcolor {

/// Kotzig's auxiliary graph G_x. Its vertices are the edges incident with x,
/// each identified by its opposite endpoint; two are adjacent iff their colors
/// are adjacent in H.
struct AuxiliaryGraph {
    Vertex center = 0;
    std::vector<Vertex> nodes;  // opposite endpoints, ascending
    std::vector<std::uint8_t> adjacency;

    int size() const { return static_cast<int>(nodes.size()); }
    bool adjacent(int i, int j) const { return adjacency[i * nodes.size() + j] != 0; }
    int edge_count() const;
};

AuxiliaryGraph build_gx(const HColoredGraph& inst, Vertex x);

/// The complete-multipartite decomposition of G_x. Parts hold opposite
/// endpoints and are ordered by their smallest member.
struct LocalPartition {
    Vertex x = 0;
    std::vector<std::vector<Vertex>> parts;

    int k() const { return static_cast<int>(parts.size()); }
    /// Index of the part holding edge x-opposite, or -1.
    int part_of(Vertex opposite) const;

    friend bool operator==(const LocalPartition&, const LocalPartition&) = default;
};

/// Three incident edges (by opposite endpoint) e, f, g with ef and fg
/// non-adjacent but eg adjacent in G_x.
struct NotMultipartite {
    Vertex x = 0;
    std::array<Vertex, 3> witness{};

    friend bool operator==(const NotMultipartite&, const NotMultipartite&) = default;
};

using PartitionResult = std::variant<LocalPartition, NotMultipartite>;

class NotMultipartiteError : public PreconditionError {
public:
    explicit NotMultipartiteError(NotMultipartite detail);
    const NotMultipartite& detail() const { return detail_; }

private:
    NotMultipartite detail_;
};

/// Recognizes a complete multipartite graph on 0..size-1 from its adjacency
/// predicate. Returns the parts (components of the complement, ordered by
/// smallest member) or the lexicographically first violating index triple.
using MultipartiteResult = std::variant<std::vector<std::vector<int>>, std::array<int, 3>>;
MultipartiteResult complete_multipartite_parts(int size, const std::function<bool(int, int)>& adjacent);

PartitionResult local_partition(const HColoredGraph& inst, Vertex x);

/// Part count of G_x. Throws NotMultipartiteError.
int k_x(const HColoredGraph& inst, Vertex x);

/// Number of parts of the partition at x that meet the edges from x into
/// `d_vertices` (the partition of D_x for D = G[d_vertices]).
int l_x_induced(const HColoredGraph& inst, std::span<const Vertex> d_vertices, Vertex x);

}  // namespace hcolor
