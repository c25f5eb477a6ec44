#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "hcolor/model.hpp"

namespace hcolor {

/// A closed walk together with the positions of its obstructions.
struct CycleReport {
    Walk walk;
    std::vector<int> obstructions;  // ascending positions into walk.vertices

    friend bool operator==(const CycleReport&, const CycleReport&) = default;
};

/// Positions i where c(v[i-1] v[i]) and c(v[i] v[i+1]) are not adjacent in H.
/// Open walks only have interior positions; closed walks wrap cyclically.
/// Throws DomainError when `w` is not a walk of the instance.
std::vector<int> obstructions_of(const HColoredGraph& inst, const Walk& w);

bool is_h_walk(const HColoredGraph& inst, const Walk& w);
bool is_h_path(const HColoredGraph& inst, const Walk& w);
bool is_h_cycle(const HColoredGraph& inst, const Walk& w);

CycleReport report_cycle(const HColoredGraph& inst, const Walk& cycle);

/// Rotates so the smallest vertex leads, then picks the lexicographically
/// smaller of the two traversal directions.
std::vector<Vertex> canonical_cycle(std::span<const Vertex> cycle);

/// Calls `visit` once per cycle of the given length, in canonical form.
void for_each_cycle(const SimpleGraph& g, int length, const std::function<void(std::span<const Vertex>)>& visit);

/// An H-cycle of exactly `length` vertices starting at v, or nullopt.
/// Throws DomainError unless 3 <= length <= n.
std::optional<Walk> find_h_cycle_through(const HColoredGraph& inst, Vertex v, int length);

/// Every cycle of `length` (up to rotation and reflection) with exactly
/// `count` obstructions.
std::vector<CycleReport> cycles_with_obstruction_count(const HColoredGraph& inst, int length, int count);

}  // namespace hcolor
