#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hcolor/model.hpp"

namespace hcolor {

/// k_x equals `k`.
struct PartCountConstraint {
    Vertex vertex = 0;
    int k = 0;
    friend bool operator==(const PartCountConstraint&, const PartCountConstraint&) = default;
};

/// The closed walk `cycle` has exactly the obstructions `obstructions` (vertices).
struct CycleObstructionsConstraint {
    std::vector<Vertex> cycle;
    std::vector<Vertex> obstructions;
    friend bool operator==(const CycleObstructionsConstraint&, const CycleObstructionsConstraint&) = default;
};

/// `vertex` is an obstruction of the closed walk `cycle` (others may be too).
struct CycleObstructedAtConstraint {
    std::vector<Vertex> cycle;
    Vertex vertex = 0;
    friend bool operator==(const CycleObstructedAtConstraint&, const CycleObstructedAtConstraint&) = default;
};

/// No H-cycle of `length` passes through `vertex`.
struct NoHCycleConstraint {
    Vertex vertex = 0;
    int length = 3;
    friend bool operator==(const NoHCycleConstraint&, const NoHCycleConstraint&) = default;
};

using Constraint =
    std::variant<PartCountConstraint, CycleObstructionsConstraint, CycleObstructedAtConstraint, NoHCycleConstraint>;

std::string describe(const Constraint& c, const std::vector<std::string>& labels = {});

/// Declarative description of a complete H-colored graph to search for.
/// The pattern graph is part of the search; `colors` bounds its size.
struct SearchSpec {
    int n = 0;
    int colors = 0;
    std::vector<Constraint> constraints;
    std::uint64_t budget = 10'000'000;  // search nodes
    std::uint64_t seed = 0;
    std::vector<std::string> labels;  // optional vertex names

    friend bool operator==(const SearchSpec&, const SearchSpec&) = default;
};

/// Problems that make a spec invalid (empty when valid).
std::vector<std::string> validate_spec(const SearchSpec& spec);

/// Vertices a..d: every k_x = 2, a on no H-C3 while the C4 condition holds.
/// `extra_colors` widens the palette beyond k + 2.
SearchSpec figure1_spec(int extra_colors = 0);

/// Vertices r..x: every k_x = 4, the itemized obstruction of each triangle
/// through r, and (r,s,x,t,r) obstructed exactly at r, s and t.
/// The palette is k + 3; with k + 2 colors the constraints are unsatisfiable.
SearchSpec figure2_spec(int extra_colors = 0);

struct SearchStats {
    std::uint64_t nodes = 0;
    int max_depth = 0;  // edges colored
    bool budget_exceeded = false;
    std::string deepest_conflict;
};

struct SearchResult {
    std::optional<HColoredGraph> instance;
    SearchStats stats;

    bool exhausted() const { return !instance.has_value(); }
};

/// Backtracking over edge colors and pattern-graph adjacencies, pruning on
/// fully colored cycles and fully determined partition pairs. Deterministic
/// in (spec, seed, budget). Throws PreconditionError for an invalid spec.
SearchResult search_tightness(const SearchSpec& spec);

struct ConstraintCheck {
    std::string description;
    bool holds = false;
};

/// Re-evaluates every constraint on a finished instance through the
/// local-structure and walk modules, independently of the search.
std::vector<ConstraintCheck> check_constraints(const HColoredGraph& inst, const SearchSpec& spec);

}  // namespace hcolor
