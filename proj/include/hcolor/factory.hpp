#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "hcolor/model.hpp"
#include "hcolor/proper.hpp"
#include "hcolor/theorems.hpp"

namespace hcolor {

/// K_n with every edge colored uniformly from V(h). Deterministic in (n, h, seed).
HColoredGraph random_instance(int n, const PatternGraph& h, std::uint64_t seed);

struct Infeasible {
    std::string reason;
};

/// Colors g with two adjacent loopless colors of h, so that every G_x is
/// complete bipartite or edgeless.
std::variant<HColoredGraph, Infeasible> bipartite_local_coloring(const SimpleGraph& g, const PatternGraph& h,
                                                                 std::uint64_t seed);

/// H on the colors of `sequence` with an edge between consecutive entries,
/// including last-to-first; repeated consecutive entries give loops.
PatternGraph pattern_from_sequence(std::span<const Color> sequence);

/// Random edge-colored K_n with 2 * color_degree(x) >= n + 1 at every x,
/// enforced by recoloring repeated colors.
EdgeColoredGraph random_high_color_degree(int n, std::uint64_t seed);

/// Random pattern graph on 2..max_colors colors with random loops.
PatternGraph random_pattern(std::uint64_t seed, int max_colors = 5);

enum class SampleMode { ProperlyColored, General };

struct SampleOutcome {
    std::optional<HColoredGraph> instance;
    std::size_t attempts = 0;

    double acceptance_rate() const {
        return attempts == 0 ? 0.0 : (instance ? 1.0 : 0.0) / static_cast<double>(attempts);
    }
};

/// Draws an instance satisfying the hypotheses of `which`. ProperlyColored
/// lifts random_high_color_degree and always succeeds; General rejects random
/// pattern graphs and colorings until one passes or `budget` attempts are spent.
SampleOutcome sample_hypothesis_satisfying(int n, std::uint64_t seed, Statement which, SampleMode mode,
                                           std::size_t budget = 10000);

}  // namespace hcolor
