#include "hcolor/factory.hpp"

#include <algorithm>
#include <set>

#include "hcolor/errors.hpp"
#include "hcolor/random.hpp"

namespace hcolor {

HColoredGraph random_instance(int n, const PatternGraph& h, std::uint64_t seed) {
    if (n < 3) throw PreconditionError("random instances need n >= 3");
    if (h.color_count() == 0) throw DomainError("pattern graph has no colors");
    auto rng = make_rng(seed);
    std::uniform_int_distribution<Color> pick(0, h.color_count() - 1);
    std::vector<Color> colors(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (auto& c : colors) c = pick(rng);
    return HColoredGraph::complete(n, h, colors);
}

std::variant<HColoredGraph, Infeasible> bipartite_local_coloring(const SimpleGraph& g, const PatternGraph& h,
                                                                 std::uint64_t seed) {
    if (g.edges().empty()) return HColoredGraph(g, h, {});
    for (Color a = 0; a < h.color_count(); ++a) {
        for (Color b = a + 1; b < h.color_count(); ++b) {
            if (!h.allows(a, b) || h.has_loop(a) || h.has_loop(b)) continue;
            auto rng = make_rng(seed);
            std::bernoulli_distribution coin(0.5);
            std::vector<ColoredEdge> coloring;
            for (const auto& e : g.edges()) coloring.push_back({e.u, e.v, coin(rng) ? a : b});
            return HColoredGraph(g, h, std::move(coloring));
        }
    }
    return Infeasible{"pattern graph has no edge between two loopless colors"};
}

PatternGraph pattern_from_sequence(std::span<const Color> sequence) {
    if (sequence.empty()) throw PreconditionError("color sequence must be nonempty");
    const Color top = *std::max_element(sequence.begin(), sequence.end());
    if (*std::min_element(sequence.begin(), sequence.end()) < 0) throw DomainError("colors are non-negative");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < sequence.size(); ++i)
        edges.push_back(make_edge(sequence[i], sequence[(i + 1) % sequence.size()]));
    return PatternGraph(top + 1, std::move(edges));
}

EdgeColoredGraph random_high_color_degree(int n, std::uint64_t seed) {
    if (n < 3) throw PreconditionError("need n >= 3");
    auto rng = make_rng(seed);
    const int need = (n + 2) / 2;  // smallest d with 2d >= n + 1
    int palette = std::uniform_int_distribution<int>(need, std::max(need, n))(rng);

    std::vector<Color> m(static_cast<std::size_t>(n) * n, kNoColor);
    std::uniform_int_distribution<Color> pick(0, palette - 1);
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b) m[a * n + b] = m[b * n + a] = pick(rng);

    auto colors_at = [&](Vertex x) {
        std::vector<int> count(palette, 0);
        for (Vertex y = 0; y < n; ++y)
            if (y != x) ++count[m[x * n + y]];
        return count;
    };

    // Each step raises the color degree at x by one without lowering it at y.
    for (Vertex x = 0; x < n; ++x) {
        while (true) {
            auto at_x = colors_at(x);
            const int degree = static_cast<int>(std::count_if(at_x.begin(), at_x.end(), [](int c) { return c > 0; }));
            if (degree >= need) break;
            std::vector<Vertex> repeated;
            for (Vertex y = 0; y < n; ++y)
                if (y != x && at_x[m[x * n + y]] > 1) repeated.push_back(y);
            const Vertex y = repeated[std::uniform_int_distribution<std::size_t>(0, repeated.size() - 1)(rng)];
            auto at_y = colors_at(y);
            std::vector<Color> fresh;
            for (Color c = 0; c < palette; ++c)
                if (at_x[c] == 0 && at_y[c] == 0) fresh.push_back(c);
            Color chosen;
            if (fresh.empty()) {
                chosen = palette++;
            } else {
                chosen = fresh[std::uniform_int_distribution<std::size_t>(0, fresh.size() - 1)(rng)];
            }
            m[x * n + y] = m[y * n + x] = chosen;
        }
    }
    // Earlier vertices may only have gained colors, so one pass suffices.

    std::vector<Color> assignment;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b) assignment.push_back(m[a * n + b]);
    return EdgeColoredGraph::complete(n, palette, std::move(assignment));
}

PatternGraph random_pattern(std::uint64_t seed, int max_colors) {
    auto rng = make_rng(seed);
    const int colors = std::uniform_int_distribution<int>(2, std::max(2, max_colors))(rng);
    const double edge_p = std::uniform_real_distribution<double>(0.4, 1.0)(rng);
    const double loop_p = std::uniform_real_distribution<double>(0.0, 0.8)(rng);
    std::vector<Edge> edges;
    for (Color a = 0; a < colors; ++a)
        for (Color b = a; b < colors; ++b)
            if (std::bernoulli_distribution(a == b ? loop_p : edge_p)(rng)) edges.push_back({a, b});
    return PatternGraph(colors, std::move(edges));
}

SampleOutcome sample_hypothesis_satisfying(int n, std::uint64_t seed, Statement which, SampleMode mode,
                                           std::size_t budget) {
    if (!in_range(which, n))
        throw DomainError("order " + std::to_string(n) + " is outside the range of " + to_string(which));
    SampleOutcome out;
    if (mode == SampleMode::ProperlyColored) {
        out.attempts = 1;
        out.instance = lift_to_h(random_high_color_degree(n, seed));
        return out;
    }
    for (std::size_t attempt = 0; attempt < budget; ++attempt) {
        out.attempts = attempt + 1;
        const auto h = random_pattern(derive_seed(seed, 2 * attempt));
        auto inst = random_instance(n, h, derive_seed(seed, 2 * attempt + 1));
        if (hypotheses_hold(inst, which)) {
            out.instance = std::move(inst);
            return out;
        }
    }
    return out;
}

}  // namespace hcolor
