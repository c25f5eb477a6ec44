#include "hcolor/search.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>

#include "hcolor/errors.hpp"
#include "hcolor/local_structure.hpp"
#include "hcolor/random.hpp"
#include "hcolor/walks.hpp"

namespace hcolor {

namespace {

std::string name_of(Vertex x, const std::vector<std::string>& labels) {
    if (x >= 0 && static_cast<std::size_t>(x) < labels.size()) return labels[x];
    return std::to_string(x);
}

std::string cycle_text(const std::vector<Vertex>& cycle, const std::vector<std::string>& labels) {
    std::string out = "(";
    for (Vertex x : cycle) out += name_of(x, labels) + ",";
    if (!cycle.empty()) out += name_of(cycle.front(), labels);
    return out + ")";
}

std::string set_text(std::vector<Vertex> vs, const std::vector<std::string>& labels) {
    std::sort(vs.begin(), vs.end());
    std::string out = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? "," : "") + name_of(vs[i], labels);
    return out + "}";
}

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

std::string describe(const Constraint& c, const std::vector<std::string>& labels) {
    return std::visit(
        overloaded{
            [&](const PartCountConstraint& pc) { return "k(" + name_of(pc.vertex, labels) + ") = " + std::to_string(pc.k); },
            [&](const CycleObstructionsConstraint& co) {
                return "obstructions" + cycle_text(co.cycle, labels) + " = " + set_text(co.obstructions, labels);
            },
            [&](const CycleObstructedAtConstraint& oa) {
                return name_of(oa.vertex, labels) + " obstructs " + cycle_text(oa.cycle, labels);
            },
            [&](const NoHCycleConstraint& nh) {
                return "no H-cycle of length " + std::to_string(nh.length) + " through " + name_of(nh.vertex, labels);
            },
        },
        c);
}

std::vector<std::string> validate_spec(const SearchSpec& spec) {
    std::vector<std::string> problems;
    if (spec.n < 3) problems.push_back("n must be at least 3");
    if (spec.colors < 1) problems.push_back("at least one color is required");
    if (spec.budget == 0) problems.push_back("budget must be positive");
    if (!spec.labels.empty() && static_cast<int>(spec.labels.size()) != spec.n)
        problems.push_back("labels must name every vertex");
    auto vertex_ok = [&](Vertex x) { return x >= 0 && x < spec.n; };
    auto cycle_ok = [&](const std::vector<Vertex>& cycle) {
        if (cycle.size() < 3 || static_cast<int>(cycle.size()) > spec.n) return false;
        if (!std::all_of(cycle.begin(), cycle.end(), vertex_ok)) return false;
        std::set<Vertex> distinct(cycle.begin(), cycle.end());
        return distinct.size() == cycle.size();
    };
    for (std::size_t i = 0; i < spec.constraints.size(); ++i) {
        const auto& c = spec.constraints[i];
        const std::string where = "constraint " + std::to_string(i) + ": ";
        std::visit(overloaded{
                       [&](const PartCountConstraint& pc) {
                           if (!vertex_ok(pc.vertex)) problems.push_back(where + "vertex out of range");
                           if (pc.k < 1) problems.push_back(where + "k must be positive");
                       },
                       [&](const CycleObstructionsConstraint& co) {
                           if (!cycle_ok(co.cycle)) problems.push_back(where + "invalid cycle");
                           for (Vertex x : co.obstructions)
                               if (std::find(co.cycle.begin(), co.cycle.end(), x) == co.cycle.end())
                                   problems.push_back(where + "obstruction outside the cycle");
                       },
                       [&](const CycleObstructedAtConstraint& oa) {
                           if (!cycle_ok(oa.cycle)) problems.push_back(where + "invalid cycle");
                           if (std::find(oa.cycle.begin(), oa.cycle.end(), oa.vertex) == oa.cycle.end())
                               problems.push_back(where + "obstruction outside the cycle");
                       },
                       [&](const NoHCycleConstraint& nh) {
                           if (!vertex_ok(nh.vertex)) problems.push_back(where + "vertex out of range");
                           if (nh.length < 3 || nh.length > spec.n) problems.push_back(where + "length out of range");
                       },
                   },
                   c);
    }
    return problems;
}

SearchSpec figure1_spec(int extra_colors) {
    enum : Vertex { a, b, c, d };
    SearchSpec spec;
    spec.n = 4;
    spec.colors = 2 + 2 + extra_colors;
    spec.labels = {"a", "b", "c", "d"};
    for (Vertex x = 0; x < 4; ++x) spec.constraints.push_back(PartCountConstraint{x, 2});
    spec.constraints.push_back(CycleObstructionsConstraint{{a, b, c, d}, {}});
    spec.constraints.push_back(CycleObstructionsConstraint{{a, b, d, c}, {a, c}});
    spec.constraints.push_back(CycleObstructionsConstraint{{a, d, b, c}, {b, d}});
    spec.constraints.push_back(CycleObstructedAtConstraint{{a, b, c}, a});
    spec.constraints.push_back(CycleObstructedAtConstraint{{a, c, d}, c});
    spec.constraints.push_back(CycleObstructedAtConstraint{{a, b, d}, d});
    spec.constraints.push_back(NoHCycleConstraint{a, 3});
    return spec;
}

SearchSpec figure2_spec(int extra_colors) {
    enum : Vertex { r, s, t, u, v, w, x };
    SearchSpec spec;
    spec.n = 7;
    spec.colors = 4 + 3 + extra_colors;
    spec.labels = {"r", "s", "t", "u", "v", "w", "x"};
    for (Vertex y = 0; y < 7; ++y) spec.constraints.push_back(PartCountConstraint{y, 4});
    const struct {
        Vertex p, q, at;
    } triangles[] = {
        {x, w, w}, {x, v, x}, {x, u, x}, {x, t, t}, {x, s, s}, {w, v, w}, {w, u, u}, {w, t, t},
        {w, s, s}, {v, u, u}, {v, t, v}, {v, s, v}, {u, t, r}, {u, s, r}, {t, s, r},
    };
    for (const auto& tri : triangles)
        spec.constraints.push_back(CycleObstructionsConstraint{{r, tri.p, tri.q}, {tri.at}});
    spec.constraints.push_back(CycleObstructionsConstraint{{r, s, x, t}, {r, s, t}});
    spec.constraints.push_back(NoHCycleConstraint{r, 3});
    return spec;
}

namespace {

enum class RuleKind { Exact, ObstructedAt, SomeObstruction };

struct CycleRule {
    std::vector<int> edges;  // edges[j] joins cycle[j] and cycle[j + 1]
    RuleKind kind = RuleKind::Exact;
    std::vector<bool> expected;  // Exact: obstruction flag per position
    int position = 0;            // ObstructedAt
    std::size_t source = 0;      // index into spec.constraints
};

struct TripleRule {
    std::array<int, 3> edges;
};

class Searcher {
public:
    explicit Searcher(const SearchSpec& spec)
        : spec_(spec), n_(spec.n), palette_(spec.colors), rng_(make_rng(spec.seed)) {
        edge_id_.assign(static_cast<std::size_t>(n_) * n_, -1);
        incident_.assign(n_, {});
        for (Vertex a = 0; a < n_; ++a)
            for (Vertex b = a + 1; b < n_; ++b) {
                const int id = static_cast<int>(ends_.size());
                ends_.push_back({a, b});
                edge_id_[a * n_ + b] = edge_id_[b * n_ + a] = id;
                incident_[a].push_back(id);
                incident_[b].push_back(id);
            }
        m_ = static_cast<int>(ends_.size());
        color_.assign(m_, kNoColor);
        bit_.assign(static_cast<std::size_t>(palette_) * palette_, -1);
        cycles_at_.assign(m_, {});
        triples_at_.assign(m_, {});
        targets_.assign(n_, {});
        flips_.resize(m_);
        for (auto& f : flips_) f = spec.seed == 0 ? 0 : rng_();
        compile();
    }

    SearchResult run() {
        SearchResult result;
        if (extend(0)) result.instance = build();
        result.stats = stats_;
        return result;
    }

private:
    void compile() {
        for (Vertex x = 0; x < n_; ++x) {
            const auto& inc = incident_[x];
            for (std::size_t i = 0; i < inc.size(); ++i)
                for (std::size_t j = i + 1; j < inc.size(); ++j)
                    for (std::size_t k = j + 1; k < inc.size(); ++k) {
                        TripleRule rule{{inc[i], inc[j], inc[k]}};
                        triples_at_[std::max({inc[i], inc[j], inc[k]})].push_back(rule);
                    }
        }
        for (std::size_t ci = 0; ci < spec_.constraints.size(); ++ci) {
            const auto& c = spec_.constraints[ci];
            if (const auto* pc = std::get_if<PartCountConstraint>(&c)) {
                targets_[pc->vertex].push_back(pc->k);
            } else if (const auto* co = std::get_if<CycleObstructionsConstraint>(&c)) {
                auto rule = rule_for(co->cycle, RuleKind::Exact, ci);
                for (Vertex y : co->cycle)
                    rule.expected.push_back(std::find(co->obstructions.begin(), co->obstructions.end(), y) !=
                                            co->obstructions.end());
                add(rule);
            } else if (const auto* oa = std::get_if<CycleObstructedAtConstraint>(&c)) {
                auto rule = rule_for(oa->cycle, RuleKind::ObstructedAt, ci);
                rule.position =
                    static_cast<int>(std::find(oa->cycle.begin(), oa->cycle.end(), oa->vertex) - oa->cycle.begin());
                add(rule);
            } else if (const auto* nh = std::get_if<NoHCycleConstraint>(&c)) {
                std::vector<Vertex> cycle{nh->vertex};
                std::vector<bool> used(n_, false);
                used[nh->vertex] = true;
                enumerate_through(cycle, used, nh->length, ci);
            }
        }
    }

    void enumerate_through(std::vector<Vertex>& cycle, std::vector<bool>& used, int length, std::size_t source) {
        if (static_cast<int>(cycle.size()) == length) {
            if (cycle[1] < cycle.back()) add(rule_for(cycle, RuleKind::SomeObstruction, source));
            return;
        }
        for (Vertex y = 0; y < n_; ++y) {
            if (used[y]) continue;
            used[y] = true;
            cycle.push_back(y);
            enumerate_through(cycle, used, length, source);
            cycle.pop_back();
            used[y] = false;
        }
    }

    CycleRule rule_for(const std::vector<Vertex>& cycle, RuleKind kind, std::size_t source) const {
        CycleRule rule;
        rule.kind = kind;
        rule.source = source;
        for (std::size_t j = 0; j < cycle.size(); ++j)
            rule.edges.push_back(edge_id_[cycle[j] * n_ + cycle[(j + 1) % cycle.size()]]);
        return rule;
    }

    void add(CycleRule rule) {
        const int last = *std::max_element(rule.edges.begin(), rule.edges.end());
        cycles_at_[last].push_back(std::move(rule));
    }

    std::int8_t& bit(Color a, Color b) { return bit_[a * palette_ + b]; }
    bool adjacent_colors(int e, int f) const { return bit_[color_[e] * palette_ + color_[f]] == 1; }

    void set_bit(Color a, Color b, std::int8_t value) {
        bit(a, b) = value;
        bit(b, a) = value;
    }

    bool extend(int i) {
        if (i == m_) return true;
        const auto [u, v] = ends_[i];
        const int limit = std::min(palette_ - 1, max_used_ + 1);
        for (Color c = 0; c <= limit; ++c) {
            color_[i] = c;
            const int saved_max = max_used_;
            max_used_ = std::max(max_used_, c);

            std::vector<Edge> unknown;
            for (Vertex end : {u, v})
                for (int f : incident_[end]) {
                    if (f == i || color_[f] == kNoColor) continue;
                    const Edge pair = make_edge(c, color_[f]);
                    if (bit(pair.u, pair.v) == -1 &&
                        std::find(unknown.begin(), unknown.end(), pair) == unknown.end())
                        unknown.push_back(pair);
                }

            const std::uint64_t combos = 1ULL << unknown.size();
            const std::uint64_t all = combos - 1;
            for (std::uint64_t t = 0; t < combos; ++t) {
                // Default order tries adjacency (distinct parts) first.
                const std::uint64_t mask = ((~t) ^ flips_[i]) & all;
                if (++stats_.nodes > spec_.budget) {
                    stats_.budget_exceeded = true;
                    break;
                }
                for (std::size_t b = 0; b < unknown.size(); ++b)
                    set_bit(unknown[b].u, unknown[b].v, static_cast<std::int8_t>((mask >> b) & 1U));
                stats_.max_depth = std::max(stats_.max_depth, i + 1);
                if (consistent(i) && extend(i + 1)) return true;
                for (const auto& pair : unknown) set_bit(pair.u, pair.v, -1);
                if (stats_.budget_exceeded) break;
            }
            max_used_ = saved_max;
            color_[i] = kNoColor;
            if (stats_.budget_exceeded) return false;
        }
        return false;
    }

    bool consistent(int i) {
        for (const auto& t : triples_at_[i]) {
            const int adjacent_pairs = adjacent_colors(t.edges[0], t.edges[1]) +
                                       adjacent_colors(t.edges[1], t.edges[2]) +
                                       adjacent_colors(t.edges[0], t.edges[2]);
            // Exactly one adjacent pair means "same part" is not transitive.
            if (adjacent_pairs == 1) return conflict(i, "G_x not complete multipartite");
        }
        for (Vertex end : {ends_[i].u, ends_[i].v}) {
            if (targets_[end].empty()) continue;
            int parts = 0, open = 0;
            const auto& inc = incident_[end];
            for (std::size_t j = 0; j < inc.size(); ++j) {
                if (color_[inc[j]] == kNoColor) {
                    ++open;
                    continue;
                }
                bool fresh = true;
                for (std::size_t p = 0; p < j && fresh; ++p)
                    if (color_[inc[p]] != kNoColor && !adjacent_colors(inc[j], inc[p])) fresh = false;
                parts += fresh ? 1 : 0;
            }
            for (int k : targets_[end])
                if (parts > k || parts + open < k)
                    return conflict(i, "part count at vertex " + std::to_string(end) + " cannot reach " +
                                           std::to_string(k));
        }
        for (const auto& rule : cycles_at_[i]) {
            const std::size_t len = rule.edges.size();
            bool any = false, ok = true;
            for (std::size_t j = 0; j < len && ok; ++j) {
                const bool obstructed = !adjacent_colors(rule.edges[(j + len - 1) % len], rule.edges[j]);
                any = any || obstructed;
                if (rule.kind == RuleKind::Exact && obstructed != rule.expected[j]) ok = false;
                if (rule.kind == RuleKind::ObstructedAt && static_cast<int>(j) == rule.position && !obstructed)
                    ok = false;
            }
            if (rule.kind == RuleKind::SomeObstruction && !any) ok = false;
            if (!ok) return conflict(i, describe(spec_.constraints[rule.source], spec_.labels));
        }
        return true;
    }

    bool conflict(int i, const std::string& what) {
        if (i + 1 >= conflict_depth_) {
            conflict_depth_ = i + 1;
            stats_.deepest_conflict = "edge " + std::to_string(i + 1) + "/" + std::to_string(m_) + ": " + what;
        }
        return false;
    }

    HColoredGraph build() const {
        const int used = max_used_ + 1;
        std::vector<Edge> pattern_edges;
        for (Color a = 0; a < used; ++a)
            for (Color b = a; b < used; ++b)
                if (bit_[a * palette_ + b] == 1) pattern_edges.push_back({a, b});
        return HColoredGraph::complete(n_, PatternGraph(used, std::move(pattern_edges)), color_);
    }

    const SearchSpec& spec_;
    int n_;
    int m_ = 0;
    int palette_;
    Rng rng_;
    std::vector<Edge> ends_;
    std::vector<int> edge_id_;
    std::vector<std::vector<int>> incident_;
    std::vector<Color> color_;
    std::vector<std::int8_t> bit_;
    std::vector<std::vector<CycleRule>> cycles_at_;
    std::vector<std::vector<TripleRule>> triples_at_;
    std::vector<std::vector<int>> targets_;
    std::vector<std::uint64_t> flips_;
    int max_used_ = -1;
    int conflict_depth_ = 0;
    SearchStats stats_;
};

}  // namespace

SearchResult search_tightness(const SearchSpec& spec) {
    if (auto problems = validate_spec(spec); !problems.empty()) throw PreconditionError("invalid spec: " + problems.front());
    return Searcher(spec).run();
}

std::vector<ConstraintCheck> check_constraints(const HColoredGraph& inst, const SearchSpec& spec) {
    std::vector<ConstraintCheck> out;
    if (inst.order() != spec.n || !inst.graph().is_complete()) {
        out.push_back({"instance is K_" + std::to_string(spec.n), false});
        return out;
    }
    bool multipartite = true;
    for (Vertex x = 0; x < inst.order(); ++x)
        if (std::holds_alternative<NotMultipartite>(local_partition(inst, x))) multipartite = false;
    out.push_back({"every G_x is complete multipartite", multipartite});

    auto obstruction_vertices = [&](const std::vector<Vertex>& cycle) {
        std::vector<Vertex> vs;
        for (int pos : obstructions_of(inst, Walk{cycle, true})) vs.push_back(cycle[pos]);
        std::sort(vs.begin(), vs.end());
        return vs;
    };

    for (const auto& c : spec.constraints) {
        const bool holds = std::visit(
            overloaded{
                [&](const PartCountConstraint& pc) {
                    const auto lp = local_partition(inst, pc.vertex);
                    const auto* parts = std::get_if<LocalPartition>(&lp);
                    return parts && parts->k() == pc.k;
                },
                [&](const CycleObstructionsConstraint& co) {
                    auto expected = co.obstructions;
                    std::sort(expected.begin(), expected.end());
                    return obstruction_vertices(co.cycle) == expected;
                },
                [&](const CycleObstructedAtConstraint& oa) {
                    const auto found = obstruction_vertices(oa.cycle);
                    return std::binary_search(found.begin(), found.end(), oa.vertex);
                },
                [&](const NoHCycleConstraint& nh) { return !find_h_cycle_through(inst, nh.vertex, nh.length); },
            },
            c);
        out.push_back({describe(c, spec.labels), holds});
    }
    return out;
}

}  // namespace hcolor
