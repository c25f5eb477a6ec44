#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hcolor/local_structure.hpp"
#include "hcolor/model.hpp"
#include "hcolor/walks.hpp"

namespace hcolor {

/// The four statements about H-colored complete graphs checked by the suite.
///   T3cycle  every vertex on an H-cycle of length 3 (n >= 3)
///   T4small  every vertex on an H-cycle of length 4 (4 <= n < 9)
///   T4large  same conclusion, extra C3 hypothesis (n >= 9)
///   Cor4     union of the two length-4 statements (n >= 4)
enum class Statement { T3cycle, T4small, T4large, Cor4 };

std::string to_string(Statement s);
std::optional<Statement> parse_statement(std::string_view name);
int conclusion_length(Statement s);
bool in_range(Statement s, int n);
bool requires_c3_hypothesis(Statement s);

/// Offending lists in verdicts are truncated to this many entries.
inline constexpr std::size_t kMaxListed = 100;

struct DegreeCheck {
    bool holds = false;
    std::vector<int> k;  // k_x per vertex

    friend bool operator==(const DegreeCheck&, const DegreeCheck&) = default;
};

struct CycleCheck {
    bool holds = true;
    std::size_t total = 0;                // offending cycles found
    std::vector<CycleReport> offending;   // first kMaxListed of them

    friend bool operator==(const CycleCheck&, const CycleCheck&) = default;
};

/// 2 k_x >= n + 1 at every vertex. Throws DomainError unless G is complete
/// with n >= 3, and NotMultipartiteError naming the first failing vertex.
DegreeCheck check_degree_hypothesis(const HColoredGraph& inst);

CycleCheck check_no_c4_exactly3(const HColoredGraph& inst);
CycleCheck check_no_c3_exactly2(const HColoredGraph& inst);

struct Counterexample {
    Vertex vertex = 0;
    int length = 0;

    friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct TheoremVerdict {
    Statement statement = Statement::T3cycle;
    int n = 0;

    bool hypotheses_hold = false;
    std::optional<NotMultipartite> not_multipartite;  // standing assumption failed
    std::optional<DegreeCheck> degree;                // absent when not multipartite
    std::optional<CycleCheck> no_c3_exactly2;         // only for T4large and Cor4
    CycleCheck no_c4_exactly3;

    bool conclusion_holds = false;
    std::vector<std::optional<Walk>> cycles;  // per vertex
    std::vector<Vertex> missing;              // vertices without a cycle, capped
    std::optional<Counterexample> counterexample;

    /// Hypotheses hold but the conclusion fails.
    bool violation() const { return hypotheses_hold && !conclusion_holds; }

    friend bool operator==(const TheoremVerdict&, const TheoremVerdict&) = default;
};

/// Cheap early-exit form of the hypothesis evaluation in verify_theorem:
/// every G_x complete multipartite, the degree bound and the cycle conditions.
bool hypotheses_hold(const HColoredGraph& inst, Statement which);

/// Evaluates the hypotheses of `which` and searches an H-cycle of the
/// conclusion length through every vertex. Throws DomainError when n is out
/// of range for the statement or G is not complete.
TheoremVerdict verify_theorem(const HColoredGraph& inst, Statement which);

}  // namespace hcolor
