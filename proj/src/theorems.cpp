#include "hcolor/theorems.hpp"

#include <string>

#include "hcolor/errors.hpp"

namespace hcolor {

std::string to_string(Statement s) {
    switch (s) {
        case Statement::T3cycle: return "T3cycle";
        case Statement::T4small: return "T4small";
        case Statement::T4large: return "T4large";
        case Statement::Cor4: return "Cor4";
    }
    return "?";
}

std::optional<Statement> parse_statement(std::string_view name) {
    for (auto s : {Statement::T3cycle, Statement::T4small, Statement::T4large, Statement::Cor4})
        if (to_string(s) == name) return s;
    return std::nullopt;
}

int conclusion_length(Statement s) { return s == Statement::T3cycle ? 3 : 4; }

bool in_range(Statement s, int n) {
    switch (s) {
        case Statement::T3cycle: return n >= 3;
        case Statement::T4small: return n >= 4 && n < 9;
        case Statement::T4large: return n >= 9;
        case Statement::Cor4: return n >= 4;
    }
    return false;
}

bool requires_c3_hypothesis(Statement s) { return s == Statement::T4large || s == Statement::Cor4; }

namespace {

void require_complete(const HColoredGraph& inst, int min_order) {
    if (!inst.graph().is_complete()) throw DomainError("the theorem checks need a complete graph");
    if (inst.order() < min_order)
        throw DomainError("order " + std::to_string(inst.order()) + " below " + std::to_string(min_order));
}

CycleCheck cycle_check(const HColoredGraph& inst, int length, int count) {
    CycleCheck check;
    auto found = cycles_with_obstruction_count(inst, length, count);
    check.total = found.size();
    check.holds = found.empty();
    if (found.size() > kMaxListed) found.resize(kMaxListed);
    check.offending = std::move(found);
    return check;
}

}  // namespace

DegreeCheck check_degree_hypothesis(const HColoredGraph& inst) {
    require_complete(inst, 3);
    const int n = inst.order();
    DegreeCheck check;
    check.holds = true;
    check.k.reserve(n);
    for (Vertex x = 0; x < n; ++x) {
        const int k = k_x(inst, x);
        check.k.push_back(k);
        if (2 * k < n + 1) check.holds = false;
    }
    return check;
}

CycleCheck check_no_c4_exactly3(const HColoredGraph& inst) {
    require_complete(inst, 3);
    return cycle_check(inst, 4, 3);
}

CycleCheck check_no_c3_exactly2(const HColoredGraph& inst) {
    require_complete(inst, 3);
    return cycle_check(inst, 3, 2);
}

bool hypotheses_hold(const HColoredGraph& inst, Statement which) {
    const int n = inst.order();
    if (!in_range(which, n)) return false;
    require_complete(inst, 3);
    for (Vertex x = 0; x < n; ++x) {
        const auto partition = local_partition(inst, x);
        const auto* lp = std::get_if<LocalPartition>(&partition);
        if (!lp || 2 * lp->k() < n + 1) return false;
    }
    if (requires_c3_hypothesis(which) && !cycles_with_obstruction_count(inst, 3, 2).empty()) return false;
    return cycles_with_obstruction_count(inst, 4, 3).empty();
}

TheoremVerdict verify_theorem(const HColoredGraph& inst, Statement which) {
    const int n = inst.order();
    if (!in_range(which, n))
        throw DomainError("order " + std::to_string(n) + " is outside the range of " + to_string(which));
    require_complete(inst, 3);

    TheoremVerdict verdict;
    verdict.statement = which;
    verdict.n = n;

    try {
        verdict.degree = check_degree_hypothesis(inst);
    } catch (const NotMultipartiteError& e) {
        verdict.not_multipartite = e.detail();
    }
    verdict.no_c4_exactly3 = check_no_c4_exactly3(inst);
    if (requires_c3_hypothesis(which)) verdict.no_c3_exactly2 = check_no_c3_exactly2(inst);

    verdict.hypotheses_hold = verdict.degree && verdict.degree->holds && verdict.no_c4_exactly3.holds &&
                              (!verdict.no_c3_exactly2 || verdict.no_c3_exactly2->holds);

    const int length = conclusion_length(which);
    verdict.conclusion_holds = true;
    verdict.cycles.reserve(n);
    for (Vertex v = 0; v < n; ++v) {
        auto cycle = find_h_cycle_through(inst, v, length);
        if (!cycle) {
            verdict.conclusion_holds = false;
            if (!verdict.counterexample) verdict.counterexample = Counterexample{v, length};
            if (verdict.missing.size() < kMaxListed) verdict.missing.push_back(v);
        }
        verdict.cycles.push_back(std::move(cycle));
    }
    return verdict;
}

}  // namespace hcolor
