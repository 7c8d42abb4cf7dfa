#include "alcprob/pinpoint.hpp"

#include <algorithm>
#include <functional>

#include "alcprob/errors.hpp"

namespace alcprob {

namespace {

bool entails_subset(const KnowledgeBase& kb, const Query& q, const std::set<int>& active,
                    const PinpointOptions& opts) {
    SaturateOptions sat;
    sat.budget = opts.budget;
    sat.firings = opts.firings;
    sat.active_axioms = active;
    return is_entailed(kb, q, sat);
}

// Keeps only the inclusion-minimal sets, preserving first occurrences.
std::vector<std::set<int>> absorb(std::vector<std::set<int>> sets) {
    std::vector<std::set<int>> out;
    for (const auto& s : sets) {
        bool dominated = false;
        for (const auto& kept : out)
            if (std::includes(s.begin(), s.end(), kept.begin(), kept.end())) {
                dominated = true;
                break;
            }
        if (dominated) continue;
        std::erase_if(out, [&s](const std::set<int>& kept) {
            return std::includes(kept.begin(), kept.end(), s.begin(), s.end());
        });
        out.push_back(s);
    }
    return out;
}

void sort_minas(std::vector<MinA>& minas) {
    std::sort(minas.begin(), minas.end(), [](const MinA& a, const MinA& b) {
        if (a.axiom_indices.size() != b.axiom_indices.size())
            return a.axiom_indices.size() < b.axiom_indices.size();
        return std::lexicographical_compare(a.axiom_indices.begin(), a.axiom_indices.end(),
                                            b.axiom_indices.begin(), b.axiom_indices.end());
    });
}

// Runs the saturation in streaming mode, folding each branch through the
// visitor. Returns false when a clash-free branch was met: the query is not
// entailed and the fold was abandoned.
bool fold_branches(const KnowledgeBase& kb, const Query& q, ExplainMode mode,
                   const PinpointOptions& opts,
                   const std::function<void(const Tableau&)>& visit) {
    NegatedQuery negated = negated_query_assertions(q, kb);
    Tableau start = init_tableau(kb, negated.assertions);
    SaturateOptions sat;
    sat.budget = opts.budget;
    sat.firings = opts.firings;
    return saturate_each(start, kb, mode, sat, [&](const Tableau& branch) {
        if (branch.clashes.empty()) return false;
        visit(branch);
        return true;
    });
}

} // namespace

std::vector<MinA> all_minas(const KnowledgeBase& kb, const Query& q,
                            const PinpointOptions& opts) {
    // Candidates are unions picking one clash per branch; folding with
    // absorption keeps the minimal unions, which include every MinA.
    std::vector<std::set<int>> partial = {{}};
    bool entailed = fold_branches(kb, q, ExplainMode::Minas, opts, [&](const Tableau& branch) {
        std::vector<std::set<int>> clash_sets;
        for (const Clash& clash : branch.clashes) clash_sets.push_back(clash.formula.variables());
        clash_sets = absorb(std::move(clash_sets));
        std::vector<std::set<int>> next;
        for (const auto& p : partial)
            for (const auto& c : clash_sets) {
                std::set<int> u = p;
                u.insert(c.begin(), c.end());
                next.push_back(std::move(u));
            }
        partial = absorb(std::move(next));
    });
    // A clash-free branch is a countermodel: nothing to explain.
    if (!entailed) return {};

    std::vector<MinA> minas;
    for (const auto& candidate : partial) {
        MinA m = minimize(candidate, kb, q, opts);
        if (std::find(minas.begin(), minas.end(), m) == minas.end()) minas.push_back(std::move(m));
    }
    // Minimal entailing sets cannot strictly contain one another, so
    // deduplication is all that is left.
    sort_minas(minas);
    return minas;
}

MinA minimize(const std::set<int>& candidate, const KnowledgeBase& kb, const Query& q,
              const PinpointOptions& opts) {
    if (!entails_subset(kb, q, candidate, opts))
        throw PreconditionError("candidate axiom set does not entail the query");
    std::set<int> current = candidate;
    for (int index : std::vector<int>(candidate.begin(), candidate.end())) {
        std::set<int> without = current;
        without.erase(index);
        if (entails_subset(kb, q, without, opts)) current = std::move(without);
    }
    return MinA{std::move(current)};
}

MonotoneFormula pinpointing_formula(const KnowledgeBase& kb, const Query& q,
                                    const PinpointOptions& opts) {
    std::vector<MonotoneFormula> conjuncts;
    bool entailed = fold_branches(kb, q, ExplainMode::Pinpoint, opts, [&](const Tableau& branch) {
        std::vector<MonotoneFormula> disjuncts;
        for (const Clash& clash : branch.clashes) disjuncts.push_back(clash.formula);
        conjuncts.push_back(MonotoneFormula::or_of(std::move(disjuncts)));
    });
    if (!entailed) return MonotoneFormula::false_f();
    return MonotoneFormula::and_of(std::move(conjuncts));
}

namespace {

std::vector<std::set<int>> dnf_of(const MonotoneFormula& phi, const PinpointOptions& opts) {
    switch (phi.kind()) {
    case FormulaKind::True:
        return {{}};
    case FormulaKind::False:
        return {};
    case FormulaKind::Var:
        return {{phi.var_index()}};
    case FormulaKind::Or: {
        std::vector<std::set<int>> out;
        for (const auto& p : phi.parts()) {
            auto sub = dnf_of(p, opts);
            out.insert(out.end(), sub.begin(), sub.end());
            out = absorb(std::move(out));
        }
        return out;
    }
    case FormulaKind::And: {
        std::vector<std::set<int>> out = {{}};
        for (const auto& p : phi.parts()) {
            auto sub = dnf_of(p, opts);
            std::vector<std::set<int>> next;
            for (const auto& a : out)
                for (const auto& b : sub) {
                    std::set<int> u = a;
                    u.insert(b.begin(), b.end());
                    next.push_back(std::move(u));
                    if (next.size() > opts.dnf_cap)
                        throw CapExceededError("DNF expansion exceeds the disjunct cap",
                                               next.size(), opts.dnf_cap);
                }
            out = absorb(std::move(next));
        }
        return out;
    }
    }
    throw InternalError("unreachable formula kind");
}

} // namespace

std::vector<MinA> formula_to_minas(const MonotoneFormula& phi, const PinpointOptions& opts) {
    std::vector<MinA> minas;
    for (auto& s : dnf_of(phi, opts)) minas.push_back(MinA{std::move(s)});
    sort_minas(minas);
    return minas;
}

MonotoneFormula minas_to_dnf(const std::vector<MinA>& minas, const KnowledgeBase&) {
    std::vector<MonotoneFormula> disjuncts;
    for (const MinA& m : minas) {
        std::vector<MonotoneFormula> vars;
        for (int i : m.axiom_indices) vars.push_back(MonotoneFormula::var(i));
        disjuncts.push_back(MonotoneFormula::and_of(std::move(vars)));
    }
    return MonotoneFormula::or_of(std::move(disjuncts));
}

} // namespace alcprob
