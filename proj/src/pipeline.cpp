#include "alcprob/pipeline.hpp"

#include <algorithm>

#include "alcprob/errors.hpp"

namespace alcprob {

namespace {

VarOrder resolve_order(const KnowledgeBase& kb, const PipelineOptions& opts) {
    if (!opts.var_order) return VarOrder::ascending(kb.size());
    std::vector<int> seq = *opts.var_order;
    std::vector<int> sorted = seq;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> expected(static_cast<std::size_t>(kb.size()));
    for (int i = 0; i < kb.size(); ++i) expected[static_cast<std::size_t>(i)] = i + 1;
    if (sorted != expected)
        throw PreconditionError("variable order must be a permutation of the KB axiom indices");
    return VarOrder::from_sequence(seq);
}

} // namespace

PipelineResult run_query(const KnowledgeBase& kb, const Query& q, const PipelineOptions& opts) {
    PipelineResult result;
    PinpointOptions pin;
    pin.budget = opts.budget;
    pin.dnf_cap = opts.dnf_cap;
    pin.firings = &result.rule_firings;

    if (opts.mode == ExplainMode::Minas) {
        result.minas = all_minas(kb, q, pin);
        result.formula = minas_to_dnf(result.minas, kb);
    } else {
        result.formula = pinpointing_formula(kb, q, pin);
        result.minas = formula_to_minas(result.formula, pin);
    }
    result.entailed = !result.minas.empty();

    Bdd diagram = build(result.formula, resolve_order(kb, opts));
    for (int index : kb.certain_indices()) diagram = condition(diagram, index, true);

    std::map<int, double> probs;
    for (int index : kb.probabilistic_indices()) probs[index] = *kb.at(index).probability;
    result.probability = probability(diagram, probs);
    result.bdd = std::move(diagram);
    return result;
}

} // namespace alcprob
