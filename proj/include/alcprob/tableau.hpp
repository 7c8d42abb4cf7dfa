#ifndef ALCPROB_TABLEAU_HPP
#define ALCPROB_TABLEAU_HPP

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "alcprob/formula.hpp"
#include "alcprob/kb.hpp"

namespace alcprob {

enum class ExplainMode { Minas, Pinpoint };

using NodeId = int;

// Which axioms justify a label element. A pure conjunction of variables in
// MinA mode; an arbitrary monotone formula in pinpointing mode.
struct TraceLabel {
    MonotoneFormula formula;
};

// A contradiction found in a node label: an atomic term together with its
// negation, or Bottom. The formula combines the traces of both sides.
struct Clash {
    NodeId node;
    Concept term; // the atomic term, or Bottom
    MonotoneFormula formula;
};

// Labeled completion graph. Node 0.. are named individuals in order of first
// occurrence, followed by fresh existential successors.
struct Tableau {
    struct Node {
        std::string name;
        std::optional<NodeId> parent; // creator, for blocking; absent for named nodes
    };

    std::vector<Node> nodes;
    // Per node: term (in NNF) -> trace.
    std::vector<std::map<Concept, TraceLabel>> labels;
    // Per ordered node pair: role -> trace.
    std::map<std::pair<NodeId, NodeId>, std::map<std::string, TraceLabel>> edges;
    std::vector<Clash> clashes;

    std::optional<NodeId> node_named(const std::string& name) const;
};

struct SaturateOptions {
    // Global cap on rule firings across all branches of one saturation.
    std::size_t budget = 1'000'000;
    // When set, receives the number of rule firings performed.
    std::size_t* firings = nullptr;
    // When set, only these axiom indices take part (sub-KB reasoning).
    std::optional<std::set<int>> active_axioms;
};

// Initial tableau: one node per named individual of the ABox or the extra
// assertions; ABox elements trace to their axiom variable, extra assertions
// trace to TrueF.
Tableau init_tableau(const KnowledgeBase& kb,
                     const std::vector<std::pair<std::string, Concept>>& extra);

// Applies the expansion rules to a fixpoint, splitting on disjunctions.
// Returns every saturated descendant, in left-to-right disjunct order, with
// clashes recorded. Throws BudgetExceededError when the firing budget runs
// out.
std::vector<Tableau> saturate(const Tableau& t, const KnowledgeBase& kb, ExplainMode mode,
                              const SaturateOptions& opts = {});

// Streaming variant: saturated branches are handed to the visitor one at a
// time instead of being collected. Returning false from the visitor aborts
// the search; the overall result is false iff that happened.
bool saturate_each(const Tableau& t, const KnowledgeBase& kb, ExplainMode mode,
                   const SaturateOptions& opts,
                   const std::function<bool(const Tableau&)>& visit);

// Refutation entailment over the KB with every (active) axiom present,
// annotations ignored.
bool is_entailed(const KnowledgeBase& kb, const Query& q, const SaturateOptions& opts = {});

} // namespace alcprob

#endif
