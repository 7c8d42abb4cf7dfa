#ifndef ALCPROB_PINPOINT_HPP
#define ALCPROB_PINPOINT_HPP

#include <set>
#include <vector>

#include "alcprob/formula.hpp"
#include "alcprob/kb.hpp"
#include "alcprob/tableau.hpp"

namespace alcprob {

// Minimal axiom set justifying an entailment: the induced sub-KB entails the
// query and no proper subset does.
struct MinA {
    std::set<int> axiom_indices;

    friend bool operator==(const MinA& a, const MinA& b) {
        return a.axiom_indices == b.axiom_indices;
    }
};

struct PinpointOptions {
    std::size_t budget = 1'000'000;
    std::size_t* firings = nullptr;
    // Cap on the number of DNF disjuncts produced by formula_to_minas.
    std::size_t dnf_cap = 100'000;
};

// All-MinAs(Q, K): every minimal entailing axiom set, ordered by
// (cardinality, lexicographic index order).
std::vector<MinA> all_minas(const KnowledgeBase& kb, const Query& q,
                            const PinpointOptions& opts = {});

// Shrinks an entailing candidate to a minimal one: indices are visited in
// ascending order and dropped whenever entailment survives. Throws
// PreconditionError when the candidate does not entail the query.
MinA minimize(const std::set<int>& candidate, const KnowledgeBase& kb, const Query& q,
              const PinpointOptions& opts = {});

// Monotone formula over all axiom variables whose satisfying valuations are
// exactly the entailing sub-KBs; FalseF when the query is not entailed.
MonotoneFormula pinpointing_formula(const KnowledgeBase& kb, const Query& q,
                                    const PinpointOptions& opts = {});

// DNF expansion with absorption: disjuncts that contain another disjunct are
// dropped, and the surviving variable sets are the MinAs. Throws
// CapExceededError when the expansion exceeds opts.dnf_cap disjuncts.
std::vector<MinA> formula_to_minas(const MonotoneFormula& phi,
                                   const PinpointOptions& opts = {});

// f_K: disjunction over MinAs of the conjunction of their axiom variables.
MonotoneFormula minas_to_dnf(const std::vector<MinA>& minas, const KnowledgeBase& kb);

} // namespace alcprob

#endif
