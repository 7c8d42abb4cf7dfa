#ifndef ALCPROB_ORACLE_HPP
#define ALCPROB_ORACLE_HPP

#include <vector>

#include "alcprob/formula.hpp"
#include "alcprob/kb.hpp"

namespace alcprob {

struct OracleOptions {
    // Maximum number of probabilistic axioms for world enumeration.
    int max_probabilistic = 20;
    // Maximum total axiom count for exhaustive valuation checking.
    int max_valuation_axioms = 16;
    std::size_t budget = 1'000'000;
};

struct World {
    CompositeChoice selection;
    std::vector<Axiom> axioms;
    double prob = 0.0;
};

// All 2^n total selections in binary counting order: the first probabilistic
// index is the least significant bit. Throws CapExceededError beyond the cap.
std::vector<World> enumerate_worlds(const KnowledgeBase& kb, const OracleOptions& opts = {});

// P(Q) by direct marginalization: sum of world probabilities over the worlds
// entailing the query.
double exact_probability(const KnowledgeBase& kb, const Query& q,
                         const OracleOptions& opts = {});

// True iff for every valuation over all axiom variables, sub-KB entailment
// agrees with the formula.
bool check_pinpointing(const KnowledgeBase& kb, const Query& q, const MonotoneFormula& phi,
                       const OracleOptions& opts = {});

} // namespace alcprob

#endif
