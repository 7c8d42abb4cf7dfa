#ifndef ALCPROB_PIPELINE_HPP
#define ALCPROB_PIPELINE_HPP

#include <optional>
#include <vector>

#include "alcprob/bdd.hpp"
#include "alcprob/kb.hpp"
#include "alcprob/pinpoint.hpp"

namespace alcprob {

// End-to-end inference: explanations per mode, knowledge compilation to a
// BDD with certain-axiom variables conditioned to true, then the linear
// probability dynamic program.

struct PipelineOptions {
    ExplainMode mode = ExplainMode::Pinpoint;
    // Permutation of 1..n overriding the default ascending variable order.
    std::optional<std::vector<int>> var_order;
    std::size_t budget = 1'000'000;
    std::size_t dnf_cap = 100'000;
};

struct PipelineResult {
    bool entailed = false;
    double probability = 0.0;
    std::vector<MinA> minas;
    MonotoneFormula formula;
    Bdd bdd; // after conditioning; what the probability was computed from
    std::size_t rule_firings = 0;
};

PipelineResult run_query(const KnowledgeBase& kb, const Query& q,
                         const PipelineOptions& opts = {});

} // namespace alcprob

#endif
