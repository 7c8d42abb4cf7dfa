#include "alcprob/oracle.hpp"

#include "alcprob/errors.hpp"
#include "alcprob/tableau.hpp"

namespace alcprob {

namespace {

bool entails_subset(const KnowledgeBase& kb, const Query& q, std::set<int> active,
                    std::size_t budget) {
    SaturateOptions opts;
    opts.budget = budget;
    opts.active_axioms = std::move(active);
    return is_entailed(kb, q, opts);
}

} // namespace

std::vector<World> enumerate_worlds(const KnowledgeBase& kb, const OracleOptions& opts) {
    const auto& prob_indices = kb.probabilistic_indices();
    const auto n = prob_indices.size();
    if (n > static_cast<std::size_t>(opts.max_probabilistic))
        throw CapExceededError("world enumeration needs " + std::to_string(n) +
                                   " probabilistic axioms but the cap is " +
                                   std::to_string(opts.max_probabilistic),
                               n, static_cast<std::size_t>(opts.max_probabilistic));
    std::vector<World> worlds;
    worlds.reserve(std::size_t{1} << n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        World w;
        for (std::size_t bit = 0; bit < n; ++bit)
            w.selection.decisions[prob_indices[bit]] = (mask >> bit) & 1;
        w.axioms = world_of(w.selection, kb);
        w.prob = choice_probability(w.selection, kb);
        worlds.push_back(std::move(w));
    }
    return worlds;
}

double exact_probability(const KnowledgeBase& kb, const Query& q, const OracleOptions& opts) {
    double total = 0.0;
    for (const World& w : enumerate_worlds(kb, opts)) {
        if (entails_subset(kb, q, world_indices(w.selection, kb), opts.budget)) total += w.prob;
    }
    return total;
}

bool check_pinpointing(const KnowledgeBase& kb, const Query& q, const MonotoneFormula& phi,
                       const OracleOptions& opts) {
    const int n = kb.size();
    if (n > opts.max_valuation_axioms)
        throw CapExceededError("pinpointing check needs " + std::to_string(n) +
                                   " axioms but the cap is " +
                                   std::to_string(opts.max_valuation_axioms),
                               static_cast<std::size_t>(n),
                               static_cast<std::size_t>(opts.max_valuation_axioms));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::set<int> valuation;
        for (int bit = 0; bit < n; ++bit)
            if ((mask >> bit) & 1) valuation.insert(bit + 1);
        bool entailed = entails_subset(kb, q, valuation, opts.budget);
        if (entailed != phi.eval(valuation)) return false;
    }
    return true;
}

} // namespace alcprob
