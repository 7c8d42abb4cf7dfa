#include "doctest.h"

#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <vector>

#include "alcprob/errors.hpp"
#include "alcprob/oracle.hpp"
#include "alcprob/pipeline.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace alcprob;
using namespace alcprob::test;

namespace {

// Each criterion accumulates its own verdict and prints one summary line so
// the acceptance run reads as a checklist.
#define ACC_CHECK(cond)                                                                            \
    do {                                                                                           \
        bool acc_value = (cond);                                                                   \
        CHECK(acc_value);                                                                          \
        ok &= acc_value;                                                                           \
    } while (0)

void report(int number, const char* label, bool ok) {
    std::printf("criterion %d (%s): %s\n", number, label, ok ? "PASS" : "FAIL");
    std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool close(double a, double b) { return std::abs(a - b) <= 1e-9; }

MonotoneFormula published_formula() {
    auto V = MonotoneFormula::var;
    return MonotoneFormula::and_of(
        {MonotoneFormula::or_of({MonotoneFormula::and_of({V(2), V(4)}),
                                 MonotoneFormula::and_of({V(3), V(5)})}),
         V(6), V(1)});
}

std::vector<int> random_order(std::mt19937& rng, int n) {
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i + 1;
    std::shuffle(order.begin(), order.end(), rng);
    return order;
}

struct CorpusEntry {
    KnowledgeBase kb;
    Query query;
    PipelineResult minas_result;
    PipelineResult pinpoint_result;
    double exact = 0.0;
};

// Random KBs with entailed queries, both explanation modes completed within
// budget. Branch enumeration is exponential in the worst case, so
// budget-exceeding draws are resampled like the non-entailing ones. The
// budget stays small: a single rule firing on a wide branch is not cheap,
// and a draw that needs more than a few thousand firings would dominate the
// whole run.
const std::vector<CorpusEntry>& corpus() {
    static std::vector<CorpusEntry> entries = [] {
        std::vector<CorpusEntry> out;
        std::mt19937 rng(20240907);
        std::uniform_int_distribution<int> size(4, 12);
        constexpr std::size_t kBudget = 5'000;
        PipelineOptions minas, pinpoint;
        minas.mode = ExplainMode::Minas;
        minas.budget = kBudget;
        pinpoint.mode = ExplainMode::Pinpoint;
        pinpoint.budget = kBudget;
        int attempts = 0;
        while (out.size() < 200 && attempts < 20'000) {
            ++attempts;
            CorpusEntry e;
            e.kb = random_kb(rng, size(rng), 8);
            e.query = random_query(rng);
            try {
                SaturateOptions quick;
                quick.budget = kBudget;
                if (!is_entailed(e.kb, e.query, quick)) continue;
                e.pinpoint_result = run_query(e.kb, e.query, pinpoint);
                e.minas_result = run_query(e.kb, e.query, minas);
                OracleOptions oracle;
                oracle.budget = kBudget;
                e.exact = exact_probability(e.kb, e.query, oracle);
            } catch (const BudgetExceededError&) {
                continue;
            } catch (const CapExceededError&) {
                continue;
            }
            out.push_back(std::move(e));
        }
        return out;
    }();
    return entries;
}

} // namespace

TEST_CASE("criterion 1: pet example probability") {
    bool ok = true;
    auto start = std::chrono::steady_clock::now();

    for (ExplainMode mode : {ExplainMode::Minas, ExplainMode::Pinpoint}) {
        PipelineOptions opts;
        opts.mode = mode;
        PipelineResult r = run_query(example1_kb(), nature_lover_query(), opts);
        ACC_CHECK(r.entailed);
        ACC_CHECK(close(r.probability, 0.3));
    }
    ACC_CHECK(enumerate_worlds(example1_kb()).size() == 4);
    ACC_CHECK(close(exact_probability(example1_kb(), nature_lover_query()), 0.3));

    ACC_CHECK(seconds_since(start) < 1.0);
    report(1, "pet example, P = 0.3, 4 worlds", ok);
}

TEST_CASE("criterion 2: two-source example probability") {
    bool ok = true;
    auto start = std::chrono::steady_clock::now();

    for (ExplainMode mode : {ExplainMode::Minas, ExplainMode::Pinpoint}) {
        PipelineOptions opts;
        opts.mode = mode;
        PipelineResult r = run_query(example2_kb(), nature_lover_query(), opts);
        ACC_CHECK(r.entailed);
        ACC_CHECK(close(r.probability, 0.58));
    }

    auto worlds = enumerate_worlds(example2_kb());
    int entailing = 0;
    for (const auto& w : worlds) {
        SaturateOptions sat;
        sat.active_axioms = world_indices(w.selection, example2_kb());
        if (is_entailed(example2_kb(), nature_lover_query(), sat)) ++entailing;
    }
    ACC_CHECK(worlds.size() == 4);
    ACC_CHECK(entailing == 3);

    ACC_CHECK(seconds_since(start) < 1.0);
    report(2, "two-source example, P = 0.58, 3 of 4 worlds", ok);
}

TEST_CASE("criterion 3: explanations of the indexed example") {
    bool ok = true;
    auto start = std::chrono::steady_clock::now();

    std::vector<MinA> minas = all_minas(example3_kb(), nature_lover_query());
    ACC_CHECK(minas.size() == 2);
    ACC_CHECK((minas[0].axiom_indices == std::set<int>{1, 2, 4, 6}));
    ACC_CHECK((minas[1].axiom_indices == std::set<int>{1, 3, 5, 6}));

    MonotoneFormula phi = pinpointing_formula(example3_kb(), nature_lover_query());
    VarOrder order = VarOrder::ascending(example3_kb().size());
    ACC_CHECK(equivalent(build(phi, order), build(published_formula(), order)));

    ACC_CHECK(seconds_since(start) < 1.0);
    report(3, "all MinAs and pinpointing formula", ok);
}

TEST_CASE("criterion 4: random corpus matches the oracle in both modes") {
    bool ok = true;
    auto start = std::chrono::steady_clock::now();

    ACC_CHECK(corpus().size() >= 200);
    for (const CorpusEntry& e : corpus()) {
        ACC_CHECK(close(e.minas_result.probability, e.exact));
        ACC_CHECK(close(e.pinpoint_result.probability, e.exact));
    }

    ACC_CHECK(seconds_since(start) < 300.0);
    report(4, "200 random KBs vs world enumeration", ok);
}

TEST_CASE("criterion 5: pinpointing formulas verify over all valuations") {
    bool ok = true;
    int checked = 0;
    for (const CorpusEntry& e : corpus()) {
        if (e.kb.size() > 10) continue;
        ACC_CHECK(check_pinpointing(e.kb, e.query, e.pinpoint_result.formula));
        ++checked;
    }
    ACC_CHECK(checked > 0);
    report(5, "formula valuation check on the corpus", ok);
}

TEST_CASE("criterion 6: MinA minimality and mode agreement") {
    bool ok = true;
    for (const CorpusEntry& e : corpus()) {
        ACC_CHECK(e.minas_result.minas == e.pinpoint_result.minas);
        for (const MinA& m : e.minas_result.minas) {
            SaturateOptions sat;
            sat.active_axioms = m.axiom_indices;
            ACC_CHECK(is_entailed(e.kb, e.query, sat));
            for (int dropped : m.axiom_indices) {
                SaturateOptions sub;
                sub.active_axioms = m.axiom_indices;
                sub.active_axioms->erase(dropped);
                ACC_CHECK(!is_entailed(e.kb, e.query, sub));
            }
        }
    }
    report(6, "each MinA entails, no proper subset does, modes agree", ok);
}

TEST_CASE("criterion 7: world probabilities sum to one") {
    bool ok = true;
    for (const CorpusEntry& e : corpus()) {
        double total = 0.0;
        for (const World& w : enumerate_worlds(e.kb)) total += w.prob;
        ACC_CHECK(std::abs(total - 1.0) <= 1e-9);
    }
    report(7, "distribution normalization on the corpus", ok);
}

TEST_CASE("criterion 8: fixture answers are variable-order independent") {
    bool ok = true;
    std::mt19937 rng(20240908);

    for (int round = 0; round < 5; ++round) {
        PipelineOptions opts;
        opts.var_order = random_order(rng, example1_kb().size());
        ACC_CHECK(close(run_query(example1_kb(), nature_lover_query(), opts).probability, 0.3));

        PipelineOptions opts2;
        opts2.var_order = random_order(rng, example2_kb().size());
        ACC_CHECK(close(run_query(example2_kb(), nature_lover_query(), opts2).probability, 0.58));

        PipelineOptions opts3;
        opts3.var_order = random_order(rng, example3_kb().size());
        PipelineResult r = run_query(example3_kb(), nature_lover_query(), opts3);
        ACC_CHECK(r.minas.size() == 2);
        ACC_CHECK((r.minas[0].axiom_indices == std::set<int>{1, 2, 4, 6}));
        ACC_CHECK((r.minas[1].axiom_indices == std::set<int>{1, 3, 5, 6}));
        // The pipeline diagram has the certain-axiom variables already
        // conditioned to true; mirror that before comparing.
        VarOrder order = VarOrder::from_sequence(*opts3.var_order);
        Bdd reference = build(published_formula(), order);
        for (const AnnotatedAxiom& ann : example3_kb().axioms())
            if (!ann.probability) reference = condition(reference, ann.index, true);
        ACC_CHECK(equivalent(r.bdd, reference));
        ACC_CHECK(close(r.probability, 0.3));
    }
    report(8, "five random variable orders per fixture", ok);
}
