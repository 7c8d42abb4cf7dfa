#include "alcprob/tableau.hpp"

#include <algorithm>

#include "alcprob/bdd.hpp"
#include "alcprob/errors.hpp"

namespace alcprob {

std::optional<NodeId> Tableau::node_named(const std::string& name) const {
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i].name == name) return static_cast<NodeId>(i);
    return std::nullopt;
}

namespace {

// Sorted set of axiom indices supporting one derivation of an element.
using Support = std::vector<int>;

Support support_union(const Support& a, const Support& b) {
    Support out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool subset(const Support& a, const Support& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

enum class Mode { Check, Minas, Pinpoint };

// One way an element was (or would be) derived.
struct Contribution {
    Support support;                                   // Check/Minas
    MonotoneFormula formula = MonotoneFormula::true_f(); // Pinpoint
    std::uint32_t bdd = BddStore::kTrue;                 // Pinpoint
};

// Justification bookkeeping for one label or edge element. MinA mode keeps an
// antichain of minimal supports; pinpointing mode keeps a monotone formula
// with its BDD alongside for fast implication checks.
struct Trace {
    std::vector<Support> supports;
    MonotoneFormula formula = MonotoneFormula::false_f();
    std::uint32_t bdd = BddStore::kFalse;
};

struct Branch {
    std::vector<Tableau::Node> nodes;
    std::vector<std::map<Concept, Trace>> labels;
    std::map<std::pair<NodeId, NodeId>, std::map<std::string, Trace>> edges;
    // Successor generated for an existential label element. Later derivations
    // of the same element widen this node instead of touching independently
    // justified edges.
    std::map<std::pair<NodeId, Concept>, NodeId> generated;
    bool has_clash = false;
};

class Engine {
public:
    Engine(const KnowledgeBase& kb, Mode mode, const SaturateOptions& opts)
        : kb_(kb), mode_(mode), opts_(opts) {
        if (mode_ == Mode::Pinpoint) {
            store_ = std::make_unique<BddStore>();
            order_ = VarOrder::ascending(kb.size());
        }
        for (const AnnotatedAxiom& ax : kb.axioms()) {
            if (!axiom_active(ax.index)) continue;
            if (ax.axiom.kind == AxiomKind::SubClassOf) {
                Concept term =
                    nnf(Concept::disjunction({Concept::negation(ax.axiom.c1), ax.axiom.c2}));
                // Tautological inclusions constrain nothing.
                if (!term.is(ConceptKind::Top)) gcis_.emplace_back(ax.index, term);
            }
        }
    }

    ~Engine() {
        if (opts_.firings) *opts_.firings += firings_;
    }

    bool axiom_active(int index) const {
        return !opts_.active_axioms || opts_.active_axioms->count(index) != 0;
    }

    Branch initial(const std::vector<std::pair<std::string, Concept>>& extra) {
        Branch b;
        auto node_of = [&b](const std::string& name) -> NodeId {
            for (std::size_t i = 0; i < b.nodes.size(); ++i)
                if (b.nodes[i].name == name) return static_cast<NodeId>(i);
            b.nodes.push_back(Tableau::Node{name, std::nullopt});
            b.labels.emplace_back();
            return static_cast<NodeId>(b.nodes.size() - 1);
        };
        for (const AnnotatedAxiom& ax : kb_.axioms()) {
            if (!axiom_active(ax.index)) continue;
            if (ax.axiom.kind == AxiomKind::ClassAssertion) {
                NodeId a = node_of(ax.axiom.a);
                add_label(b, a, nnf(ax.axiom.c1), axiom_contribution(ax.index));
            } else if (ax.axiom.kind == AxiomKind::PropertyAssertion) {
                NodeId from = node_of(ax.axiom.a);
                NodeId to = node_of(ax.axiom.b);
                add_edge(b, from, to, ax.axiom.role, axiom_contribution(ax.index));
            }
        }
        for (const auto& [individual, term] : extra) {
            NodeId a = node_of(individual);
            add_label(b, a, nnf(term), Contribution{});
        }
        return b;
    }

    // Saturates every descendant of the given branch, feeding each one to the
    // sink as it completes. A false return from the sink aborts the search;
    // the overall result is true iff the sink never aborted. In Check mode a
    // branch stops expanding at its first clash.
    template <class Sink>
    bool run(Branch start, const Sink& sink) {
        std::vector<Branch> work;
        work.push_back(std::move(start));
        while (!work.empty()) {
            Branch branch = std::move(work.back());
            work.pop_back();
            bool saturated = false;
            bool split = false;
            while (!saturated && !split) {
                if (mode_ == Mode::Check && branch.has_clash) break;
                Step step = find_step(branch);
                switch (step.kind) {
                case StepKind::None:
                    saturated = true;
                    break;
                case StepKind::AddLabel:
                    count_firing();
                    add_label(branch, step.node, step.term, step.contribution);
                    break;
                case StepKind::WidenEdge:
                    count_firing();
                    add_edge(branch, step.node, step.target, step.role, step.contribution);
                    add_label(branch, step.target, step.term, step.contribution);
                    break;
                case StepKind::NewSuccessor: {
                    count_firing();
                    NodeId x = fresh_node(branch, step.node);
                    branch.generated[{step.node, Concept::exists(step.role, step.term)}] = x;
                    add_edge(branch, step.node, x, step.role, step.contribution);
                    add_label(branch, x, step.term, step.contribution);
                    break;
                }
                case StepKind::Split: {
                    count_firing();
                    const auto& parts = step.term.parts();
                    // Push right-to-left so branches come out in disjunct order.
                    for (std::size_t j = parts.size(); j-- > 0;) {
                        Branch child = branch;
                        add_label(child, step.node, parts[j], step.contribution);
                        work.push_back(std::move(child));
                    }
                    split = true;
                    break;
                }
                }
            }
            if (split) continue;
            if (!sink(branch)) return false;
        }
        return true;
    }

    std::vector<Clash> collect_clashes(const Branch& branch) const {
        std::vector<Clash> clashes;
        for (NodeId a = 0; a < static_cast<NodeId>(branch.nodes.size()); ++a) {
            for (const auto& [term, trace] : branch.labels[a]) {
                if (term.is(ConceptKind::Bottom)) {
                    for (auto& f : trace_formulas(trace))
                        clashes.push_back(Clash{a, term, f});
                } else if (term.is(ConceptKind::Not)) {
                    auto pos = branch.labels[a].find(term.inner());
                    if (pos == branch.labels[a].end()) continue;
                    for (auto& f : combined_formulas(pos->second, trace))
                        clashes.push_back(Clash{a, term.inner(), f});
                }
            }
        }
        return clashes;
    }

    Tableau to_public(const Branch& branch) const {
        Tableau t;
        t.nodes = branch.nodes;
        t.labels.resize(branch.labels.size());
        for (std::size_t i = 0; i < branch.labels.size(); ++i)
            for (const auto& [term, trace] : branch.labels[i])
                t.labels[i].emplace(term, TraceLabel{trace_formula(trace)});
        for (const auto& [pair, roles] : branch.edges)
            for (const auto& [role, trace] : roles)
                t.edges[pair].emplace(role, TraceLabel{trace_formula(trace)});
        t.clashes = collect_clashes(branch);
        return t;
    }

    Branch from_public(const Tableau& t) {
        Branch b;
        b.nodes = t.nodes;
        b.labels.resize(t.labels.size());
        for (std::size_t i = 0; i < t.labels.size(); ++i)
            for (const auto& [term, label] : t.labels[i])
                for (const auto& c : contributions_of(label.formula))
                    add_label(b, static_cast<NodeId>(i), term, c);
        for (const auto& [pair, roles] : t.edges)
            for (const auto& [role, label] : roles)
                for (const auto& c : contributions_of(label.formula))
                    add_edge(b, pair.first, pair.second, role, c);
        firings_ = 0;
        return b;
    }

private:
    enum class StepKind { None, AddLabel, WidenEdge, NewSuccessor, Split };

    struct Step {
        StepKind kind = StepKind::None;
        NodeId node = 0;
        NodeId target = 0;
        std::string role;
        Concept term;
        Contribution contribution;
    };

    void count_firing() {
        if (++firings_ > opts_.budget) throw BudgetExceededError(opts_.budget);
    }

    Contribution axiom_contribution(int index) {
        Contribution c;
        c.support = {index};
        c.formula = MonotoneFormula::var(index);
        if (store_) c.bdd = store_->make(order_.rank_of(index), BddStore::kFalse, BddStore::kTrue);
        return c;
    }

    Contribution combine(const Contribution& a, const Contribution& b) {
        Contribution c;
        if (mode_ == Mode::Pinpoint) {
            c.formula = MonotoneFormula::and_of({a.formula, b.formula});
            c.bdd = store_->apply_and(a.bdd, b.bdd);
        } else {
            c.support = support_union(a.support, b.support);
        }
        return c;
    }

    bool covers(const Trace& trace, const Contribution& c) const {
        switch (mode_) {
        case Mode::Check:
            return true;
        case Mode::Minas:
            for (const Support& s : trace.supports)
                if (subset(s, c.support)) return true;
            return false;
        case Mode::Pinpoint:
            return store_->implies(c.bdd, trace.bdd);
        }
        return true;
    }

    bool element_covered(const std::map<Concept, Trace>& label, const Concept& term,
                         const Contribution& c) const {
        auto it = label.find(term);
        return it != label.end() && covers(it->second, c);
    }

    void widen(Trace& trace, const Contribution& c) {
        switch (mode_) {
        case Mode::Check:
            if (trace.supports.empty()) trace.supports.push_back({});
            break;
        case Mode::Minas:
            std::erase_if(trace.supports,
                          [&c](const Support& s) { return subset(c.support, s); });
            trace.supports.push_back(c.support);
            break;
        case Mode::Pinpoint:
            trace.formula = trace.formula.is_false()
                                ? c.formula
                                : MonotoneFormula::or_of({trace.formula, c.formula});
            trace.bdd = store_->apply_or(trace.bdd, c.bdd);
            break;
        }
    }

    void add_label(Branch& b, NodeId node, const Concept& term, const Contribution& c) {
        Trace& trace = b.labels[static_cast<std::size_t>(node)][term];
        widen(trace, c);
        if (!b.has_clash) b.has_clash = creates_clash(b, node, term);
    }

    void add_edge(Branch& b, NodeId from, NodeId to, const std::string& role,
                  const Contribution& c) {
        widen(b.edges[{from, to}][role], c);
    }

    bool creates_clash(const Branch& b, NodeId node, const Concept& term) const {
        const auto& label = b.labels[static_cast<std::size_t>(node)];
        if (term.is(ConceptKind::Bottom)) return true;
        if (term.is(ConceptKind::Atomic))
            return label.count(Concept::negation(term)) != 0;
        if (term.is(ConceptKind::Not)) return label.count(term.inner()) != 0;
        return false;
    }

    NodeId fresh_node(Branch& b, NodeId parent) {
        std::string name;
        for (;; ++fresh_counter_) {
            name = "x" + std::to_string(fresh_counter_);
            bool taken = false;
            for (const auto& n : b.nodes)
                if (n.name == name) { taken = true; break; }
            if (!taken) break;
        }
        ++fresh_counter_;
        b.nodes.push_back(Tableau::Node{name, parent});
        b.labels.emplace_back();
        return static_cast<NodeId>(b.nodes.size() - 1);
    }

    // Subset blocking along the creator chain. In pinpointing mode the
    // ancestor must additionally dominate every label trace, since a blocked
    // expansion must be justified whenever the blocked one would be.
    bool blocked(const Branch& b, NodeId node) const {
        const auto& label = b.labels[static_cast<std::size_t>(node)];
        std::optional<NodeId> up = b.nodes[static_cast<std::size_t>(node)].parent;
        while (up) {
            const auto& ancestor_label = b.labels[static_cast<std::size_t>(*up)];
            bool dominates = true;
            for (const auto& [term, trace] : label) {
                auto it = ancestor_label.find(term);
                if (it == ancestor_label.end()) { dominates = false; break; }
                if (mode_ == Mode::Pinpoint && !store_->implies(trace.bdd, it->second.bdd)) {
                    dominates = false;
                    break;
                }
            }
            if (dominates) return true;
            up = b.nodes[static_cast<std::size_t>(*up)].parent;
        }
        return false;
    }

    std::vector<Contribution> enumerate(const Trace& trace) const {
        std::vector<Contribution> out;
        if (mode_ == Mode::Pinpoint) {
            Contribution c;
            c.formula = trace.formula;
            c.bdd = trace.bdd;
            out.push_back(std::move(c));
        } else {
            for (const Support& s : trace.supports) {
                Contribution c;
                c.support = s;
                out.push_back(std::move(c));
            }
        }
        return out;
    }

    // Rule scheduling: GCI, then conjunction, disjunction, universal,
    // existential; within a rule, lowest node id first, then smallest
    // term. The first applicable instance is returned.
    Step find_step(const Branch& b) {
        const auto node_count = static_cast<NodeId>(b.nodes.size());

        // GCI: every node receives nnf(not C or D) for each inclusion axiom.
        for (NodeId a = 0; a < node_count; ++a) {
            bool found = false;
            Step candidate;
            for (const auto& [index, term] : gcis_) {
                Contribution c = axiom_contribution(index);
                if (element_covered(b.labels[static_cast<std::size_t>(a)], term, c)) continue;
                if (!found || term < candidate.term) {
                    candidate = Step{StepKind::AddLabel, a, 0, {}, term, std::move(c)};
                    found = true;
                }
            }
            if (found) return candidate;
        }

        // Conjunction: each part inherits the conjunction's trace.
        for (NodeId a = 0; a < node_count; ++a) {
            const auto& label = b.labels[static_cast<std::size_t>(a)];
            for (const auto& [term, trace] : label) {
                if (!term.is(ConceptKind::And)) continue;
                for (const Contribution& c : enumerate(trace))
                    for (const Concept& part : term.parts())
                        if (!element_covered(label, part, c))
                            return Step{StepKind::AddLabel, a, 0, {}, part, c};
            }
        }

        // Disjunction: split unless some disjunct already covers the trace.
        for (NodeId a = 0; a < node_count; ++a) {
            const auto& label = b.labels[static_cast<std::size_t>(a)];
            for (const auto& [term, trace] : label) {
                if (!term.is(ConceptKind::Or)) continue;
                for (const Contribution& c : enumerate(trace)) {
                    bool satisfied = false;
                    for (const Concept& part : term.parts())
                        if (element_covered(label, part, c)) { satisfied = true; break; }
                    if (!satisfied) return Step{StepKind::Split, a, 0, {}, term, c};
                }
            }
        }

        // Universal: propagate the filler over every matching edge.
        for (NodeId a = 0; a < node_count; ++a) {
            const auto& label = b.labels[static_cast<std::size_t>(a)];
            for (const auto& [term, trace] : label) {
                if (!term.is(ConceptKind::ForAll)) continue;
                for (const auto& [pair, roles] : b.edges) {
                    if (pair.first != a) continue;
                    auto role_it = roles.find(term.role());
                    if (role_it == roles.end()) continue;
                    for (const Contribution& cf : enumerate(trace))
                        for (const Contribution& ce : enumerate(role_it->second)) {
                            Contribution c = combine(cf, ce);
                            if (!element_covered(b.labels[static_cast<std::size_t>(pair.second)],
                                                 term.inner(), c))
                                return Step{StepKind::AddLabel, pair.second, 0, {},
                                            term.inner(), std::move(c)};
                        }
                }
            }
        }

        // Existential: satisfied by an existing successor whose edge and
        // filler both cover the trace; otherwise widen the lowest matching
        // successor, or create a fresh one when none carries the filler.
        // Blocked nodes receive no existential expansion.
        for (NodeId a = 0; a < node_count; ++a) {
            const auto& label = b.labels[static_cast<std::size_t>(a)];
            bool blocked_checked = false;
            bool is_blocked = false;
            for (const auto& [term, trace] : label) {
                if (!term.is(ConceptKind::Exists)) continue;
                if (!blocked_checked) {
                    is_blocked = blocked(b, a);
                    blocked_checked = true;
                }
                if (is_blocked) continue;
                for (const Contribution& c : enumerate(trace)) {
                    bool satisfied = false;
                    for (const auto& [pair, roles] : b.edges) {
                        if (pair.first != a) continue;
                        auto role_it = roles.find(term.role());
                        if (role_it == roles.end()) continue;
                        const auto& succ_label = b.labels[static_cast<std::size_t>(pair.second)];
                        auto filler_it = succ_label.find(term.inner());
                        if (filler_it == succ_label.end()) continue;
                        if (covers(role_it->second, c) && covers(filler_it->second, c)) {
                            satisfied = true;
                            break;
                        }
                    }
                    if (satisfied) continue;
                    auto gen = b.generated.find({a, term});
                    if (gen != b.generated.end())
                        return Step{StepKind::WidenEdge, a, gen->second, term.role(),
                                    term.inner(), c};
                    return Step{StepKind::NewSuccessor, a, 0, term.role(), term.inner(), c};
                }
            }
        }

        return Step{};
    }

    std::vector<MonotoneFormula> trace_formulas(const Trace& trace) const {
        if (mode_ == Mode::Pinpoint) return {trace.formula};
        std::vector<MonotoneFormula> out;
        for (const Support& s : trace.supports) out.push_back(support_formula(s));
        return out;
    }

    // One clash formula per pair of supports in MinA mode; a single combined
    // formula in pinpointing mode.
    std::vector<MonotoneFormula> combined_formulas(const Trace& pos, const Trace& neg) const {
        if (mode_ == Mode::Pinpoint)
            return {MonotoneFormula::and_of({pos.formula, neg.formula})};
        std::vector<MonotoneFormula> out;
        for (const Support& s : pos.supports)
            for (const Support& t : neg.supports) out.push_back(support_formula(support_union(s, t)));
        return out;
    }

    static MonotoneFormula support_formula(const Support& s) {
        std::vector<MonotoneFormula> vars;
        for (int i : s) vars.push_back(MonotoneFormula::var(i));
        return MonotoneFormula::and_of(std::move(vars));
    }

    MonotoneFormula trace_formula(const Trace& trace) const {
        if (mode_ == Mode::Pinpoint) return trace.formula;
        std::vector<MonotoneFormula> ways;
        for (const Support& s : trace.supports) ways.push_back(support_formula(s));
        return MonotoneFormula::or_of(std::move(ways));
    }

    // Inverse of trace_formula for tableaux produced by init_tableau or a
    // previous saturation: the formula must be a disjunction of variable
    // conjunctions.
    std::vector<Contribution> contributions_of(const MonotoneFormula& formula) {
        std::vector<Support> supports;
        auto conjunct = [](const MonotoneFormula& f, Support& s) {
            if (f.kind() == FormulaKind::Var) {
                s.push_back(f.var_index());
                return true;
            }
            if (f.kind() == FormulaKind::And) {
                for (const auto& p : f.parts()) {
                    if (p.kind() != FormulaKind::Var) return false;
                    s.push_back(p.var_index());
                }
                return true;
            }
            return f.is_true();
        };
        bool ok = true;
        if (formula.kind() == FormulaKind::Or) {
            for (const auto& p : formula.parts()) {
                Support s;
                ok = ok && conjunct(p, s);
                std::sort(s.begin(), s.end());
                supports.push_back(std::move(s));
            }
        } else {
            Support s;
            ok = conjunct(formula, s);
            std::sort(s.begin(), s.end());
            supports.push_back(std::move(s));
        }
        if (!ok)
            throw PreconditionError("tableau trace is not a disjunction of conjunctions: " +
                                    formula.to_string());
        std::vector<Contribution> out;
        for (Support& s : supports) {
            Contribution c;
            c.formula = support_formula(s);
            if (store_) {
                c.bdd = BddStore::kTrue;
                for (int i : s)
                    c.bdd = store_->apply_and(
                        c.bdd, store_->make(order_.rank_of(i), BddStore::kFalse, BddStore::kTrue));
            }
            c.support = std::move(s);
            out.push_back(std::move(c));
        }
        return out;
    }

    const KnowledgeBase& kb_;
    Mode mode_;
    SaturateOptions opts_;
    std::unique_ptr<BddStore> store_;
    VarOrder order_;
    std::vector<std::pair<int, Concept>> gcis_;
    std::size_t firings_ = 0;
    int fresh_counter_ = 0;
};

} // namespace

Tableau init_tableau(const KnowledgeBase& kb,
                     const std::vector<std::pair<std::string, Concept>>& extra) {
    SaturateOptions opts;
    Engine engine(kb, Mode::Minas, opts);
    Branch b = engine.initial(extra);
    Tableau t = engine.to_public(b);
    t.clashes.clear(); // nothing saturated yet
    return t;
}

std::vector<Tableau> saturate(const Tableau& t, const KnowledgeBase& kb, ExplainMode mode,
                              const SaturateOptions& opts) {
    Engine engine(kb, mode == ExplainMode::Minas ? Mode::Minas : Mode::Pinpoint, opts);
    Branch start = engine.from_public(t);
    std::vector<Tableau> out;
    engine.run(std::move(start), [&](const Branch& b) {
        out.push_back(engine.to_public(b));
        return true;
    });
    return out;
}

bool saturate_each(const Tableau& t, const KnowledgeBase& kb, ExplainMode mode,
                   const SaturateOptions& opts,
                   const std::function<bool(const Tableau&)>& visit) {
    Engine engine(kb, mode == ExplainMode::Minas ? Mode::Minas : Mode::Pinpoint, opts);
    Branch start = engine.from_public(t);
    return engine.run(std::move(start),
                      [&](const Branch& b) { return visit(engine.to_public(b)); });
}

bool is_entailed(const KnowledgeBase& kb, const Query& q, const SaturateOptions& opts) {
    Engine engine(kb, Mode::Check, opts);
    NegatedQuery negated = negated_query_assertions(q, kb);
    Branch start = engine.initial(negated.assertions);
    // Entailed iff no saturated branch is clash-free.
    return engine.run(std::move(start),
                      [](const Branch& b) { return b.has_clash; });
}

} // namespace alcprob
