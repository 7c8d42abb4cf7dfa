#include "alcprob/kb.hpp"

#include <algorithm>
#include <stdexcept>

#include "alcprob/errors.hpp"

namespace alcprob {

Axiom Axiom::sub_class_of(Concept sub, Concept sup) {
    return Axiom{AxiomKind::SubClassOf, std::move(sub), std::move(sup), {}, {}, {}};
}

Axiom Axiom::class_assertion(Concept term, std::string individual) {
    return Axiom{AxiomKind::ClassAssertion, std::move(term), Concept::top(), {},
                 std::move(individual), {}};
}

Axiom Axiom::property_assertion(std::string role, std::string subject, std::string object) {
    return Axiom{AxiomKind::PropertyAssertion, Concept::top(), Concept::top(),
                 std::move(role), std::move(subject), std::move(object)};
}

int compare(const Axiom& x, const Axiom& y) {
    if (x.kind != y.kind)
        return static_cast<int>(x.kind) < static_cast<int>(y.kind) ? -1 : 1;
    switch (x.kind) {
    case AxiomKind::SubClassOf:
        if (int c = compare(x.c1, y.c1); c != 0) return c;
        return compare(x.c2, y.c2);
    case AxiomKind::ClassAssertion:
        if (int c = x.a.compare(y.a); c != 0) return c < 0 ? -1 : 1;
        return compare(x.c1, y.c1);
    case AxiomKind::PropertyAssertion:
        if (int c = x.role.compare(y.role); c != 0) return c < 0 ? -1 : 1;
        if (int c = x.a.compare(y.a); c != 0) return c < 0 ? -1 : 1;
        if (int c = x.b.compare(y.b); c != 0) return c < 0 ? -1 : 1;
        return 0;
    }
    throw std::logic_error("unreachable axiom kind");
}

KnowledgeBase KnowledgeBase::from_axioms(
    std::vector<std::pair<Axiom, std::optional<double>>> axioms) {
    KnowledgeBase kb;
    auto note_individual = [&kb](const std::string& name) {
        if (!kb.has_individual(name)) kb.individuals_.push_back(name);
    };
    int index = 0;
    for (auto& [axiom, prob] : axioms) {
        ++index;
        if (prob && !(*prob > 0.0 && *prob <= 1.0))
            throw std::invalid_argument("axiom " + std::to_string(index) +
                                        ": probability must lie in (0, 1]");
        if (axiom.kind == AxiomKind::ClassAssertion) {
            note_individual(axiom.a);
        } else if (axiom.kind == AxiomKind::PropertyAssertion) {
            note_individual(axiom.a);
            note_individual(axiom.b);
        }
        if (prob)
            kb.probabilistic_.push_back(index);
        else
            kb.certain_.push_back(index);
        kb.axioms_.push_back(AnnotatedAxiom{index, std::move(axiom), prob});
    }
    return kb;
}

const AnnotatedAxiom& KnowledgeBase::at(int index) const {
    if (index < 1 || index > size())
        throw std::out_of_range("axiom index " + std::to_string(index) + " out of range");
    return axioms_[static_cast<std::size_t>(index - 1)];
}

bool KnowledgeBase::has_individual(const std::string& name) const {
    return std::find(individuals_.begin(), individuals_.end(), name) != individuals_.end();
}

Query Query::is_instance(Concept term, std::string individual) {
    return Query{QueryKind::IsInstance, std::move(term), Concept::top(),
                 std::move(individual)};
}

Query Query::is_sub_class(Concept sub, Concept sup) {
    return Query{QueryKind::IsSubClass, std::move(sub), std::move(sup), {}};
}

bool CompositeChoice::total_over(const KnowledgeBase& kb) const {
    for (int i : kb.probabilistic_indices())
        if (!decisions.count(i)) return false;
    return true;
}

NegatedQuery negated_query_assertions(const Query& q, const KnowledgeBase& kb) {
    NegatedQuery out;
    if (q.kind == QueryKind::IsInstance) {
        out.assertions.emplace_back(q.individual, nnf(Concept::negation(q.c1)));
        return out;
    }
    // IsSubClass(C, D): assert a fresh individual to nnf(C and not D).
    std::string fresh;
    for (int k = 0;; ++k) {
        fresh = "x" + std::to_string(k);
        if (!kb.has_individual(fresh)) break;
    }
    if (kb.has_individual(fresh))
        throw InternalError("fresh individual " + fresh + " collides with a KB individual");
    Concept test = Concept::conjunction({q.c1, Concept::negation(q.c2)});
    out.assertions.emplace_back(fresh, nnf(test));
    out.fresh_individual = fresh;
    return out;
}

double choice_probability(const CompositeChoice& kappa, const KnowledgeBase& kb) {
    double p = 1.0;
    for (const auto& [index, included] : kappa.decisions) {
        const AnnotatedAxiom& ax = kb.at(index);
        if (ax.certain())
            throw PreconditionError("composite choice refers to certain axiom " +
                                    std::to_string(index));
        p *= included ? *ax.probability : 1.0 - *ax.probability;
    }
    return p;
}

std::vector<Axiom> world_of(const CompositeChoice& sigma, const KnowledgeBase& kb) {
    std::vector<Axiom> world;
    for (int i : world_indices(sigma, kb)) world.push_back(kb.at(i).axiom);
    return world;
}

std::set<int> world_indices(const CompositeChoice& sigma, const KnowledgeBase& kb) {
    if (!sigma.total_over(kb))
        throw PreconditionError("selection is not total over the probabilistic axioms");
    std::set<int> indices(kb.certain_indices().begin(), kb.certain_indices().end());
    for (const auto& [index, included] : sigma.decisions) {
        if (kb.at(index).certain())
            throw PreconditionError("composite choice refers to certain axiom " +
                                    std::to_string(index));
        if (included) indices.insert(index);
    }
    return indices;
}

} // namespace alcprob
