#ifndef ALCPROB_KB_HPP
#define ALCPROB_KB_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "alcprob/concept.hpp"

namespace alcprob {

enum class AxiomKind { SubClassOf, ClassAssertion, PropertyAssertion };

// A non-probabilistic ALC axiom.
struct Axiom {
    AxiomKind kind;
    Concept c1;         // SubClassOf sub / ClassAssertion term
    Concept c2;         // SubClassOf sup
    std::string role;   // PropertyAssertion role
    std::string a;      // assertion individual / property subject
    std::string b;      // property object

    static Axiom sub_class_of(Concept sub, Concept sup);
    static Axiom class_assertion(Concept term, std::string individual);
    static Axiom property_assertion(std::string role, std::string subject, std::string object);
};

int compare(const Axiom& x, const Axiom& y);
inline bool operator==(const Axiom& x, const Axiom& y) { return compare(x, y) == 0; }
inline bool operator<(const Axiom& x, const Axiom& y) { return compare(x, y) < 0; }

// An axiom with its 1-based KB index and probability annotation. A missing
// probability means the axiom is certain. Identity is the index: two
// syntactically equal probabilistic axioms at distinct indices are
// independent random variables.
struct AnnotatedAxiom {
    int index = 0;
    Axiom axiom;
    std::optional<double> probability; // in (0, 1] when present

    bool certain() const { return !probability.has_value(); }
};

class KnowledgeBase {
public:
    KnowledgeBase() = default;

    // Assigns contiguous 1-based indices in the given order. Throws
    // std::invalid_argument for probabilities outside (0, 1]; p = 1 is kept
    // as an independent always-true variable, distinct from certain.
    static KnowledgeBase from_axioms(std::vector<std::pair<Axiom, std::optional<double>>> axioms);

    const std::vector<AnnotatedAxiom>& axioms() const { return axioms_; }
    int size() const { return static_cast<int>(axioms_.size()); }
    bool empty() const { return axioms_.empty(); }

    // 1-based access.
    const AnnotatedAxiom& at(int index) const;

    const std::vector<int>& certain_indices() const { return certain_; }
    const std::vector<int>& probabilistic_indices() const { return probabilistic_; }

    // Named individuals occurring in the ABox, in order of first occurrence.
    const std::vector<std::string>& individuals() const { return individuals_; }
    bool has_individual(const std::string& name) const;

private:
    std::vector<AnnotatedAxiom> axioms_;
    std::vector<int> certain_;
    std::vector<int> probabilistic_;
    std::vector<std::string> individuals_;
};

enum class QueryKind { IsInstance, IsSubClass };

struct Query {
    QueryKind kind;
    Concept c1;             // IsInstance term / IsSubClass sub
    Concept c2;             // IsSubClass sup
    std::string individual; // IsInstance individual

    static Query is_instance(Concept term, std::string individual);
    static Query is_sub_class(Concept sub, Concept sup);
};

// A consistent set of atomic choices: per probabilistic-axiom index, whether
// the axiom is included (true) or excluded (false).
struct CompositeChoice {
    std::map<int, bool> decisions;

    bool total_over(const KnowledgeBase& kb) const;
};

// Refutation setup for a query: assertions whose addition to the KB is
// inconsistent iff the query is entailed.
struct NegatedQuery {
    // (individual, term in NNF) pairs.
    std::vector<std::pair<std::string, Concept>> assertions;
    // Present for IsSubClass queries: the introduced individual.
    std::optional<std::string> fresh_individual;
};

NegatedQuery negated_query_assertions(const Query& q, const KnowledgeBase& kb);

// P(kappa) = prod over included of p_i times prod over excluded of (1 - p_i).
// Throws PreconditionError if an index does not name a probabilistic axiom.
double choice_probability(const CompositeChoice& kappa, const KnowledgeBase& kb);

// The world induced by a total selection: all certain axioms plus the chosen
// probabilistic ones. Throws PreconditionError if sigma is not total.
std::vector<Axiom> world_of(const CompositeChoice& sigma, const KnowledgeBase& kb);

// Axiom indices of the world induced by sigma (certain plus chosen).
std::set<int> world_indices(const CompositeChoice& sigma, const KnowledgeBase& kb);

} // namespace alcprob

#endif
