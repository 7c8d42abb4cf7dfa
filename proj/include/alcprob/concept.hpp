#ifndef ALCPROB_CONCEPT_HPP
#define ALCPROB_CONCEPT_HPP

#include <memory>
#include <string>
#include <vector>

namespace alcprob {

enum class ConceptKind { Top, Bottom, Atomic, Not, And, Or, Exists, ForAll };

// Immutable ALC concept term. Copies share structure.
class Concept {
public:
    Concept() : Concept(top()) {}

    static Concept top();
    static Concept bottom();
    static Concept atomic(std::string name);
    static Concept negation(Concept inner);
    // And/Or require at least two parts; source order is preserved.
    static Concept conjunction(std::vector<Concept> parts);
    static Concept disjunction(std::vector<Concept> parts);
    static Concept exists(std::string role, Concept filler);
    static Concept for_all(std::string role, Concept filler);

    ConceptKind kind() const { return node_->kind; }
    // Atomic concept name.
    const std::string& name() const { return node_->name; }
    // Role symbol of Exists/ForAll.
    const std::string& role() const { return node_->name; }
    // Inner term of Not, or filler of Exists/ForAll.
    const Concept& inner() const { return node_->parts.front(); }
    // Parts of And/Or.
    const std::vector<Concept>& parts() const { return node_->parts; }

    bool is(ConceptKind k) const { return kind() == k; }

    // Total structural order, used for deterministic rule scheduling and for
    // keeping label maps in a stable iteration order.
    friend int compare(const Concept& a, const Concept& b);
    friend bool operator==(const Concept& a, const Concept& b) { return compare(a, b) == 0; }
    friend bool operator<(const Concept& a, const Concept& b) { return compare(a, b) < 0; }

private:
    struct Node {
        ConceptKind kind;
        std::string name;           // atomic name or role symbol
        std::vector<Concept> parts; // arity depends on kind
    };
    explicit Concept(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

// Negation normal form: negation pushed down to atomic concepts. Idempotent.
Concept nnf(const Concept& c);

bool is_in_nnf(const Concept& c);

} // namespace alcprob

#endif
