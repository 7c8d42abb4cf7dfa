#ifndef ALCPROB_BDD_HPP
#define ALCPROB_BDD_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "alcprob/formula.hpp"

namespace alcprob {

// Bijection between axiom indices and contiguous BDD ranks 0..m-1.
class VarOrder {
public:
    VarOrder() = default;

    // Ranks follow the given sequence; duplicates are rejected.
    static VarOrder from_sequence(const std::vector<int>& indices);
    // Ascending axiom index 1..n.
    static VarOrder ascending(int axiom_count);

    int size() const { return static_cast<int>(index_by_rank_.size()); }
    bool contains(int index) const { return rank_by_index_.count(index) != 0; }
    int rank_of(int index) const;
    int index_at(int rank) const { return index_by_rank_.at(static_cast<std::size_t>(rank)); }
    const std::vector<int>& sequence() const { return index_by_rank_; }

    friend bool operator==(const VarOrder& a, const VarOrder& b) {
        return a.index_by_rank_ == b.index_by_rank_;
    }

private:
    std::vector<int> index_by_rank_;
    std::map<int, int> rank_by_index_;
};

// Shared node pool for reduced ordered BDDs. Nodes are append-only; ids 0 and
// 1 are the terminals. The uniqueness table guarantees canonical form, so two
// roots in the same store compute the same function iff they are equal.
class BddStore {
public:
    struct Node {
        int rank;
        std::uint32_t low;
        std::uint32_t high;
    };

    static constexpr std::uint32_t kFalse = 0;
    static constexpr std::uint32_t kTrue = 1;

    BddStore();

    std::uint32_t make(int rank, std::uint32_t low, std::uint32_t high);
    std::uint32_t apply_and(std::uint32_t a, std::uint32_t b);
    std::uint32_t apply_or(std::uint32_t a, std::uint32_t b);
    std::uint32_t negate(std::uint32_t a);
    std::uint32_t restrict_var(std::uint32_t a, int rank, bool value);
    std::uint32_t from_formula(const MonotoneFormula& phi, const VarOrder& order);

    // True iff every assignment satisfying a also satisfies b.
    bool implies(std::uint32_t a, std::uint32_t b);

    bool is_terminal(std::uint32_t id) const { return id <= 1; }
    const Node& node(std::uint32_t id) const { return nodes_[id]; }
    std::size_t node_count() const { return nodes_.size(); }

private:
    struct TripleHash {
        std::size_t operator()(const std::tuple<int, std::uint32_t, std::uint32_t>& t) const;
    };
    struct PairHash {
        std::size_t operator()(const std::pair<std::uint32_t, std::uint32_t>& p) const;
    };

    std::uint32_t apply(std::uint32_t a, std::uint32_t b, bool conj);

    std::vector<Node> nodes_;
    std::unordered_map<std::tuple<int, std::uint32_t, std::uint32_t>, std::uint32_t, TripleHash>
        unique_;
    std::unordered_map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t, PairHash>
        and_cache_, or_cache_;
    std::unordered_map<std::uint32_t, std::uint32_t> neg_cache_;
};

// A reduced ordered BDD value: immutable once built, cheap to copy.
class Bdd {
public:
    Bdd() = default;

    const VarOrder& order() const { return order_; }
    std::uint32_t root() const { return root_; }
    const std::shared_ptr<BddStore>& store() const { return store_; }

    bool is_true() const { return root_ == BddStore::kTrue; }
    bool is_false() const { return root_ == BddStore::kFalse; }

    // Decision nodes reachable from the root.
    std::size_t node_count() const;

    // Diagnostic text dump: root line, then one node per line
    // "<id> F<axiom-index> <low> <high>".
    std::string to_text() const;

    friend Bdd build(const MonotoneFormula& phi, const VarOrder& order);
    friend Bdd condition(const Bdd& b, int axiom_index, bool value);
    friend bool equivalent(const Bdd& a, const Bdd& b);

private:
    Bdd(std::shared_ptr<BddStore> store, std::uint32_t root, VarOrder order)
        : store_(std::move(store)), root_(root), order_(std::move(order)) {}

    std::shared_ptr<BddStore> store_;
    std::uint32_t root_ = BddStore::kFalse;
    VarOrder order_;
};

// Compiles phi into a canonical diagram. Throws PreconditionError when a
// variable of phi is missing from the order.
Bdd build(const MonotoneFormula& phi, const VarOrder& order);

// Restricts the variable to the given value. Conditioning on a variable
// absent from the order is the identity.
Bdd condition(const Bdd& b, int axiom_index, bool value);

// Structural equivalence under a shared order. Throws PreconditionError when
// the orders differ.
bool equivalent(const Bdd& a, const Bdd& b);

// Exact probability by the linear dynamic program: each node is visited once,
// pi(n) = p * pi(high) + (1-p) * pi(low). Throws PreconditionError when a
// reachable variable has no probability.
double probability(const Bdd& b, const std::map<int, double>& probs);

} // namespace alcprob

#endif
