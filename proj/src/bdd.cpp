#include "alcprob/bdd.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "alcprob/errors.hpp"

namespace alcprob {

VarOrder VarOrder::from_sequence(const std::vector<int>& indices) {
    VarOrder order;
    for (int index : indices) {
        if (order.rank_by_index_.count(index))
            throw std::invalid_argument("duplicate axiom index " + std::to_string(index) +
                                        " in variable order");
        order.rank_by_index_[index] = static_cast<int>(order.index_by_rank_.size());
        order.index_by_rank_.push_back(index);
    }
    return order;
}

VarOrder VarOrder::ascending(int axiom_count) {
    std::vector<int> seq(static_cast<std::size_t>(std::max(axiom_count, 0)));
    for (int i = 0; i < axiom_count; ++i) seq[static_cast<std::size_t>(i)] = i + 1;
    return from_sequence(seq);
}

int VarOrder::rank_of(int index) const {
    auto it = rank_by_index_.find(index);
    if (it == rank_by_index_.end())
        throw PreconditionError("axiom index " + std::to_string(index) +
                                " missing from variable order");
    return it->second;
}

std::size_t BddStore::TripleHash::operator()(
    const std::tuple<int, std::uint32_t, std::uint32_t>& t) const {
    std::size_t h = std::hash<int>{}(std::get<0>(t));
    h = h * 1000003u ^ std::get<1>(t);
    h = h * 1000003u ^ std::get<2>(t);
    return h;
}

std::size_t BddStore::PairHash::operator()(
    const std::pair<std::uint32_t, std::uint32_t>& p) const {
    return (static_cast<std::size_t>(p.first) << 32) | p.second;
}

BddStore::BddStore() {
    // Terminals occupy ids 0 and 1; rank sorts after every decision node.
    nodes_.push_back(Node{-1, 0, 0});
    nodes_.push_back(Node{-1, 1, 1});
}

std::uint32_t BddStore::make(int rank, std::uint32_t low, std::uint32_t high) {
    if (low == high) return low;
    auto key = std::make_tuple(rank, low, high);
    auto it = unique_.find(key);
    if (it != unique_.end()) return it->second;
    auto id = static_cast<std::uint32_t>(nodes_.size());
    nodes_.push_back(Node{rank, low, high});
    unique_.emplace(key, id);
    return id;
}

std::uint32_t BddStore::apply(std::uint32_t a, std::uint32_t b, bool conj) {
    if (a == b) return a;
    if (conj) {
        if (a == kFalse || b == kFalse) return kFalse;
        if (a == kTrue) return b;
        if (b == kTrue) return a;
    } else {
        if (a == kTrue || b == kTrue) return kTrue;
        if (a == kFalse) return b;
        if (b == kFalse) return a;
    }
    auto& cache = conj ? and_cache_ : or_cache_;
    auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    const Node na = nodes_[a];
    const Node nb = nodes_[b];
    int rank;
    std::uint32_t a0, a1, b0, b1;
    if (na.rank == nb.rank) {
        rank = na.rank;
        a0 = na.low; a1 = na.high;
        b0 = nb.low; b1 = nb.high;
    } else if (na.rank < nb.rank) {
        rank = na.rank;
        a0 = na.low; a1 = na.high;
        b0 = b1 = b;
    } else {
        rank = nb.rank;
        a0 = a1 = a;
        b0 = nb.low; b1 = nb.high;
    }
    std::uint32_t low = apply(a0, b0, conj);
    std::uint32_t high = apply(a1, b1, conj);
    std::uint32_t result = make(rank, low, high);
    cache.emplace(key, result);
    return result;
}

std::uint32_t BddStore::apply_and(std::uint32_t a, std::uint32_t b) { return apply(a, b, true); }
std::uint32_t BddStore::apply_or(std::uint32_t a, std::uint32_t b) { return apply(a, b, false); }

std::uint32_t BddStore::negate(std::uint32_t a) {
    if (a == kFalse) return kTrue;
    if (a == kTrue) return kFalse;
    auto it = neg_cache_.find(a);
    if (it != neg_cache_.end()) return it->second;
    const Node n = nodes_[a];
    std::uint32_t result = make(n.rank, negate(n.low), negate(n.high));
    neg_cache_.emplace(a, result);
    return result;
}

std::uint32_t BddStore::restrict_var(std::uint32_t a, int rank, bool value) {
    if (is_terminal(a)) return a;
    const Node n = nodes_[a];
    if (n.rank > rank) return a;
    if (n.rank == rank) return restrict_var(value ? n.high : n.low, rank, value);
    return make(n.rank, restrict_var(n.low, rank, value), restrict_var(n.high, rank, value));
}

std::uint32_t BddStore::from_formula(const MonotoneFormula& phi, const VarOrder& order) {
    switch (phi.kind()) {
    case FormulaKind::True:
        return kTrue;
    case FormulaKind::False:
        return kFalse;
    case FormulaKind::Var:
        return make(order.rank_of(phi.var_index()), kFalse, kTrue);
    case FormulaKind::And:
    case FormulaKind::Or: {
        const bool conj = phi.kind() == FormulaKind::And;
        std::uint32_t acc = conj ? kTrue : kFalse;
        for (const auto& p : phi.parts()) acc = apply(acc, from_formula(p, order), conj);
        return acc;
    }
    }
    throw std::logic_error("unreachable formula kind");
}

bool BddStore::implies(std::uint32_t a, std::uint32_t b) {
    return apply_and(a, negate(b)) == kFalse;
}

Bdd build(const MonotoneFormula& phi, const VarOrder& order) {
    auto store = std::make_shared<BddStore>();
    std::uint32_t root = store->from_formula(phi, order);
    return Bdd{std::move(store), root, order};
}

Bdd condition(const Bdd& b, int axiom_index, bool value) {
    if (!b.store_ || !b.order_.contains(axiom_index)) return b;
    std::uint32_t root = b.store_->restrict_var(b.root_, b.order_.rank_of(axiom_index), value);
    return Bdd{b.store_, root, b.order_};
}

bool equivalent(const Bdd& a, const Bdd& b) {
    if (!(a.order_ == b.order_))
        throw PreconditionError("equivalence check requires identical variable orders");
    if (!a.store_ || !b.store_) return a.root_ == b.root_;
    if (a.store_ == b.store_) return a.root_ == b.root_;
    // Rebuild b's function inside a's store; canonicity reduces the check to
    // root equality.
    std::unordered_map<std::uint32_t, std::uint32_t> memo;
    std::function<std::uint32_t(std::uint32_t)> translate = [&](std::uint32_t id) {
        if (id <= 1) return id;
        auto it = memo.find(id);
        if (it != memo.end()) return it->second;
        const BddStore::Node& n = b.store_->node(id);
        std::uint32_t t = a.store_->make(n.rank, translate(n.low), translate(n.high));
        memo.emplace(id, t);
        return t;
    };
    return translate(b.root_) == a.root_;
}

namespace {
void reachable(const BddStore& store, std::uint32_t id, std::set<std::uint32_t>& seen) {
    if (store.is_terminal(id) || seen.count(id)) return;
    seen.insert(id);
    reachable(store, store.node(id).low, seen);
    reachable(store, store.node(id).high, seen);
}
} // namespace

std::size_t Bdd::node_count() const {
    if (!store_) return 0;
    std::set<std::uint32_t> seen;
    reachable(*store_, root_, seen);
    return seen.size();
}

std::string Bdd::to_text() const {
    std::string out = "root " + std::to_string(root_) + "\n";
    out += "0 terminal false\n1 terminal true\n";
    if (!store_) return out;
    std::set<std::uint32_t> seen;
    reachable(*store_, root_, seen);
    for (std::uint32_t id : seen) {
        const BddStore::Node& n = store_->node(id);
        out += std::to_string(id) + " F" + std::to_string(order_.index_at(n.rank)) + " " +
               std::to_string(n.low) + " " + std::to_string(n.high) + "\n";
    }
    return out;
}

double probability(const Bdd& b, const std::map<int, double>& probs) {
    if (!b.store()) return b.root() == BddStore::kTrue ? 1.0 : 0.0;
    std::unordered_map<std::uint32_t, double> memo;
    std::function<double(std::uint32_t)> pi = [&](std::uint32_t id) -> double {
        if (id == BddStore::kFalse) return 0.0;
        if (id == BddStore::kTrue) return 1.0;
        auto it = memo.find(id);
        if (it != memo.end()) return it->second;
        const BddStore::Node& n = b.store()->node(id);
        int index = b.order().index_at(n.rank);
        auto pit = probs.find(index);
        if (pit == probs.end())
            throw PreconditionError("no probability for axiom variable F" +
                                    std::to_string(index));
        double p = pit->second;
        double value = p * pi(n.high) + (1.0 - p) * pi(n.low);
        memo.emplace(id, value);
        return value;
    };
    return pi(b.root());
}

} // namespace alcprob
