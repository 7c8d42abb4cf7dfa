#include "alcprob/concept.hpp"

#include <stdexcept>

namespace alcprob {

Concept Concept::top() {
    static const Concept c{std::make_shared<const Node>(Node{ConceptKind::Top, {}, {}})};
    return c;
}

Concept Concept::bottom() {
    static const Concept c{std::make_shared<const Node>(Node{ConceptKind::Bottom, {}, {}})};
    return c;
}

Concept Concept::atomic(std::string name) {
    return Concept{std::make_shared<const Node>(Node{ConceptKind::Atomic, std::move(name), {}})};
}

Concept Concept::negation(Concept inner) {
    return Concept{std::make_shared<const Node>(
        Node{ConceptKind::Not, {}, {std::move(inner)}})};
}

Concept Concept::conjunction(std::vector<Concept> parts) {
    if (parts.size() < 2)
        throw std::invalid_argument("conjunction requires at least two parts");
    return Concept{std::make_shared<const Node>(Node{ConceptKind::And, {}, std::move(parts)})};
}

Concept Concept::disjunction(std::vector<Concept> parts) {
    if (parts.size() < 2)
        throw std::invalid_argument("disjunction requires at least two parts");
    return Concept{std::make_shared<const Node>(Node{ConceptKind::Or, {}, std::move(parts)})};
}

Concept Concept::exists(std::string role, Concept filler) {
    return Concept{std::make_shared<const Node>(
        Node{ConceptKind::Exists, std::move(role), {std::move(filler)}})};
}

Concept Concept::for_all(std::string role, Concept filler) {
    return Concept{std::make_shared<const Node>(
        Node{ConceptKind::ForAll, std::move(role), {std::move(filler)}})};
}

int compare(const Concept& a, const Concept& b) {
    if (a.node_ == b.node_) return 0;
    if (a.kind() != b.kind())
        return static_cast<int>(a.kind()) < static_cast<int>(b.kind()) ? -1 : 1;
    if (int c = a.node_->name.compare(b.node_->name); c != 0) return c < 0 ? -1 : 1;
    const auto& ap = a.node_->parts;
    const auto& bp = b.node_->parts;
    if (ap.size() != bp.size()) return ap.size() < bp.size() ? -1 : 1;
    for (std::size_t i = 0; i < ap.size(); ++i)
        if (int c = compare(ap[i], bp[i]); c != 0) return c;
    return 0;
}

namespace {

// Flattens same-kind parts, drops neutral elements, collapses on an
// absorbing element, and deduplicates. Keeps nnf output small so the
// tableau does not split on vacuous disjunctions like "Thing or C".
Concept simplified_nary(ConceptKind kind, std::vector<Concept> raw) {
    const Concept neutral = kind == ConceptKind::And ? Concept::top() : Concept::bottom();
    const Concept absorbing = kind == ConceptKind::And ? Concept::bottom() : Concept::top();
    std::vector<Concept> parts;
    for (auto& p : raw) {
        if (p == absorbing) return absorbing;
        if (p == neutral) continue;
        if (p.kind() == kind) {
            for (const auto& q : p.parts()) {
                if (q == absorbing) return absorbing;
                bool seen = false;
                for (const auto& kept : parts)
                    if (kept == q) { seen = true; break; }
                if (!seen) parts.push_back(q);
            }
            continue;
        }
        bool seen = false;
        for (const auto& kept : parts)
            if (kept == p) { seen = true; break; }
        if (!seen) parts.push_back(std::move(p));
    }
    // A complementary literal pair collapses the whole term.
    for (const auto& p : parts) {
        if (!p.is(ConceptKind::Atomic) && !p.is(ConceptKind::Not)) continue;
        Concept complement = p.is(ConceptKind::Not) ? p.inner() : Concept::negation(p);
        for (const auto& q : parts)
            if (q == complement) return absorbing;
    }
    if (parts.empty()) return neutral;
    if (parts.size() == 1) return parts.front();
    return kind == ConceptKind::And ? Concept::conjunction(std::move(parts))
                                    : Concept::disjunction(std::move(parts));
}

Concept simplified_exists(std::string role, Concept filler) {
    if (filler.is(ConceptKind::Bottom)) return Concept::bottom();
    return Concept::exists(std::move(role), std::move(filler));
}

Concept simplified_for_all(std::string role, Concept filler) {
    if (filler.is(ConceptKind::Top)) return Concept::top();
    return Concept::for_all(std::move(role), std::move(filler));
}

Concept nnf_neg(const Concept& c);

Concept nnf_pos(const Concept& c) {
    switch (c.kind()) {
    case ConceptKind::Top:
    case ConceptKind::Bottom:
    case ConceptKind::Atomic:
        return c;
    case ConceptKind::Not:
        return nnf_neg(c.inner());
    case ConceptKind::And:
    case ConceptKind::Or: {
        std::vector<Concept> parts;
        parts.reserve(c.parts().size());
        for (const auto& p : c.parts()) parts.push_back(nnf_pos(p));
        return simplified_nary(c.kind(), std::move(parts));
    }
    case ConceptKind::Exists:
        return simplified_exists(c.role(), nnf_pos(c.inner()));
    case ConceptKind::ForAll:
        return simplified_for_all(c.role(), nnf_pos(c.inner()));
    }
    throw std::logic_error("unreachable concept kind");
}

// NNF of the negation of c.
Concept nnf_neg(const Concept& c) {
    switch (c.kind()) {
    case ConceptKind::Top:
        return Concept::bottom();
    case ConceptKind::Bottom:
        return Concept::top();
    case ConceptKind::Atomic:
        return Concept::negation(c);
    case ConceptKind::Not:
        return nnf_pos(c.inner());
    case ConceptKind::And:
    case ConceptKind::Or: {
        std::vector<Concept> parts;
        parts.reserve(c.parts().size());
        for (const auto& p : c.parts()) parts.push_back(nnf_neg(p));
        return simplified_nary(
            c.kind() == ConceptKind::And ? ConceptKind::Or : ConceptKind::And, std::move(parts));
    }
    case ConceptKind::Exists:
        return simplified_for_all(c.role(), nnf_neg(c.inner()));
    case ConceptKind::ForAll:
        return simplified_exists(c.role(), nnf_neg(c.inner()));
    }
    throw std::logic_error("unreachable concept kind");
}

} // namespace

Concept nnf(const Concept& c) { return nnf_pos(c); }

bool is_in_nnf(const Concept& c) {
    switch (c.kind()) {
    case ConceptKind::Top:
    case ConceptKind::Bottom:
    case ConceptKind::Atomic:
        return true;
    case ConceptKind::Not:
        return c.inner().kind() == ConceptKind::Atomic;
    case ConceptKind::And:
    case ConceptKind::Or: {
        for (const auto& p : c.parts())
            if (!is_in_nnf(p)) return false;
        return true;
    }
    case ConceptKind::Exists:
    case ConceptKind::ForAll:
        return is_in_nnf(c.inner());
    }
    return false;
}

} // namespace alcprob
