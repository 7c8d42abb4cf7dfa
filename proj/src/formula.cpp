#include "alcprob/formula.hpp"

#include <stdexcept>

namespace alcprob {

MonotoneFormula MonotoneFormula::true_f() {
    static const MonotoneFormula f{std::make_shared<const Node>(Node{FormulaKind::True, 0, {}})};
    return f;
}

MonotoneFormula MonotoneFormula::false_f() {
    static const MonotoneFormula f{std::make_shared<const Node>(Node{FormulaKind::False, 0, {}})};
    return f;
}

MonotoneFormula MonotoneFormula::var(int axiom_index) {
    if (axiom_index < 1) throw std::invalid_argument("axiom index must be positive");
    return MonotoneFormula{
        std::make_shared<const Node>(Node{FormulaKind::Var, axiom_index, {}})};
}

MonotoneFormula MonotoneFormula::nary(FormulaKind kind, std::vector<MonotoneFormula> parts) {
    const bool conj = kind == FormulaKind::And;
    std::vector<MonotoneFormula> flat;
    for (auto& p : parts) {
        if (conj ? p.is_true() : p.is_false()) continue;  // unit
        if (conj ? p.is_false() : p.is_true())
            return conj ? MonotoneFormula::false_f() : MonotoneFormula::true_f();
        if (p.kind() == kind) {
            for (const auto& q : p.parts()) flat.push_back(q);
        } else {
            flat.push_back(std::move(p));
        }
    }
    // Drop exact duplicates, keeping first occurrences.
    std::vector<MonotoneFormula> dedup;
    for (auto& p : flat) {
        bool seen = false;
        for (const auto& q : dedup)
            if (q == p) { seen = true; break; }
        if (!seen) dedup.push_back(std::move(p));
    }
    if (dedup.empty()) return conj ? true_f() : false_f();
    if (dedup.size() == 1) return dedup.front();
    return MonotoneFormula{std::make_shared<const Node>(Node{kind, 0, std::move(dedup)})};
}

MonotoneFormula MonotoneFormula::and_of(std::vector<MonotoneFormula> parts) {
    return nary(FormulaKind::And, std::move(parts));
}

MonotoneFormula MonotoneFormula::or_of(std::vector<MonotoneFormula> parts) {
    return nary(FormulaKind::Or, std::move(parts));
}

bool MonotoneFormula::eval(const std::set<int>& true_vars) const {
    switch (kind()) {
    case FormulaKind::True:
        return true;
    case FormulaKind::False:
        return false;
    case FormulaKind::Var:
        return true_vars.count(var_index()) != 0;
    case FormulaKind::And:
        for (const auto& p : parts())
            if (!p.eval(true_vars)) return false;
        return true;
    case FormulaKind::Or:
        for (const auto& p : parts())
            if (p.eval(true_vars)) return true;
        return false;
    }
    throw std::logic_error("unreachable formula kind");
}

namespace {
void collect_vars(const MonotoneFormula& f, std::set<int>& out) {
    if (f.kind() == FormulaKind::Var) {
        out.insert(f.var_index());
    } else {
        for (const auto& p : f.parts()) collect_vars(p, out);
    }
}

void print(const MonotoneFormula& f, std::string& out, bool parenthesize) {
    switch (f.kind()) {
    case FormulaKind::True:
        out += "true";
        return;
    case FormulaKind::False:
        out += "false";
        return;
    case FormulaKind::Var:
        out += "F" + std::to_string(f.var_index());
        return;
    case FormulaKind::And:
    case FormulaKind::Or: {
        const char* op = f.kind() == FormulaKind::And ? " & " : " | ";
        if (parenthesize) out += "(";
        for (std::size_t i = 0; i < f.parts().size(); ++i) {
            if (i) out += op;
            print(f.parts()[i], out, true);
        }
        if (parenthesize) out += ")";
        return;
    }
    }
}
} // namespace

std::set<int> MonotoneFormula::variables() const {
    std::set<int> out;
    collect_vars(*this, out);
    return out;
}

std::string MonotoneFormula::to_string() const {
    std::string out;
    print(*this, out, false);
    return out;
}

int compare(const MonotoneFormula& a, const MonotoneFormula& b) {
    if (a.node_ == b.node_) return 0;
    if (a.kind() != b.kind())
        return static_cast<int>(a.kind()) < static_cast<int>(b.kind()) ? -1 : 1;
    if (a.var_index() != b.var_index()) return a.var_index() < b.var_index() ? -1 : 1;
    const auto& ap = a.parts();
    const auto& bp = b.parts();
    if (ap.size() != bp.size()) return ap.size() < bp.size() ? -1 : 1;
    for (std::size_t i = 0; i < ap.size(); ++i)
        if (int c = compare(ap[i], bp[i]); c != 0) return c;
    return 0;
}

} // namespace alcprob
