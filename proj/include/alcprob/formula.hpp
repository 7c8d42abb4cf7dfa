#ifndef ALCPROB_FORMULA_HPP
#define ALCPROB_FORMULA_HPP

#include <memory>
#include <set>
#include <string>
#include <vector>

namespace alcprob {

enum class FormulaKind { True, False, Var, And, Or };

// Negation-free propositional formula over KB axiom indices. Immutable;
// copies share structure.
class MonotoneFormula {
public:
    MonotoneFormula() : MonotoneFormula(false_f()) {}

    static MonotoneFormula true_f();
    static MonotoneFormula false_f();
    static MonotoneFormula var(int axiom_index);
    // Smart constructors: flatten nested same-kind parts, drop units, and
    // collapse to a constant when one operand forces it. The relative order
    // of surviving parts is preserved.
    static MonotoneFormula and_of(std::vector<MonotoneFormula> parts);
    static MonotoneFormula or_of(std::vector<MonotoneFormula> parts);

    FormulaKind kind() const { return node_->kind; }
    int var_index() const { return node_->var; }
    const std::vector<MonotoneFormula>& parts() const { return node_->parts; }

    bool is_true() const { return kind() == FormulaKind::True; }
    bool is_false() const { return kind() == FormulaKind::False; }

    // Truth under the valuation that makes exactly the given variables true.
    bool eval(const std::set<int>& true_vars) const;

    // Variables occurring in the formula, ascending.
    std::set<int> variables() const;

    // "F<i>", "&", "|", parentheses, "true"/"false".
    std::string to_string() const;

    friend int compare(const MonotoneFormula& a, const MonotoneFormula& b);
    friend bool operator==(const MonotoneFormula& a, const MonotoneFormula& b) {
        return compare(a, b) == 0;
    }

private:
    struct Node {
        FormulaKind kind;
        int var = 0;
        std::vector<MonotoneFormula> parts;
    };
    explicit MonotoneFormula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    static MonotoneFormula nary(FormulaKind kind, std::vector<MonotoneFormula> parts);
    std::shared_ptr<const Node> node_;
};

} // namespace alcprob

#endif
