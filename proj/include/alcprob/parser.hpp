#ifndef ALCPROB_PARSER_HPP
#define ALCPROB_PARSER_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "alcprob/kb.hpp"

namespace alcprob {

enum class ParseErrorKind { Syntax, BadProbability, Arity, UnknownConstruct };

class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, ParseErrorKind kind, const std::string& message)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " +
                             message),
          line_(line), column_(column), kind_(kind), message_(message) {}

    int line() const { return line_; }
    int column() const { return column_; }
    ParseErrorKind kind() const { return kind_; }
    const std::string& message() const { return message_; }

private:
    int line_;
    int column_;
    ParseErrorKind kind_;
    std::string message_;
};

// Parses the textual KB format: one statement per line, optionally prefixed
// with "p ::", '#' comments, blank lines ignored. EquivalentClasses(A, B)
// desugars into SubClassOf(A, B) and SubClassOf(B, A) at consecutive indices.
KnowledgeBase parse_kb(std::string_view text);

// Parses a single ClassAssertion or SubClassOf axiom as a query.
// ObjectPropertyAssertion is rejected as an unknown construct.
Query parse_query(std::string_view text);

// Inverse of parse_kb: parse_kb(serialize_kb(kb)) reproduces kb exactly.
std::string serialize_kb(const KnowledgeBase& kb);

std::string serialize_concept(const Concept& c);
std::string serialize_axiom(const Axiom& axiom);
// Probability rendered in fixed notation with the fewest digits that
// round-trip, independent of locale.
std::string serialize_probability(double p);

} // namespace alcprob

#endif
