#include "alcprob/parser.hpp"

#include <cctype>
#include <charconv>
#include <utility>
#include <vector>

namespace alcprob {

namespace {

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// Cursor over a single statement line. Columns are 1-based; the '#' comment
// part has already been stripped.
struct Cursor {
    std::string_view text;
    int line;
    std::size_t pos = 0;

    [[noreturn]] void fail(ParseErrorKind kind, const std::string& message,
                           std::size_t at) const {
        throw ParseError(line, static_cast<int>(at) + 1, kind, message);
    }
    [[noreturn]] void fail(ParseErrorKind kind, const std::string& message) const {
        fail(kind, message, pos < text.size() ? pos : (text.empty() ? 0 : text.size() - 1));
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool consume(char c) {
        if (peek() != c) return false;
        ++pos;
        return true;
    }
    void expect(char c) {
        if (!consume(c)) fail(ParseErrorKind::Syntax, std::string("expected '") + c + "'");
    }

    std::string parse_name() {
        skip_ws();
        if (pos >= text.size() || !is_name_start(text[pos]))
            fail(ParseErrorKind::Syntax, "expected a name");
        std::size_t start = pos;
        while (pos < text.size() && is_name_char(text[pos])) ++pos;
        return std::string(text.substr(start, pos - start));
    }
};

Concept parse_concept(Cursor& cur);

std::string parse_role_argument(Cursor& cur) { return cur.parse_name(); }

// Parses "(" item {"," item} ")" and returns the closing-paren position for
// arity diagnostics.
template <typename Item, typename ParseItem>
std::pair<std::vector<Item>, std::size_t> parse_args(Cursor& cur, ParseItem parse_item) {
    cur.expect('(');
    std::vector<Item> items;
    items.push_back(parse_item(cur));
    while (cur.consume(',')) items.push_back(parse_item(cur));
    std::size_t close_at = cur.pos;
    cur.skip_ws();
    close_at = cur.pos;
    cur.expect(')');
    return {std::move(items), close_at};
}

void require_arity(const Cursor& cur, const std::string& ctor, std::size_t got,
                   std::size_t want, std::size_t at) {
    if (got != want)
        cur.fail(ParseErrorKind::Arity,
                 ctor + " takes " + std::to_string(want) + " arguments, got " +
                     std::to_string(got),
                 at);
}

Concept parse_concept(Cursor& cur) {
    std::size_t name_at = cur.pos;
    cur.skip_ws();
    name_at = cur.pos;
    std::string name = cur.parse_name();
    if (cur.peek() != '(') {
        if (name == "Thing") return Concept::top();
        if (name == "Nothing") return Concept::bottom();
        return Concept::atomic(std::move(name));
    }
    if (name == "ObjectIntersectionOf" || name == "ObjectUnionOf") {
        auto [parts, close_at] = parse_args<Concept>(cur, parse_concept);
        if (parts.size() < 2)
            cur.fail(ParseErrorKind::Arity, name + " takes at least 2 arguments", close_at);
        return name == "ObjectIntersectionOf" ? Concept::conjunction(std::move(parts))
                                              : Concept::disjunction(std::move(parts));
    }
    if (name == "ObjectComplementOf") {
        auto [parts, close_at] = parse_args<Concept>(cur, parse_concept);
        require_arity(cur, name, parts.size(), 1, close_at);
        return Concept::negation(std::move(parts.front()));
    }
    if (name == "ObjectSomeValuesFrom" || name == "ObjectAllValuesFrom") {
        cur.expect('(');
        std::string role = parse_role_argument(cur);
        cur.skip_ws();
        if (cur.peek() == ')')
            cur.fail(ParseErrorKind::Arity, name + " takes 2 arguments", cur.pos);
        cur.expect(',');
        Concept filler = parse_concept(cur);
        cur.skip_ws();
        std::size_t close_at = cur.pos;
        if (cur.consume(',')) cur.fail(ParseErrorKind::Arity, name + " takes 2 arguments", close_at);
        cur.expect(')');
        return name == "ObjectSomeValuesFrom" ? Concept::exists(std::move(role), std::move(filler))
                                              : Concept::for_all(std::move(role), std::move(filler));
    }
    cur.fail(ParseErrorKind::UnknownConstruct, "unknown concept constructor " + name, name_at);
}

// Parsed statement body; EquivalentClasses yields two axioms.
std::vector<Axiom> parse_axiom_body(Cursor& cur, bool allow_equivalent) {
    cur.skip_ws();
    std::size_t name_at = cur.pos;
    std::string name = cur.parse_name();
    if (cur.peek() != '(')
        cur.fail(ParseErrorKind::Syntax, "expected an axiom constructor application", name_at);
    if (name == "SubClassOf" || (allow_equivalent && name == "EquivalentClasses")) {
        auto [parts, close_at] = parse_args<Concept>(cur, parse_concept);
        require_arity(cur, name, parts.size(), 2, close_at);
        if (name == "SubClassOf") return {Axiom::sub_class_of(parts[0], parts[1])};
        return {Axiom::sub_class_of(parts[0], parts[1]), Axiom::sub_class_of(parts[1], parts[0])};
    }
    if (name == "ClassAssertion") {
        cur.expect('(');
        Concept term = parse_concept(cur);
        cur.expect(',');
        std::string individual = cur.parse_name();
        cur.skip_ws();
        std::size_t close_at = cur.pos;
        if (cur.consume(','))
            cur.fail(ParseErrorKind::Arity, "ClassAssertion takes 2 arguments", close_at);
        cur.expect(')');
        return {Axiom::class_assertion(std::move(term), std::move(individual))};
    }
    if (name == "ObjectPropertyAssertion") {
        auto [parts, close_at] =
            parse_args<std::string>(cur, [](Cursor& c) { return c.parse_name(); });
        require_arity(cur, name, parts.size(), 3, close_at);
        return {Axiom::property_assertion(parts[0], parts[1], parts[2])};
    }
    cur.fail(ParseErrorKind::UnknownConstruct, "unknown axiom constructor " + name, name_at);
}

// Optional "p ::" prefix.
std::optional<double> parse_probability_prefix(Cursor& cur) {
    cur.skip_ws();
    std::size_t start = cur.pos;
    if (start >= cur.text.size() ||
        !(std::isdigit(static_cast<unsigned char>(cur.text[start])) || cur.text[start] == '.'))
        return std::nullopt;
    std::size_t end = start;
    auto digits = [&](std::size_t& i) {
        std::size_t n = 0;
        while (i < cur.text.size() && std::isdigit(static_cast<unsigned char>(cur.text[i]))) {
            ++i;
            ++n;
        }
        return n;
    };
    std::size_t int_digits = digits(end);
    if (int_digits == 0)
        cur.fail(ParseErrorKind::BadProbability, "probability is not a decimal literal", start);
    if (end < cur.text.size() && cur.text[end] == '.') {
        ++end;
        if (digits(end) == 0)
            cur.fail(ParseErrorKind::BadProbability, "probability is not a decimal literal",
                     start);
    }
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(cur.text.data() + start, cur.text.data() + end, value);
    if (ec != std::errc() || ptr != cur.text.data() + end)
        cur.fail(ParseErrorKind::BadProbability, "probability is not a decimal literal", start);
    cur.pos = end;
    cur.skip_ws();
    if (cur.pos + 1 >= cur.text.size() || cur.text[cur.pos] != ':' || cur.text[cur.pos + 1] != ':')
        cur.fail(ParseErrorKind::Syntax, "expected '::' after probability");
    cur.pos += 2;
    if (!(value > 0.0 && value <= 1.0))
        cur.fail(ParseErrorKind::BadProbability,
                 "probability must lie in (0, 1], got " + std::string(cur.text, start, end - start),
                 start);
    return value;
}

std::string_view strip_comment(std::string_view line) {
    auto hash = line.find('#');
    return hash == std::string_view::npos ? line : line.substr(0, hash);
}

bool blank(std::string_view line) {
    for (char c : line)
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

KnowledgeBase parse_kb(std::string_view text) {
    std::vector<std::pair<Axiom, std::optional<double>>> axioms;
    int line_no = 0;
    while (!text.empty() || line_no == 0) {
        auto nl = text.find('\n');
        std::string_view line = nl == std::string_view::npos ? text : text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        std::string_view body = strip_comment(line);
        if (blank(body)) {
            if (nl == std::string_view::npos) break;
            continue;
        }
        Cursor cur{body, line_no};
        std::optional<double> prob = parse_probability_prefix(cur);
        std::vector<Axiom> parsed = parse_axiom_body(cur, /*allow_equivalent=*/true);
        if (!cur.at_end())
            cur.fail(ParseErrorKind::Syntax, "unexpected trailing input after axiom");
        for (auto& axiom : parsed) axioms.emplace_back(std::move(axiom), prob);
        if (nl == std::string_view::npos) break;
    }
    return KnowledgeBase::from_axioms(std::move(axioms));
}

Query parse_query(std::string_view text) {
    Cursor cur{strip_comment(text), 1};
    cur.skip_ws();
    std::size_t name_at = cur.pos;
    // Peek at the constructor name to reject non-query axioms up front.
    {
        Cursor probe = cur;
        std::string name = probe.parse_name();
        if (name != "ClassAssertion" && name != "SubClassOf")
            cur.fail(ParseErrorKind::UnknownConstruct,
                     name + " is not a query constructor (use ClassAssertion or SubClassOf)",
                     name_at);
    }
    std::vector<Axiom> parsed = parse_axiom_body(cur, /*allow_equivalent=*/false);
    if (!cur.at_end())
        cur.fail(ParseErrorKind::Syntax, "unexpected trailing input after query");
    const Axiom& axiom = parsed.front();
    if (axiom.kind == AxiomKind::ClassAssertion)
        return Query::is_instance(axiom.c1, axiom.a);
    return Query::is_sub_class(axiom.c1, axiom.c2);
}

std::string serialize_concept(const Concept& c) {
    switch (c.kind()) {
    case ConceptKind::Top:
        return "Thing";
    case ConceptKind::Bottom:
        return "Nothing";
    case ConceptKind::Atomic:
        return c.name();
    case ConceptKind::Not:
        return "ObjectComplementOf(" + serialize_concept(c.inner()) + ")";
    case ConceptKind::And:
    case ConceptKind::Or: {
        std::string out =
            c.kind() == ConceptKind::And ? "ObjectIntersectionOf(" : "ObjectUnionOf(";
        for (std::size_t i = 0; i < c.parts().size(); ++i) {
            if (i) out += ", ";
            out += serialize_concept(c.parts()[i]);
        }
        return out + ")";
    }
    case ConceptKind::Exists:
        return "ObjectSomeValuesFrom(" + c.role() + ", " + serialize_concept(c.inner()) + ")";
    case ConceptKind::ForAll:
        return "ObjectAllValuesFrom(" + c.role() + ", " + serialize_concept(c.inner()) + ")";
    }
    return {};
}

std::string serialize_axiom(const Axiom& axiom) {
    switch (axiom.kind) {
    case AxiomKind::SubClassOf:
        return "SubClassOf(" + serialize_concept(axiom.c1) + ", " + serialize_concept(axiom.c2) +
               ")";
    case AxiomKind::ClassAssertion:
        return "ClassAssertion(" + serialize_concept(axiom.c1) + ", " + axiom.a + ")";
    case AxiomKind::PropertyAssertion:
        return "ObjectPropertyAssertion(" + axiom.role + ", " + axiom.a + ", " + axiom.b + ")";
    }
    return {};
}

std::string serialize_probability(double p) {
    char buf[512];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), p, std::chars_format::fixed);
    if (ec != std::errc()) return "0";
    return std::string(buf, ptr);
}

std::string serialize_kb(const KnowledgeBase& kb) {
    std::string out;
    for (const AnnotatedAxiom& ax : kb.axioms()) {
        if (ax.probability) out += serialize_probability(*ax.probability) + " :: ";
        out += serialize_axiom(ax.axiom);
        out += "\n";
    }
    return out;
}

} // namespace alcprob
