#include "doctest.h"

#include <random>

#include "alcprob/parser.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace alcprob;
using namespace alcprob::test;

namespace {

ParseError capture(const std::string& text) {
    try {
        parse_kb(text);
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("expected a parse error for: " << text);
    throw std::logic_error("unreachable");
}

} // namespace

TEST_CASE("parses every statement form") {
    KnowledgeBase kb = parse_kb(
        "# leading comment\n"
        "\n"
        "SubClassOf(Cat, Pet)\n"
        "0.6 :: SubClassOf(Cat, Pet)\n"
        "ClassAssertion(ObjectIntersectionOf(A, ObjectComplementOf(B)), tom)  # trailing\n"
        "ObjectPropertyAssertion(hasAnimal, kevin, tom)\n"
        "0.5 :: ClassAssertion(ObjectSomeValuesFrom(hasAnimal, Pet), kevin)\n");
    REQUIRE(kb.size() == 5);
    CHECK_FALSE(kb.at(1).probability.has_value());
    CHECK(kb.at(2).probability == 0.6);
    CHECK(kb.at(1).axiom == kb.at(2).axiom);
    CHECK(kb.at(3).axiom.kind == AxiomKind::ClassAssertion);
    CHECK(kb.at(4).axiom.kind == AxiomKind::PropertyAssertion);
    CHECK(kb.at(4).axiom.role == "hasAnimal");
    CHECK(kb.at(5).axiom.c1 == Concept::exists("hasAnimal", Concept::atomic("Pet")));
}

TEST_CASE("parses nested constructors and n-ary intersections") {
    KnowledgeBase kb = parse_kb(
        "SubClassOf(ObjectUnionOf(A, B, C), ObjectAllValuesFrom(R, "
        "ObjectIntersectionOf(Thing, Nothing, ObjectComplementOf(D))))\n");
    const Axiom& ax = kb.at(1).axiom;
    CHECK(ax.c1 == Concept::disjunction(
                       {Concept::atomic("A"), Concept::atomic("B"), Concept::atomic("C")}));
    CHECK(ax.c2 ==
          Concept::for_all("R", Concept::conjunction({Concept::top(), Concept::bottom(),
                                                      Concept::negation(Concept::atomic("D"))})));
}

TEST_CASE("EquivalentClasses desugars to two inclusions") {
    KnowledgeBase kb = parse_kb("0.9 :: EquivalentClasses(A, B)\nClassAssertion(A, a)\n");
    REQUIRE(kb.size() == 3);
    CHECK(kb.at(1).axiom == Axiom::sub_class_of(Concept::atomic("A"), Concept::atomic("B")));
    CHECK(kb.at(2).axiom == Axiom::sub_class_of(Concept::atomic("B"), Concept::atomic("A")));
    CHECK(kb.at(1).probability == 0.9);
    CHECK(kb.at(2).probability == 0.9);
    CHECK(kb.at(3).axiom.kind == AxiomKind::ClassAssertion);
}

TEST_CASE("fixtures parse to the expected sizes") {
    CHECK(example1_kb().size() == 6);
    CHECK(example2_kb().size() == 5);
    CHECK(example3_kb().size() == 6);
}

TEST_CASE("syntax errors carry line and column") {
    ParseError e = capture("SubClassOf(Cat, Pet)\nSubClassOf(Cat Pet)\n");
    CHECK(e.kind() == ParseErrorKind::Syntax);
    CHECK(e.line() == 2);
    CHECK(e.column() == 16);
    CHECK(std::string(e.what()).rfind("2:16:", 0) == 0);

    CHECK(capture("SubClassOf(Cat, Pet) trailing").kind() == ParseErrorKind::Syntax);
    CHECK(capture("SubClassOf(Cat, Pet").kind() == ParseErrorKind::Syntax);
    CHECK(capture("0.5 SubClassOf(Cat, Pet)").kind() == ParseErrorKind::Syntax);
    CHECK(capture("ClassAssertion(9Cat, tom)").kind() == ParseErrorKind::Syntax);
}

TEST_CASE("probability errors") {
    ParseError zero = capture("0.0 :: SubClassOf(Cat, Pet)");
    CHECK(zero.kind() == ParseErrorKind::BadProbability);
    CHECK(zero.line() == 1);
    CHECK(capture("1.5 :: SubClassOf(Cat, Pet)").kind() == ParseErrorKind::BadProbability);
    CHECK(capture("0. :: SubClassOf(Cat, Pet)").kind() == ParseErrorKind::BadProbability);
    // 1 is allowed.
    KnowledgeBase kb = parse_kb("1 :: SubClassOf(Cat, Pet)\n1.0 :: SubClassOf(A, B)\n");
    CHECK(kb.at(1).probability == 1.0);
    CHECK(kb.at(2).probability == 1.0);
}

TEST_CASE("arity errors") {
    CHECK(capture("SubClassOf(Cat)").kind() == ParseErrorKind::Arity);
    CHECK(capture("SubClassOf(Cat, Pet, Dog)").kind() == ParseErrorKind::Arity);
    CHECK(capture("ClassAssertion(Cat, tom, extra)").kind() == ParseErrorKind::Arity);
    CHECK(capture("ObjectPropertyAssertion(R, a)").kind() == ParseErrorKind::Arity);
    CHECK(capture("SubClassOf(ObjectComplementOf(A, B), C)").kind() == ParseErrorKind::Arity);
    CHECK(capture("SubClassOf(ObjectUnionOf(A), C)").kind() == ParseErrorKind::Arity);
    CHECK(capture("SubClassOf(ObjectSomeValuesFrom(R), C)").kind() == ParseErrorKind::Arity);
}

TEST_CASE("unknown constructs") {
    CHECK(capture("DisjointClasses(A, B)").kind() == ParseErrorKind::UnknownConstruct);
    CHECK(capture("SubClassOf(ObjectMinCardinality(2, R), B)").kind() ==
          ParseErrorKind::UnknownConstruct);
}

TEST_CASE("parse_query accepts class axioms only") {
    Query q1 = parse_query("ClassAssertion(NatureLover, kevin)");
    CHECK(q1.kind == QueryKind::IsInstance);
    CHECK(q1.c1 == Concept::atomic("NatureLover"));
    CHECK(q1.individual == "kevin");

    Query q2 = parse_query("SubClassOf(Cat, ObjectUnionOf(Pet, Dog))");
    CHECK(q2.kind == QueryKind::IsSubClass);

    CHECK_THROWS_AS(parse_query("ObjectPropertyAssertion(R, a, b)"), ParseError);
    CHECK_THROWS_AS(parse_query("EquivalentClasses(A, B)"), ParseError);
    CHECK_THROWS_AS(parse_query("0.5 :: ClassAssertion(A, a)"), ParseError);
    CHECK_THROWS_AS(parse_query(""), ParseError);
    CHECK_THROWS_AS(parse_query("ClassAssertion(A, a) x"), ParseError);
}

TEST_CASE("serialize_probability uses the shortest fixed form") {
    CHECK(serialize_probability(0.5) == "0.5");
    CHECK(serialize_probability(1.0) == "1");
    CHECK(serialize_probability(0.3) == "0.3");
    CHECK(serialize_probability(0.125) == "0.125");
}

TEST_CASE("serialization round-trips the fixtures textually") {
    for (const char* fixture : {"example1.dlp", "example2.dlp", "example3.dlp"}) {
        KnowledgeBase kb = load_fixture(fixture);
        std::string text = serialize_kb(kb);
        KnowledgeBase again = parse_kb(text);
        REQUIRE(again.size() == kb.size());
        for (int i = 1; i <= kb.size(); ++i) {
            CHECK(again.at(i).axiom == kb.at(i).axiom);
            CHECK(again.at(i).probability == kb.at(i).probability);
        }
        CHECK(serialize_kb(again) == text);
    }
}

TEST_CASE("serialization round-trips random KBs exactly") {
    std::mt19937 rng(20240812);
    for (int round = 0; round < 200; ++round) {
        KnowledgeBase kb = random_kb(rng, 8, 8);
        KnowledgeBase again = parse_kb(serialize_kb(kb));
        REQUIRE(again.size() == kb.size());
        for (int i = 1; i <= kb.size(); ++i) {
            CHECK(again.at(i).axiom == kb.at(i).axiom);
            CHECK(again.at(i).probability == kb.at(i).probability);
        }
    }
}
