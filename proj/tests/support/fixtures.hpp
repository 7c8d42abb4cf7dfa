#ifndef ALCPROB_TESTS_FIXTURES_HPP
#define ALCPROB_TESTS_FIXTURES_HPP

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "alcprob/parser.hpp"

namespace alcprob::test {

inline std::string fixture_path(const std::string& name) {
    return std::string(ALCPROB_FIXTURES_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline KnowledgeBase load_fixture(const std::string& name) {
    return parse_kb(read_file(fixture_path(name)));
}

// The people+pets KB: probabilistic NatureLover GCI (0.5) and Cat<=Pet (0.6),
// certain edges and cat assertions for kevin, tom and fluffy.
inline KnowledgeBase example1_kb() { return load_fixture("example1.dlp"); }

// Single cat, two independent sources (0.4 and 0.3) for fluffy being a cat.
inline KnowledgeBase example2_kb() { return load_fixture("example2.dlp"); }

// Same axioms as example1 ordered so indices match the F1..F6 variables.
inline KnowledgeBase example3_kb() { return load_fixture("example3.dlp"); }

inline Query nature_lover_query() {
    return parse_query("ClassAssertion(NatureLover, kevin)");
}

} // namespace alcprob::test

#endif
