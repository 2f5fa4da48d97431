#pragma once

#include "ssu/analysis.hpp"
#include "ssu/document.hpp"
#include "ssu/errors.hpp"
#include "ssu/expression.hpp"
#include "ssu/notation.hpp"
#include "ssu/span_algebra.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <string>

namespace th {

inline ssu::SystemPtr example(const std::string& name) { return ssu::load_system_text(ssu::bundled_example(name)); }

inline ssu::SystemPtr graph(const std::string& json) { return ssu::load_system_text(json); }

inline ssu::Path P(const ssu::SelfSimilarSystem& s, const std::string& t) { return ssu::parse_path(s.graph(), t); }
inline ssu::VertexSet S(const ssu::SelfSimilarSystem& s, const std::string& t) {
    return ssu::parse_set(s.graph().universe(), t);
}
inline ssu::Edge E(const ssu::SelfSimilarSystem& s, const std::string& t) { return *s.graph().find_edge(t); }
inline ssu::Vertex V(const ssu::SelfSimilarSystem& s, const std::string& t) {
    return *s.graph().universe().find_vertex(t);
}
inline ssu::Element Q(const ssu::SelfSimilarSystem& s, const std::string& t) { return ssu::parse_element(s, t); }
inline std::string F(const ssu::SelfSimilarSystem& s, const ssu::Element& e) { return ssu::format_element(s, e); }
inline ssu::Lasso L(const ssu::SelfSimilarSystem& s, const std::string& t) { return ssu::parse_lasso(s.graph(), t); }

// A single vertex with one loop and a trivial group.
inline const char* kSingleLoop = R"({
  "name": "loop",
  "universe": {"kind": "finite", "vertices": ["u"]},
  "edges": [{"id": "a", "range": "u", "source": "FIN{u}"}],
  "group": {"kind": "finite_table", "elements": ["1"], "table": [["1"]], "identity": "1", "generators": [], "amenable": true},
  "action": {"kind": "permutation", "generators": {}},
  "cocycle": "trivial"
})";

// Two disjoint loops under the trivial group.
inline const char* kTwoLoops = R"({
  "name": "two-loops",
  "universe": {"kind": "finite", "vertices": ["a", "b"]},
  "edges": [{"id": "p", "range": "a", "source": "FIN{a}"}, {"id": "q", "range": "b", "source": "FIN{b}"}],
  "group": {"kind": "finite_table", "elements": ["1"], "table": [["1"]], "identity": "1", "generators": [], "amenable": true},
  "action": {"kind": "permutation", "generators": {}},
  "cocycle": "trivial"
})";

}  // namespace th
