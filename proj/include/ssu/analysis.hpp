#pragma once

#include "ssu/filters.hpp"
#include "ssu/verdict.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ssu {

struct GCycle {
    GroupElem g = 0;
    Path gamma;
    bool operator==(const GCycle&) const = default;
};

bool is_g_cycle(const SelfSimilarSystem& sys, GroupElem g, const Path& gamma);

// Pairs (g, gamma) with g in the ball and |gamma| <= max_path_len, ordered by
// ball position of g, then lexicographically by gamma. Indexed universes use
// paths starting at index 0 with later edges inside [-max_path_len,
// max_path_len] (translation representatives).
std::vector<GCycle> find_g_cycles(const SelfSimilarSystem& sys, const Bounds& b, int threads = 1);

// Operative characterisation: no entrance iff s(e_i)U^1 = {e_{i+1}} and
// s(e_n)U^1 = {g.e_1}.
bool has_entrance(const SelfSimilarSystem& sys, const GCycle& c);
// An edge of s(e_i)U^1 other than the forced successor, if any.
std::optional<Witness> entrance_witness(const SelfSimilarSystem& sys, const GCycle& c);
// The literal clause: some edge other than e_i has range r(e_i).
bool has_literal_entrance(const SelfSimilarSystem& sys, const GCycle& c);

// x = gamma_1 gamma_2 ... with gamma_{n+1} = g_n.gamma_n, g_{n+1} = phi(g_n, gamma_n).
std::optional<Lasso> cycle_infinite_path(const SelfSimilarSystem& sys, const GCycle& c, const Bounds& b);

// Every G-cycle (whole group, any length) has an entrance. Exact on finite
// universes.
Verdict all_cycles_have_entrances(const SelfSimilarSystem& sys, const Bounds& b);

Verdict check_g_cofinality(const SelfSimilarSystem& sys, const Bounds& b);

// g.x = x for every infinite path x with r(x) inside A.
Verdict fixes_all_paths(const SelfSimilarSystem& sys, GroupElem g, const VertexSet& a, const Bounds& b);
// Every path in A U^{<=infinity} has an initial subpath strongly fixed by g.
Verdict strongly_fixed_prefix_check(const SelfSimilarSystem& sys, GroupElem g, const VertexSet& a, const Bounds& b);
// No free ultrafilter contains A.
Verdict no_ultrafilter_check(const SelfSimilarSystem& sys, const VertexSet& a);
Verdict check_condition_star(const SelfSimilarSystem& sys, const Bounds& b, int threads = 1);

// For each vertex v and non-identity g in the ball some path alpha with
// r(alpha) = {v} has g.alpha != alpha.
Verdict check_moves_paths(const SelfSimilarSystem& sys, const Bounds& b);

// Three vertices, two swapped loops and an edge into a vertex outside every
// source (detected structurally).
struct Ex53Shape {
    Vertex v0, v1, w;
    Edge e0, e1, f;
    std::int64_t t0 = 1, t1 = 1;
};
Ex53Shape detect_ex53_shape(const SelfSimilarSystem& sys);  // throws ShapeMismatch
bool parity_criterion_ex53(const SelfSimilarSystem& sys);

struct PhiClosedForm {
    bool premise_met = false;
    std::int64_t derived = 0;  // phi(n, alpha) by the recursion
    std::string formula;       // n t^|alpha| as an exact rational
    bool equal = false;        // only meaningful when premise_met
};
PhiClosedForm phi_closed_form(const SelfSimilarSystem& sys, std::int64_t n, const Path& alpha, const Bounds& b);

struct FixedPoint {
    enum class Class { Trivial, NontrivialCandidate };
    TightFilter filter;
    Class classification = Class::NontrivialCandidate;
};
struct FixedPointReport {
    std::vector<FixedPoint> points;
    bool exhaustive = false;  // true when the list is provably complete
    std::string note;
};
FixedPointReport fixed_points(const SelfSimilarSystem& sys, const Element& s, const Bounds& b);

struct AnalysisReport {
    Verdict minimal;
    Verdict effective;
    std::optional<Verdict> simple;
    std::string simple_reason;  // set when simple is not asserted
    Verdict cofinality;
    Verdict entrances;
    Verdict condition_star;
    std::optional<Verdict> moves_paths;
    std::vector<GCycle> cycles;
    std::vector<bool> cycle_has_entrance;
    std::vector<bool> cycle_literal_entrance;
};
AnalysisReport analyze(const SelfSimilarSystem& sys, const Bounds& b, int threads = 1);

}  // namespace ssu
