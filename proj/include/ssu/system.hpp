#pragma once

#include "ssu/group.hpp"
#include "ssu/ultragraph.hpp"
#include "ssu/verdict.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ssu {

struct ActionData {
    // Finite universes: vertex and edge-family images, one entry per group
    // generator (same order as Group::generators()).
    std::vector<std::vector<std::uint32_t>> generator_vertex_perm;
    std::vector<std::vector<std::uint32_t>> generator_edge_perm;
    // IntIndexed universes: 1 acts by v[f][i] -> v[f][i + vertex_shift[f]] and
    // e[E][i] -> e[E][i + edge_shift[E]].
    std::vector<std::int64_t> vertex_shift;
    std::vector<std::int64_t> edge_shift;
};

struct CocycleData {
    enum class Kind { Trivial, Table, GeneratorValues };
    Kind kind = Kind::Trivial;
    std::vector<std::vector<GroupElem>> table;   // [g][edge family], finite tables
    std::vector<std::int64_t> generator_values;  // phi(1, e) per edge family, integer group
};

class SelfSimilarSystem {
public:
    // Builds derived maps. Throws ParseError if the generator data do not
    // define an action of the group.
    SelfSimilarSystem(std::string name, Ultragraph graph, Group group, ActionData action, CocycleData cocycle);

    const std::string& name() const { return name_; }
    const Ultragraph& graph() const { return graph_; }
    const Group& group() const { return group_; }
    const ActionData& action_data() const { return action_; }
    const CocycleData& cocycle_data() const { return cocycle_; }
    bool trivial_cocycle() const { return cocycle_.kind == CocycleData::Kind::Trivial; }

    Vertex act(GroupElem g, Vertex v) const;
    Edge act(GroupElem g, const Edge& e) const;
    VertexSet act(GroupElem g, const VertexSet& a) const;
    Path act(GroupElem g, const Path& p) const;
    GroupElem cocycle(GroupElem g, const Edge& e) const;
    GroupElem cocycle(GroupElem g, const Path& p) const;
    std::pair<Path, GroupElem> act_with_cocycle(GroupElem g, const Path& p) const;

    // g . x for a lasso; nullopt when more than state_bound distinct states are
    // needed (or integer overflow occurs).
    std::optional<Lasso> act_lasso(GroupElem g, const Lasso& x, int state_bound) const;

    // Two elements with equal keys act identically on every path and their
    // cocycle images again have equal keys.
    GroupElem action_key(GroupElem g) const;
    bool key_is_exact() const { return key_period_ == 0; }
    // Finite universes with an integer group: the period of the generator.
    std::int64_t period() const { return period_; }

private:
    std::size_t finite_slot(GroupElem g) const;  // index into the derived permutation tables

    std::string name_;
    Ultragraph graph_;
    Group group_;
    ActionData action_;
    CocycleData cocycle_;
    std::vector<std::vector<std::uint32_t>> vperm_;  // per table element or residue mod period
    std::vector<std::vector<std::uint32_t>> eperm_;
    std::int64_t period_ = 0;
    std::vector<std::vector<std::int64_t>> partial_;  // [r][e] = phi(r, e), 0 <= r <= period
    std::int64_t key_period_ = 0;                    // 0: exact keys
};

// Checks compatibility of the action with r and s, the cocycle identity and
// cocycle laws, and the source condition on ball(ball_radius) (all elements for
// finite tables).
Verdict validate_system(const SelfSimilarSystem& sys, int ball_radius);

std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t floor_mod(std::int64_t a, std::int64_t m);

}  // namespace ssu
