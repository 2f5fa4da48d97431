#include "ssu/system.hpp"

#include "ssu/errors.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace ssu {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow");
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow");
    return r;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t m) { return (a - floor_mod(a, m)) / m; }

std::vector<std::uint32_t> compose(const std::vector<std::uint32_t>& outer, const std::vector<std::uint32_t>& inner) {
    std::vector<std::uint32_t> r(inner.size());
    for (std::size_t i = 0; i < inner.size(); ++i) r[i] = outer[inner[i]];
    return r;
}

std::vector<std::uint32_t> identity_perm(std::size_t n) {
    std::vector<std::uint32_t> r(n);
    std::iota(r.begin(), r.end(), 0u);
    return r;
}

void check_perm(const std::vector<std::uint32_t>& p, std::size_t n, const char* what) {
    if (p.size() != n) throw ParseError(std::string(what) + " map has the wrong size");
    std::vector<bool> hit(n, false);
    for (auto x : p) {
        if (x >= n || hit[x]) throw ParseError(std::string(what) + " map is not a bijection");
        hit[x] = true;
    }
}

}  // namespace

SelfSimilarSystem::SelfSimilarSystem(std::string name, Ultragraph graph, Group group, ActionData action,
                                     CocycleData cocycle)
    : name_(std::move(name)),
      graph_(std::move(graph)),
      group_(std::move(group)),
      action_(std::move(action)),
      cocycle_(std::move(cocycle)) {
    const std::size_t nf = graph_.family_count();
    using CK = CocycleData::Kind;

    if (graph_.indexed()) {
        if (!group_.is_integers()) throw ParseError("indexed universes need the integer group");
        if (action_.vertex_shift.size() != graph_.universe().size() || action_.edge_shift.size() != nf)
            throw ParseError("shift action must give one shift per family");
        if (cocycle_.kind == CK::Table) throw ParseError("cocycle tables need a finite group");
        if (cocycle_.kind == CK::GeneratorValues && cocycle_.generator_values.size() != nf)
            throw ParseError("cocycle needs one value per edge family");
        return;
    }

    const std::size_t nv = graph_.universe().size();
    if (action_.generator_vertex_perm.size() != group_.generators().size() ||
        action_.generator_edge_perm.size() != group_.generators().size())
        throw ParseError("action must give one permutation per generator");
    for (std::size_t k = 0; k < group_.generators().size(); ++k) {
        check_perm(action_.generator_vertex_perm[k], nv, "vertex");
        check_perm(action_.generator_edge_perm[k], nf, "edge");
    }

    if (!group_.is_integers()) {
        const std::size_t n = group_.order();
        std::vector<bool> seen(n, false);
        vperm_.assign(n, {});
        eperm_.assign(n, {});
        GroupElem one = group_.identity();
        vperm_[one] = identity_perm(nv);
        eperm_[one] = identity_perm(nf);
        seen[one] = true;
        std::vector<GroupElem> queue{one};
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            GroupElem x = queue[qi];
            for (std::size_t k = 0; k < group_.generators().size(); ++k) {
                GroupElem y = group_.multiply(x, group_.generators()[k]);
                if (seen[y]) continue;
                seen[y] = true;
                vperm_[y] = compose(vperm_[x], action_.generator_vertex_perm[k]);
                eperm_[y] = compose(eperm_[x], action_.generator_edge_perm[k]);
                queue.push_back(y);
            }
        }
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                auto ab = group_.multiply(a, b);
                if (vperm_[ab] != compose(vperm_[a], vperm_[b]) || eperm_[ab] != compose(eperm_[a], eperm_[b]))
                    throw ParseError("generator permutations do not define an action of the group table");
            }
        if (cocycle_.kind == CK::GeneratorValues) throw ParseError("generator_values cocycles need the integer group");
        if (cocycle_.kind == CK::Table) {
            if (cocycle_.table.size() != n) throw ParseError("cocycle table must list every group element");
            for (const auto& row : cocycle_.table) {
                if (row.size() != nf) throw ParseError("cocycle table must list every edge");
                for (auto x : row)
                    if (x < 0 || static_cast<std::size_t>(x) >= n) throw ParseError("cocycle value outside the group");
            }
        }
        return;
    }

    // Z on a finite universe: powers of the generator up to its period.
    if (cocycle_.kind == CK::Table) throw ParseError("cocycle tables need a finite group");
    const auto& sv = action_.generator_vertex_perm[0];
    const auto& se = action_.generator_edge_perm[0];
    vperm_.push_back(identity_perm(nv));
    eperm_.push_back(identity_perm(nf));
    while (true) {
        auto nv2 = compose(sv, vperm_.back());
        auto ne2 = compose(se, eperm_.back());
        if (nv2 == vperm_[0] && ne2 == eperm_[0]) break;
        vperm_.push_back(std::move(nv2));
        eperm_.push_back(std::move(ne2));
        if (vperm_.size() > 1000000) throw ParseError("generator period too large");
    }
    period_ = static_cast<std::int64_t>(vperm_.size());
    key_period_ = period_;
    if (cocycle_.kind == CK::GeneratorValues) {
        if (cocycle_.generator_values.size() != nf) throw ParseError("cocycle needs one value per edge");
        partial_.assign(static_cast<std::size_t>(period_) + 1, std::vector<std::int64_t>(nf, 0));
        for (std::int64_t r = 0; r < period_; ++r)
            for (std::size_t e = 0; e < nf; ++e)
                partial_[r + 1][e] =
                    checked_add(partial_[r][e], cocycle_.generator_values[eperm_[static_cast<std::size_t>(r)][e]]);
        for (std::size_t e = 0; e < nf; ++e)
            if (floor_mod(partial_[static_cast<std::size_t>(period_)][e], period_) != 0) key_period_ = 0;
    }
}

std::size_t SelfSimilarSystem::finite_slot(GroupElem g) const {
    if (group_.is_integers()) return static_cast<std::size_t>(floor_mod(g, period_));
    return static_cast<std::size_t>(g);
}

Vertex SelfSimilarSystem::act(GroupElem g, Vertex v) const {
    if (graph_.indexed())
        return Vertex{v.family, checked_add(v.index, checked_mul(g, action_.vertex_shift[v.family]))};
    return Vertex{0, vperm_[finite_slot(g)][static_cast<std::size_t>(v.index)]};
}

Edge SelfSimilarSystem::act(GroupElem g, const Edge& e) const {
    if (graph_.indexed()) return Edge{e.family, checked_add(e.index, checked_mul(g, action_.edge_shift[e.family]))};
    return Edge{eperm_[finite_slot(g)][e.family], 0};
}

VertexSet SelfSimilarSystem::act(GroupElem g, const VertexSet& a) const {
    if (graph_.indexed()) {
        std::vector<std::int64_t> shifts(action_.vertex_shift.size());
        for (std::size_t f = 0; f < shifts.size(); ++f) shifts[f] = checked_mul(g, action_.vertex_shift[f]);
        return a.shifted_per_family(shifts);
    }
    std::size_t slot = finite_slot(g);
    if (slot == finite_slot(group_.identity())) return a;
    return a.permuted(vperm_[slot]);
}

GroupElem SelfSimilarSystem::cocycle(GroupElem g, const Edge& e) const {
    switch (cocycle_.kind) {
        case CocycleData::Kind::Trivial: return g;
        case CocycleData::Kind::Table: return cocycle_.table[static_cast<std::size_t>(g)][e.family];
        case CocycleData::Kind::GeneratorValues:
            if (graph_.indexed()) return checked_mul(g, cocycle_.generator_values[e.family]);
            {
                std::int64_t r = floor_mod(g, period_), q = floor_div(g, period_);
                return checked_add(partial_[static_cast<std::size_t>(r)][e.family],
                                   checked_mul(q, partial_[static_cast<std::size_t>(period_)][e.family]));
            }
    }
    return g;
}

std::pair<Path, GroupElem> SelfSimilarSystem::act_with_cocycle(GroupElem g, const Path& p) const {
    Path::Storage out;
    GroupElem h = g;
    for (const Edge& e : p.edges()) {
        out.push_back(act(h, e));
        h = cocycle(h, e);
    }
    return {Path(std::move(out)), h};
}

Path SelfSimilarSystem::act(GroupElem g, const Path& p) const { return act_with_cocycle(g, p).first; }

GroupElem SelfSimilarSystem::cocycle(GroupElem g, const Path& p) const { return act_with_cocycle(g, p).second; }

GroupElem SelfSimilarSystem::action_key(GroupElem g) const {
    if (key_period_ != 0) return floor_mod(g, key_period_);
    return g;
}

std::optional<Lasso> SelfSimilarSystem::act_lasso(GroupElem g, const Lasso& x, int state_bound) const {
    try {
        std::vector<Edge> out;
        GroupElem h = g;
        for (const Edge& e : x.prefix) {
            out.push_back(act(h, e));
            h = cocycle(h, e);
        }
        std::map<std::pair<std::size_t, GroupElem>, std::size_t> seen;
        for (std::size_t step = 0;; ++step) {
            std::size_t pos = step % x.cycle.size();
            auto key = std::make_pair(pos, action_key(h));
            if (auto it = seen.find(key); it != seen.end()) {
                Lasso r;
                r.prefix.assign(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(it->second));
                r.cycle.assign(out.begin() + static_cast<std::ptrdiff_t>(it->second), out.end());
                return r.canonical();
            }
            if (static_cast<int>(seen.size()) >= state_bound) return std::nullopt;
            seen.emplace(key, out.size());
            out.push_back(act(h, x.cycle[pos]));
            h = cocycle(h, x.cycle[pos]);
        }
    } catch (const std::overflow_error&) {
        return std::nullopt;
    }
}

// ------------------------------------------------------------------------

Verdict validate_system(const SelfSimilarSystem& sys, int ball_radius) {
    const auto& G = sys.group();
    const auto& U = sys.graph();
    std::vector<GroupElem> elems = G.is_integers() ? G.ball(ball_radius) : G.elements();
    std::vector<Edge> edges;
    for (std::uint32_t f = 0; f < U.family_count(); ++f) edges.push_back(Edge{f, 0});

    auto witness = [&](const std::string& kind, GroupElem g, const Edge& e) {
        Witness w{kind, {}};
        w.add("g", G.name(g)).add("edge", U.edge_name(e));
        return w;
    };

    try {
        for (GroupElem g : elems)
            for (const Edge& e : edges) {
                Edge ge = sys.act(g, e);
                if (!U.valid_edge(ge) || U.range(ge) != sys.act(g, U.range(e)) ||
                    U.source(ge) != sys.act(g, U.source(e)))
                    return Verdict::fails(witness("action_incompatible", g, e),
                                          "g.e must have range g.r(e) and source g.s(e)");
            }
        for (const Edge& e : edges)
            if (sys.cocycle(G.identity(), e) != G.identity())
                return Verdict::fails(witness("cocycle_identity", G.identity(), e), "phi(1_G, e) must be 1_G");
        for (GroupElem g : elems)
            for (GroupElem h : elems)
                for (const Edge& e : edges) {
                    GroupElem lhs = sys.cocycle(G.multiply(g, h), e);
                    GroupElem rhs = G.multiply(sys.cocycle(g, sys.act(h, e)), sys.cocycle(h, e));
                    if (lhs != rhs) {
                        Witness w = witness("cocycle_law", g, e);
                        w.add("h", G.name(h));
                        return Verdict::fails(w, "phi(gh,e) != phi(g,h.e) phi(h,e)");
                    }
                }
        for (GroupElem g : elems)
            for (const Edge& e : edges)
                if (!sys.act(sys.cocycle(g, e), U.source(e)).subset_of(sys.act(g, U.source(e))))
                    return Verdict::fails(witness("source_condition", g, e), "phi(g,e).s(e) not inside g.s(e)");
    } catch (const std::overflow_error&) {
        return Verdict::unknown("integer overflow during validation");
    }
    Verdict v = Verdict::holds(G.is_integers() ? "checked on ball(" + std::to_string(ball_radius) + ")"
                                               : "checked exhaustively");
    return v;
}

}  // namespace ssu
