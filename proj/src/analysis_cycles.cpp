#include "analysis_internal.hpp"
#include "ssu/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace ssu {

using detail::elem_text;
using detail::lasso_text;
using detail::path_text;
using detail::set_text;

bool is_g_cycle(const SelfSimilarSystem& sys, GroupElem g, const Path& gamma) {
    const Ultragraph& U = sys.graph();
    if (gamma.is_omega() || !U.valid_path(gamma)) return false;
    try {
        return sys.act(g, U.range_of(gamma)).subset_of(U.source_of(gamma));
    } catch (const std::overflow_error&) {
        return false;
    }
}

namespace {

// Translation representatives: first edge at index 0, later edges in the window.
std::vector<Path> indexed_representative_paths(const Ultragraph& U, int max_len) {
    std::vector<Path> out;
    const std::int64_t w = max_len;
    Path::Storage cur;
    auto rec = [&](auto&& self) -> void {
        out.emplace_back(cur);
        if (static_cast<int>(cur.size()) >= max_len) return;
        for (const Edge& e : detail::windowed_edges_into(U, U.source(cur.back()), w)) {
            cur.push_back(e);
            self(self);
            cur.pop_back();
        }
    };
    for (std::uint32_t f = 0; f < U.family_count(); ++f) {
        cur.push_back(Edge{f, 0});
        rec(rec);
        cur.pop_back();
    }
    std::sort(out.begin(), out.end(), [](const Path& a, const Path& b) {
        return std::lexicographical_compare(a.edges().begin(), a.edges().end(), b.edges().begin(), b.edges().end());
    });
    return out;
}

}  // namespace

std::vector<GCycle> find_g_cycles(const SelfSimilarSystem& sys, const Bounds& b, int threads) {
    const Ultragraph& U = sys.graph();
    std::vector<Path> paths =
        U.indexed() ? indexed_representative_paths(U, b.max_path_len) : U.enumerate_paths(U.full(), b.max_path_len);
    std::vector<GroupElem> ball = sys.group().ball(b.group_ball_radius);
    std::vector<std::vector<GCycle>> per(ball.size());
    detail::parallel_for(ball.size(), threads, [&](std::size_t i) {
        for (const Path& p : paths)
            if (is_g_cycle(sys, ball[i], p)) per[i].push_back({ball[i], p});
    });
    std::vector<GCycle> out;
    for (auto& v : per) out.insert(out.end(), v.begin(), v.end());
    return out;
}

bool has_entrance(const SelfSimilarSystem& sys, const GCycle& c) {
    const Ultragraph& U = sys.graph();
    const std::size_t n = c.gamma.length();
    auto only = [&](const Edge& from, const Edge& expect) {
        EdgeSet es = U.edges_into(U.source(from));
        auto sz = es.size();
        return sz && *sz == 1 && es.contains(expect);
    };
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (!only(c.gamma[i], c.gamma[i + 1])) return true;
    Edge first;
    try {
        first = sys.act(c.g, c.gamma[0]);
    } catch (const std::overflow_error&) {
        return true;
    }
    return !only(c.gamma[n - 1], first);
}

std::optional<Witness> entrance_witness(const SelfSimilarSystem& sys, const GCycle& c) {
    const Ultragraph& U = sys.graph();
    const std::size_t n = c.gamma.length();
    for (std::size_t i = 0; i < n; ++i) {
        Edge expect;
        try {
            expect = i + 1 < n ? c.gamma[i + 1] : sys.act(c.g, c.gamma[0]);
        } catch (const std::overflow_error&) {
            continue;
        }
        EdgeSet es = U.edges_into(U.source(c.gamma[i]));
        for (std::uint32_t f = 0; f < es.parts().size(); ++f)
            for (const Interval& iv : es.parts()[f].intervals()) {
                std::int64_t a = iv.lo != kNegInf ? iv.lo : (iv.hi != kPosInf ? iv.hi : 0);
                for (std::int64_t k : {a, iv.lo != kNegInf ? a + 1 : a - 1}) {
                    Edge e{f, k};
                    if (!es.contains(e) || e == expect) continue;
                    Witness w{"entrance", {}};
                    w.add("g", elem_text(sys, c.g)).add("gamma", path_text(sys, c.gamma));
                    w.add("at", std::to_string(i + 1)).add("edge", U.edge_name(e));
                    return w;
                }
            }
    }
    return std::nullopt;
}

bool has_literal_entrance(const SelfSimilarSystem& sys, const GCycle& c) {
    const Ultragraph& U = sys.graph();
    for (const Edge& e : c.gamma.edges())
        if (U.in_degree(U.range(e)) > 1) return true;
    return false;
}

std::optional<Lasso> cycle_infinite_path(const SelfSimilarSystem& sys, const GCycle& c, const Bounds& b) {
    try {
        std::map<std::pair<Path, GroupElem>, std::size_t> seen;
        std::vector<Path> pieces;
        Path gam = c.gamma;
        GroupElem h = c.g;
        for (int step = 0; step <= b.state_bound; ++step) {
            auto key = std::make_pair(gam, sys.action_key(h));
            if (auto it = seen.find(key); it != seen.end()) {
                Lasso x;
                for (std::size_t i = 0; i < pieces.size(); ++i) {
                    auto& dst = i < it->second ? x.prefix : x.cycle;
                    dst.insert(dst.end(), pieces[i].edges().begin(), pieces[i].edges().end());
                }
                return x.canonical();
            }
            seen.emplace(key, pieces.size());
            pieces.push_back(gam);
            auto [next, nh] = sys.act_with_cocycle(h, gam);
            gam = std::move(next);
            h = nh;
        }
    } catch (const std::overflow_error&) {
    }
    return std::nullopt;
}

namespace {

Witness cycle_witness(const SelfSimilarSystem& sys, const std::string& kind, GroupElem g, const Path& gamma) {
    Witness w{kind, {}};
    w.add("g", elem_text(sys, g)).add("gamma", path_text(sys, gamma));
    return w;
}

}  // namespace

Verdict all_cycles_have_entrances(const SelfSimilarSystem& sys, const Bounds& b) {
    const Ultragraph& U = sys.graph();
    const Group& G = sys.group();
    // next(e): the unique edge into s(e), when there is exactly one.
    auto next_of = [&](const Edge& e) -> std::optional<Edge> {
        EdgeSet es = U.edges_into(U.source(e));
        auto sz = es.size();
        if (!sz || *sz != 1) return std::nullopt;
        return es.to_list().front();
    };

    if (!U.indexed()) {
        // Every element acts through its slot (table element or residue mod
        // the period), so these representatives cover the whole group.
        std::vector<GroupElem> reps;
        if (G.is_integers())
            for (std::int64_t r = 0; r < std::max<std::int64_t>(sys.period(), 1); ++r) reps.push_back(r);
        else
            reps = G.elements();
        std::vector<Edge> edges = U.edges();
        for (GroupElem g : reps)
            for (const Edge& e1 : edges) {
                Edge target = sys.act(g, e1);
                Path::Storage chain{e1};
                for (std::size_t step = 0; step < edges.size(); ++step) {
                    auto nx = next_of(chain.back());
                    if (!nx) break;
                    if (*nx == target) {
                        Verdict v = Verdict::fails(cycle_witness(sys, "cycle_without_entrance", g, Path(chain)),
                                                   "every edge into each source is forced");
                        return v;
                    }
                    chain.push_back(*nx);
                }
            }
        return Verdict::holds("decided exactly: no chain of forced edges closes up under the action");
    }

    // Indexed: chains of forced edges from each family representative.
    bool any_forced = false;
    for (std::uint32_t f = 0; f < U.family_count(); ++f)
        if (next_of(Edge{f, 0})) any_forced = true;
    if (!any_forced) return Verdict::holds("decided exactly: no source receives exactly one edge");

    const auto& shift = sys.action_data().edge_shift;
    for (std::uint32_t f = 0; f < U.family_count(); ++f) {
        Edge e1{f, 0};
        Path::Storage chain{e1};
        for (int step = 0; step < b.max_path_len; ++step) {
            auto nx = next_of(chain.back());
            if (!nx) break;
            // g.e1 = e[f][g * shift]; solve for g
            if (nx->family == f) {
                std::int64_t d = shift[f];
                std::optional<GroupElem> g;
                if (d == 0 && nx->index == 0) g = 0;
                if (d != 0 && nx->index % d == 0) g = nx->index / d;
                if (g) return Verdict::fails(cycle_witness(sys, "cycle_without_entrance", *g, Path(chain)),
                                             "every edge into each source is forced");
            }
            chain.push_back(*nx);
        }
    }
    return Verdict::unknown("forced edge chains exist but none closed within max_path_len");
}

// ------------------------------------------------------------ fixed points

namespace {

FixedPoint::Class classify(const SelfSimilarSystem& sys, const Element& s, const TightFilter& f, const Bounds& b) {
    const Quad& q = s.quad();
    const Ultragraph& U = sys.graph();
    if (q.alpha != q.beta) return FixedPoint::Class::NontrivialCandidate;
    try {
        Element probe;
        if (f.kind == TightFilter::Kind::PathType) {
            std::size_t n = q.beta.length() + f.x.prefix.size() +
                            f.x.cycle.size() * static_cast<std::size_t>(b.lasso_bound + 1);
            auto letters = f.x.realize(n);
            Path lambda(Path::Storage(letters.begin(), letters.end()));
            probe = idempotent(sys, lambda, U.range_set(f.x.letter(n)));
        } else {
            VertexSet member;
            if (f.filter.kind == SetFilter::Kind::Principal) {
                member = f.filter.generator;
            } else {
                IntervalSet far = f.filter.direction > 0 ? IntervalSet::greater_than(1000) : IntervalSet::at_most(-1000);
                member = VertexSet::of_family(U.universe(), f.filter.family, far);
                if (f.filter.ambient) member = member.intersect(*f.filter.ambient);
            }
            probe = idempotent(sys, f.alpha, member);
        }
        return multiply(sys, s, probe) == probe ? FixedPoint::Class::Trivial : FixedPoint::Class::NontrivialCandidate;
    } catch (const std::overflow_error&) {
        return FixedPoint::Class::NontrivialCandidate;
    }
}

}  // namespace

FixedPointReport fixed_points(const SelfSimilarSystem& sys, const Element& s, const Bounds& b) {
    if (s.is_zero()) throw DomainError("fixed points of zero are undefined");
    const Quad& q = s.quad();
    const Ultragraph& U = sys.graph();
    const Group& G = sys.group();
    FixedPointReport rep;

    auto try_add = [&](const TightFilter& f) {
        std::optional<TightFilter> img;
        try {
            img = theta_apply(sys, s, f, b.state_bound);
        } catch (const DomainError&) {
            return;
        }
        if (img && *img == f) rep.points.push_back({f, classify(sys, s, f, b)});
    };

    if (q.alpha.length() != q.beta.length()) {
        const bool longer = q.alpha.length() > q.beta.length();
        const Path& lo = longer ? q.beta : q.alpha;
        const Path& hi = longer ? q.alpha : q.beta;
        rep.exhaustive = true;
        if (!lo.is_prefix_of(hi)) {
            rep.note = "the shorter path is not a prefix of the longer one";
            return rep;
        }
        Path gamma = hi.drop(lo.length());
        GroupElem g = longer ? q.g : G.inverse(q.g);
        VertexSet target = longer ? q.set : sys.act(G.inverse(q.g), q.set);
        if (!is_g_cycle(sys, g, gamma) || !sys.act(g, U.range_of(gamma)).subset_of(target)) {
            rep.note = "no G-cycle condition";
            return rep;
        }
        auto x = cycle_infinite_path(sys, {g, gamma}, b);
        if (!x) {
            rep.exhaustive = false;
            rep.note = "cycle path exceeded state_bound";
            return rep;
        }
        try_add(TightFilter::path_type(x->prepend(lo)));
        return rep;
    }
    if (q.alpha != q.beta) {
        rep.exhaustive = true;
        rep.note = "equal lengths with different paths";
        return rep;
    }

    VertexSet dom = sys.act(G.inverse(q.g), q.set);
    if (!U.indexed()) {
        for (const Lasso& y : enumerate_path_filters(sys, dom, b.lasso_bound))
            try_add(TightFilter::path_type(y.prepend(q.alpha)));
        rep.note = "path filters searched up to lasso_bound; finite universes have no finite-type filters";
        return rep;
    }
    // Indexed: finite-type candidates only (tails and the principal filter).
    VertexSet amb = U.source_of(q.alpha);
    for (std::uint32_t fam = 0; fam < U.universe().size(); ++fam) {
        IntervalSet part = amb.family_part(fam);
        for (int dir : {+1, -1}) {
            bool unbounded = dir > 0 ? !part.bounded_above() : !part.bounded_below();
            if (!unbounded) continue;
            try {
                try_add(TightFilter::finite_type(sys, q.alpha, SetFilter::tail(fam, dir)));
            } catch (const DomainError&) {
            }
        }
    }
    if (!dom.is_finite()) {
        try {
            try_add(TightFilter::finite_type(sys, q.alpha, SetFilter::principal(dom)));
        } catch (const DomainError&) {
        }
    }
    rep.note = "indexed universe: tail and principal finite-type candidates only";
    return rep;
}

}  // namespace ssu
