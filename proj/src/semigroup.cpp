#include "ssu/semigroup.hpp"

#include "ssu/errors.hpp"

namespace ssu {

std::strong_ordering Quad::operator<=>(const Quad& o) const {
    if (auto c = alpha <=> o.alpha; c != 0) return c;
    if (auto c = beta <=> o.beta; c != 0) return c;
    if (auto c = g <=> o.g; c != 0) return c;
    return set <=> o.set;
}

std::size_t Quad::hash() const {
    std::size_t h = alpha.hash();
    h = h * 31 + beta.hash();
    h = h * 31 + std::hash<GroupElem>{}(g);
    h = h * 31 + set.hash();
    return h;
}

std::strong_ordering Element::operator<=>(const Element& o) const {
    if (is_zero() || o.is_zero()) return o.is_zero() <=> is_zero();
    return *q_ <=> *o.q_;
}

bool satisfies_constraint(const SelfSimilarSystem& sys, const Quad& q) {
    const Ultragraph& U = sys.graph();
    if (!q.set.bound() || q.set.empty()) return false;
    return q.set.subset_of(U.source_of(q.alpha)) && q.set.subset_of(sys.act(q.g, U.source_of(q.beta)));
}

Element make(const SelfSimilarSystem& sys, Path alpha, VertexSet a, GroupElem g, Path beta) {
    const Ultragraph& U = sys.graph();
    if (!U.valid_path(alpha) || !U.valid_path(beta)) throw ConstraintError("alpha and beta must be paths");
    if (!a.bound() || a.universe() != &U.universe()) throw UniverseMismatch("set from another universe");
    if (a.empty()) throw ConstraintError("empty A");
    if (!a.subset_of(U.source_of(alpha))) throw ConstraintError("A not inside s(alpha)");
    if (!a.subset_of(sys.act(g, U.source_of(beta)))) throw ConstraintError("A not inside g.s(beta)");
    return Element(Quad{std::move(alpha), std::move(a), g, std::move(beta)});
}

Element idempotent(const SelfSimilarSystem& sys, Path alpha, VertexSet a) {
    Path beta = alpha;
    return make(sys, std::move(alpha), std::move(a), sys.group().identity(), std::move(beta));
}

namespace {

// Implements the four cases. With normalize set, the result set is cut down
// to s(alpha') and g'.s(beta') (exact: p_C u_{A,g} = u_{C cap A,g} and
// u_{A,g} p_D = u_{A cap gD,g}).
Element product(const SelfSimilarSystem& sys, const Element& s, const Element& t, bool normalize) {
    if (s.is_zero() || t.is_zero()) return Element::zero();
    const Ultragraph& U = sys.graph();
    const Group& G = sys.group();
    const Quad& x = s.quad();
    const Quad& y = t.quad();
    const Path& beta = x.beta;
    const Path& gamma = y.alpha;

    Quad r;
    if (beta == gamma) {  // (iii)
        r = Quad{x.alpha, x.set.intersect(sys.act(x.g, y.set)), G.multiply(x.g, y.g), y.beta};
    } else if (beta.length() < gamma.length() && beta.is_prefix_of(gamma)) {  // (i)
        Path eps = gamma.drop(beta.length());
        if (!sys.act(x.g, U.range_of(eps)).subset_of(x.set)) return Element::zero();
        auto [geps, phi] = sys.act_with_cocycle(x.g, eps);
        r = Quad{x.alpha.concat(geps), sys.act(x.g, U.source_of(eps)).intersect(sys.act(phi, y.set)),
                 G.multiply(phi, y.g), y.beta};
    } else if (gamma.length() < beta.length() && gamma.is_prefix_of(beta)) {  // (ii)
        Path eps = beta.drop(gamma.length());
        if (!U.range_of(eps).subset_of(y.set)) return Element::zero();
        GroupElem hinv = G.inverse(y.g);
        auto [heps, phi] = sys.act_with_cocycle(hinv, eps);
        GroupElem k = G.multiply(x.g, G.inverse(phi));  // g phi(h^-1, eps)^-1
        GroupElem kh = G.multiply(k, hinv);             // ... h^-1, left to right
        r = Quad{x.alpha, x.set.intersect(sys.act(kh, U.source_of(beta))), k, y.beta.concat(heps)};
    } else {
        return Element::zero();  // (iv)
    }
    if (normalize) {
        r.set = r.set.intersect(U.source_of(r.alpha)).intersect(sys.act(r.g, U.source_of(r.beta)));
    }
    if (r.set.empty()) return Element::zero();
    return Element(std::move(r));
}

}  // namespace

Element multiply(const SelfSimilarSystem& sys, const Element& s, const Element& t) {
    return product(sys, s, t, true);
}

Element detail::multiply_unnormalized(const SelfSimilarSystem& sys, const Element& s, const Element& t) {
    return product(sys, s, t, false);
}

Element invert(const SelfSimilarSystem& sys, const Element& s) {
    if (s.is_zero()) return s;
    const Quad& q = s.quad();
    GroupElem ginv = sys.group().inverse(q.g);
    return Element(Quad{q.beta, sys.act(ginv, q.set), ginv, q.alpha});
}

bool is_idempotent(const SelfSimilarSystem& sys, const Element& s) {
    return !s.is_zero() && sys.group().is_identity(s.quad().g) && s.quad().alpha == s.quad().beta;
}

bool leq(const SelfSimilarSystem& sys, const Element& q1, const Element& q2) {
    if (!is_idempotent(sys, q1) || !is_idempotent(sys, q2)) throw NotIdempotent("leq needs idempotents");
    const Quad& a = q1.quad();
    const Quad& b = q2.quad();
    if (a.alpha == b.alpha) return a.set.subset_of(b.set);
    if (b.alpha.length() < a.alpha.length() && b.alpha.is_prefix_of(a.alpha)) {
        Path gamma = a.alpha.drop(b.alpha.length());
        return sys.graph().range_of(gamma).subset_of(b.set);
    }
    return false;
}

bool intersects(const SelfSimilarSystem& sys, const Element& q1, const Element& q2) {
    if (!is_idempotent(sys, q1) || !is_idempotent(sys, q2)) throw NotIdempotent("intersects needs idempotents");
    return !multiply(sys, q1, q2).is_zero();
}

std::vector<Element> enumerate_elements(const SelfSimilarSystem& sys, int max_len, int ball_radius) {
    const Ultragraph& U = sys.graph();
    if (U.indexed()) throw Unsupported("element enumeration needs a finite universe");
    std::vector<Path> paths{Path::omega()};
    for (auto& p : U.enumerate_paths(U.full(), max_len)) paths.push_back(p);
    const Group& G = sys.group();
    std::vector<GroupElem> elems = G.is_integers() ? G.ball(ball_radius) : G.elements();
    const std::size_t n = U.universe().size();
    if (n > 20) throw Unsupported("too many vertices to enumerate subsets");
    std::vector<Element> out;
    for (const Path& a : paths)
        for (GroupElem g : elems)
            for (const Path& b : paths) {
                VertexSet bound = U.source_of(a).intersect(sys.act(g, U.source_of(b)));
                std::vector<Vertex> mem = bound.members();
                for (std::uint64_t mask = 1; mask < (1ULL << mem.size()); ++mask) {
                    VertexSet s = U.empty_set();
                    for (std::size_t i = 0; i < mem.size(); ++i)
                        if (mask >> i & 1ULL) s = s.unite(U.singleton(mem[i]));
                    out.emplace_back(Quad{a, s, g, b});
                }
            }
    return out;
}

}  // namespace ssu
