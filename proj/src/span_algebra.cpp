#include "ssu/span_algebra.hpp"

#include "ssu/errors.hpp"

namespace ssu {

SpanElement SpanElement::monomial(const Element& s, Rational c) {
    SpanElement out;
    if (!s.is_zero()) out.add(s.quad(), c);
    return out;
}

void SpanElement::add(const Quad& q, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(q, c);
    if (fresh) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

SpanElement SpanElement::operator+(const SpanElement& o) const {
    SpanElement r = *this;
    for (const auto& [q, c] : o.terms_) r.add(q, c);
    return r;
}

SpanElement SpanElement::operator-(const SpanElement& o) const { return *this + o.scaled(-1); }

SpanElement SpanElement::scaled(const Rational& c) const {
    SpanElement r;
    if (c == 0) return r;
    for (const auto& [q, x] : terms_) r.terms_.emplace(q, x * c);
    return r;
}

SpanElement span_product(const SelfSimilarSystem& sys, const SpanElement& x, const SpanElement& y) {
    SpanElement out;
    for (const auto& [a, ca] : x.terms())
        for (const auto& [b, cb] : y.terms()) {
            Element p = multiply(sys, Element(a), Element(b));
            if (!p.is_zero()) out.add(p.quad(), ca * cb);
        }
    return out;
}

SpanElement span_star(const SelfSimilarSystem& sys, const SpanElement& x) {
    SpanElement out;
    for (const auto& [a, c] : x.terms()) out.add(invert(sys, Element(a)).quad(), c);
    return out;
}

Ck4Result ck4_identity(const SelfSimilarSystem& sys, Vertex v, int max_len) {
    const Ultragraph& U = sys.graph();
    const GroupElem one = sys.group().identity();
    Ck4Result r;
    r.lhs = SpanElement::monomial(idempotent(sys, Path::omega(), U.singleton(v)));
    std::vector<Edge> in = U.edges_into_list(U.singleton(v));
    for (const Edge& e : in) r.rhs.add(idempotent(sys, Path{e}, U.source(e)).quad(), 1);

    std::vector<Element> tests;
    if (!U.indexed()) {
        tests = enumerate_elements(sys, max_len, 1);
    } else {
        for (const Edge& e : in) {
            tests.push_back(make(sys, Path{e}, U.source(e), one, Path::omega()));
            tests.push_back(make(sys, Path::omega(), U.source(e), one, Path{e}));
        }
    }
    r.equal = true;
    for (const Element& t : tests) {
        SpanElement m = SpanElement::monomial(t);
        if (!t.quad().beta.is_omega()) {
            ++r.tests;
            if (span_product(sys, m, r.lhs) != span_product(sys, m, r.rhs)) r.equal = false;
        }
        if (!t.quad().alpha.is_omega()) {
            ++r.tests;
            if (span_product(sys, r.lhs, m) != span_product(sys, r.rhs, m)) r.equal = false;
        }
    }
    return r;
}

// ------------------------------------------------------------ crossed product

CrossedSpan CrossedSpan::monomial(const CrossedMonomial& m, Rational c) {
    CrossedSpan out;
    out.add(m, c);
    return out;
}

void CrossedSpan::add(const CrossedMonomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (fresh) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

CrossedSpan CrossedSpan::operator+(const CrossedSpan& o) const {
    CrossedSpan r = *this;
    for (const auto& [m, c] : o.terms_) r.add(m, c);
    return r;
}

CrossedSpan CrossedSpan::operator-(const CrossedSpan& o) const { return *this + o.scaled(-1); }

CrossedSpan CrossedSpan::scaled(const Rational& c) const {
    CrossedSpan r;
    if (c == 0) return r;
    for (const auto& [m, x] : terms_) r.terms_.emplace(m, x * c);
    return r;
}

namespace {

void require_trivial(const SelfSimilarSystem& sys) {
    if (!sys.trivial_cocycle()) throw NontrivialCocycle("the crossed product needs the trivial cocycle");
}

}  // namespace

CrossedMonomial crossed_map(const SelfSimilarSystem& sys, const Quad& s) {
    require_trivial(sys);
    const Ultragraph& U = sys.graph();
    Path gb = sys.act(s.g, s.beta);
    if (!s.set.subset_of(U.source_of(s.alpha).intersect(U.source_of(gb))))
        throw ConstraintError("crossed image violates A inside s(alpha) and s(g.beta)");
    return {Quad{s.alpha, s.set, sys.group().identity(), gb}, s.g};
}

CrossedSpan crossed_map(const SelfSimilarSystem& sys, const Element& s) {
    require_trivial(sys);
    if (s.is_zero()) return {};
    return CrossedSpan::monomial(crossed_map(sys, s.quad()));
}

CrossedSpan crossed_map(const SelfSimilarSystem& sys, const SpanElement& x) {
    require_trivial(sys);
    CrossedSpan out;
    for (const auto& [q, c] : x.terms()) out.add(crossed_map(sys, q), c);
    return out;
}

Quad eta(const SelfSimilarSystem& sys, GroupElem g, const Quad& ck) {
    require_trivial(sys);
    return {sys.act(g, ck.alpha), sys.act(g, ck.set), ck.g, sys.act(g, ck.beta)};
}

CrossedSpan crossed_product(const SelfSimilarSystem& sys, const CrossedSpan& x, const CrossedSpan& y) {
    require_trivial(sys);
    const Group& G = sys.group();
    CrossedSpan out;
    for (const auto& [a, ca] : x.terms())
        for (const auto& [b, cb] : y.terms()) {
            Element p = multiply(sys, Element(a.ck), Element(eta(sys, a.g, b.ck)));
            if (!p.is_zero()) out.add({p.quad(), G.multiply(a.g, b.g)}, ca * cb);
        }
    return out;
}

CrossedSpan crossed_star(const SelfSimilarSystem& sys, const CrossedSpan& x) {
    require_trivial(sys);
    const Group& G = sys.group();
    CrossedSpan out;
    for (const auto& [a, c] : x.terms()) {
        GroupElem gi = G.inverse(a.g);
        Quad adj = invert(sys, Element(a.ck)).quad();
        out.add({eta(sys, gi, adj), gi}, c);
    }
    return out;
}

}  // namespace ssu
