#pragma once

#include "ssu/semigroup.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <vector>

namespace ssu {

using Rational = boost::multiprecision::cpp_rational;

// Finite rational combination of nonzero semigroup elements, read as
// s_alpha u_{A,g} s*_beta. Zero coefficients are never stored.
class SpanElement {
public:
    SpanElement() = default;
    static SpanElement monomial(const Element& s, Rational c = 1);

    const std::map<Quad, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add(const Quad& q, const Rational& c);
    SpanElement operator+(const SpanElement& o) const;
    SpanElement operator-(const SpanElement& o) const;
    SpanElement scaled(const Rational& c) const;
    bool operator==(const SpanElement&) const = default;

private:
    std::map<Quad, Rational> terms_;
};

SpanElement span_product(const SelfSimilarSystem& sys, const SpanElement& x, const SpanElement& y);
SpanElement span_star(const SelfSimilarSystem& sys, const SpanElement& x);

// p_{v} against the sum of s_e s_e^* over edges into v, compared through
// products with test monomials: left factors with |beta| >= 1, right factors
// with |alpha| >= 1.
struct Ck4Result {
    SpanElement lhs, rhs;
    bool equal = false;
    std::size_t tests = 0;
};
Ck4Result ck4_identity(const SelfSimilarSystem& sys, Vertex v, int max_len = 1);

// s_alpha p_A s*_beta delta_g. The ck quad always carries the identity.
struct CrossedMonomial {
    Quad ck;
    GroupElem g = 0;
    bool operator==(const CrossedMonomial&) const = default;
    std::strong_ordering operator<=>(const CrossedMonomial& o) const {
        if (auto c = ck <=> o.ck; c != 0) return c;
        return g <=> o.g;
    }
};

class CrossedSpan {
public:
    CrossedSpan() = default;
    static CrossedSpan monomial(const CrossedMonomial& m, Rational c = 1);
    const std::map<CrossedMonomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add(const CrossedMonomial& m, const Rational& c);
    CrossedSpan operator+(const CrossedSpan& o) const;
    CrossedSpan operator-(const CrossedSpan& o) const;
    CrossedSpan scaled(const Rational& c) const;
    bool operator==(const CrossedSpan&) const = default;

private:
    std::map<CrossedMonomial, Rational> terms_;
};

// (alpha, A, g, beta) -> s_alpha p_A s*_{g.beta} delta_g. Throws
// NontrivialCocycle unless the cocycle is trivial.
CrossedMonomial crossed_map(const SelfSimilarSystem& sys, const Quad& s);
CrossedSpan crossed_map(const SelfSimilarSystem& sys, const Element& s);  // Zero gives the empty span
CrossedSpan crossed_map(const SelfSimilarSystem& sys, const SpanElement& x);
// eta_g(s_alpha p_A s*_beta) = s_{g.alpha} p_{g.A} s*_{g.beta}
Quad eta(const SelfSimilarSystem& sys, GroupElem g, const Quad& ck);
CrossedSpan crossed_product(const SelfSimilarSystem& sys, const CrossedSpan& x, const CrossedSpan& y);
CrossedSpan crossed_star(const SelfSimilarSystem& sys, const CrossedSpan& x);

}  // namespace ssu
