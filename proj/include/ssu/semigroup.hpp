#pragma once

#include "ssu/system.hpp"

#include <optional>
#include <vector>

namespace ssu {

// (alpha, A, g, beta) with  A nonempty and A inside s(alpha) and g.s(beta).
struct Quad {
    Path alpha;
    VertexSet set;
    GroupElem g = 0;
    Path beta;

    bool operator==(const Quad&) const = default;
    std::strong_ordering operator<=>(const Quad& o) const;
    std::size_t hash() const;
};

class Element {
public:
    Element() = default;  // Zero
    explicit Element(Quad q) : q_(std::move(q)) {}
    static Element zero() { return Element(); }

    bool is_zero() const { return !q_.has_value(); }
    const Quad& quad() const { return *q_; }

    bool operator==(const Element&) const = default;
    std::strong_ordering operator<=>(const Element& o) const;
    std::size_t hash() const { return q_ ? q_->hash() : 0x51ed27ULL; }

private:
    std::optional<Quad> q_;
};

struct ElementHash {
    std::size_t operator()(const Element& e) const { return e.hash(); }
};

// Throws ConstraintError when the domain constraint fails.
Element make(const SelfSimilarSystem& sys, Path alpha, VertexSet a, GroupElem g, Path beta);
Element idempotent(const SelfSimilarSystem& sys, Path alpha, VertexSet a);

Element multiply(const SelfSimilarSystem& sys, const Element& s, const Element& t);
Element invert(const SelfSimilarSystem& sys, const Element& s);

bool is_idempotent(const SelfSimilarSystem& sys, const Element& s);
// Order and meets of idempotents; throw NotIdempotent otherwise.
bool leq(const SelfSimilarSystem& sys, const Element& q1, const Element& q2);
bool intersects(const SelfSimilarSystem& sys, const Element& q1, const Element& q2);

// True when the quadruple satisfies the domain constraint.
bool satisfies_constraint(const SelfSimilarSystem& sys, const Quad& q);

// All nonzero elements with |alpha|, |beta| <= max_len and A any nonempty
// subset allowed by the constraint (finite universes only). Group elements
// range over the whole table, or over the given ball for Z.
std::vector<Element> enumerate_elements(const SelfSimilarSystem& sys, int max_len, int ball_radius = 1);

namespace detail {
// The displayed four-case formula without intersecting the result with
// s(alpha') and g'.s(beta'); used by tests to show the repair is a no-op on
// the bundled examples.
Element multiply_unnormalized(const SelfSimilarSystem& sys, const Element& s, const Element& t);
}  // namespace detail

}  // namespace ssu
