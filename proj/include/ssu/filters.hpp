#pragma once

#include "ssu/semigroup.hpp"

#include <optional>
#include <vector>

namespace ssu {

// A filter of infinite sets inside an ambient set (nullopt = every vertex):
// either everything containing an infinite generator, or the tail filter of
// one family in one direction (sets containing ambient cap {v_j : +-j > k}
// for some k).
struct SetFilter {
    enum class Kind { Principal, Tail };
    Kind kind = Kind::Principal;
    VertexSet generator;      // Principal
    std::uint32_t family = 0; // Tail
    int direction = +1;       // Tail: +1 towards +infinity, -1 towards -infinity
    std::optional<VertexSet> ambient;

    static SetFilter principal(VertexSet gen, std::optional<VertexSet> ambient = std::nullopt);
    static SetFilter tail(std::uint32_t family, int direction, std::optional<VertexSet> ambient = std::nullopt);

    bool contains(const VertexSet& c) const;
    bool well_formed() const;  // generators infinite and nonempty
    bool operator==(const SetFilter&) const = default;
};

struct TightFilter {
    enum class Kind { PathType, FiniteType };
    Kind kind = Kind::PathType;
    Lasso x;            // PathType
    Path alpha;         // FiniteType
    SetFilter filter;   // FiniteType

    static TightFilter path_type(const Lasso& x) { return {Kind::PathType, x.canonical(), {}, {}}; }
    // Normalises the ambient set to s(alpha) and throws DomainError when a
    // member of the filter could be finite.
    static TightFilter finite_type(const SelfSimilarSystem& sys, Path alpha, SetFilter b);

    bool operator==(const TightFilter&) const = default;
};

bool filter_contains(const SelfSimilarSystem& sys, const TightFilter& f, const Element& q);
bool in_cylinder(const SelfSimilarSystem& sys, const TightFilter& f, const Path& alpha, const VertexSet& a);

// theta_s(F); nullopt only when the lasso action exceeds state_bound.
// Throws DomainError unless F contains s*s.
std::optional<TightFilter> theta_apply(const SelfSimilarSystem& sys, const Element& s, const TightFilter& f,
                                       int state_bound);

// Canonical lassos with |prefix| + |cycle| <= lasso_bound and range inside
// in_set, ordered by total length, then prefix, then cycle.
std::vector<Lasso> enumerate_path_filters(const SelfSimilarSystem& sys, const VertexSet& in_set, int lasso_bound);

std::string format_filter(const SelfSimilarSystem& sys, const TightFilter& f);
TightFilter parse_filter(const SelfSimilarSystem& sys, const std::string& text);

}  // namespace ssu
