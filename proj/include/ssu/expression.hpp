#pragma once

#include "ssu/span_algebra.hpp"

#include <string>

namespace ssu {

// "(alpha; A; g; beta)" with dot-joined paths and w for omega; Zero is "0".
std::string format_element(const SelfSimilarSystem& sys, const Element& s);
Element parse_element(const SelfSimilarSystem& sys, const std::string& text);

// Products of quadruples: `*`, postfix `^-1` (or `^*`), `[..]` or `(..)`
// grouping, and `0`.
Element eval_semigroup(const SelfSimilarSystem& sys, const std::string& text);

// The semigroup grammar plus `+`, `-`, rational scalars, postfix `^*`
// and `delta[g]` tags. Mixing a quadruple with a tag maps the quadruple
// into the crossed product first.
struct AlgebraValue {
    enum class Kind { Scalar, Span, Crossed };
    Kind kind = Kind::Scalar;
    Rational scalar = 0;
    SpanElement span;
    CrossedSpan crossed;
};
AlgebraValue eval_algebra(const SelfSimilarSystem& sys, const std::string& text);

std::string format_span(const SelfSimilarSystem& sys, const SpanElement& x);
std::string format_crossed(const SelfSimilarSystem& sys, const CrossedSpan& x);
std::string format_algebra(const SelfSimilarSystem& sys, const AlgebraValue& v);

}  // namespace ssu
