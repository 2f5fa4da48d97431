#include "ssu/expression.hpp"

#include "ssu/errors.hpp"
#include "ssu/notation.hpp"

#include <cctype>

namespace ssu {

std::string format_element(const SelfSimilarSystem& sys, const Element& s) {
    if (s.is_zero()) return "0";
    const Quad& q = s.quad();
    const Ultragraph& U = sys.graph();
    return "(" + format_path(U, q.alpha) + "; " + format_set(U.universe(), q.set) + "; " + sys.group().name(q.g) +
           "; " + format_path(U, q.beta) + ")";
}

namespace {

// Position of the bracket closing text[open], tracking (), [] and {}.
std::size_t matching(const std::string& t, std::size_t open) {
    int depth = 0;
    for (std::size_t i = open; i < t.size(); ++i) {
        char c = t[i];
        if (c == '(' || c == '[' || c == '{') ++depth;
        if (c == ')' || c == ']' || c == '}') {
            if (--depth == 0) return i;
        }
    }
    throw ParseError("unbalanced brackets in '" + t + "'");
}

std::vector<std::string> split_top(const std::string& t, char sep) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : t) {
        if (c == '(' || c == '[' || c == '{') ++depth;
        if (c == ')' || c == ']' || c == '}') --depth;
        if (c == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

bool is_quad_literal(const std::string& t, std::size_t open, std::size_t close) {
    return split_top(t.substr(open + 1, close - open - 1), ';').size() > 1;
}

Element quad_from_body(const SelfSimilarSystem& sys, const std::string& body) {
    auto parts = split_top(body, ';');
    if (parts.size() != 4) throw ParseError("a quadruple needs four ';'-separated fields");
    const Ultragraph& U = sys.graph();
    Path alpha = parse_path(U, trim(parts[0]));
    VertexSet a = parse_set(U.universe(), trim(parts[1]));
    GroupElem g = parse_group_elem(sys.group(), trim(parts[2]));
    Path beta = parse_path(U, trim(parts[3]));
    return make(sys, std::move(alpha), std::move(a), g, std::move(beta));
}

class Cursor {
public:
    explicit Cursor(const std::string& t) : t_(t) {}
    void skip() {
        while (i_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[i_]))) ++i_;
    }
    bool done() {
        skip();
        return i_ >= t_.size();
    }
    char peek() {
        skip();
        return i_ < t_.size() ? t_[i_] : '\0';
    }
    bool eat(const std::string& s) {
        skip();
        if (t_.compare(i_, s.size(), s) == 0) {
            i_ += s.size();
            return true;
        }
        return false;
    }
    void expect(const std::string& s) {
        if (!eat(s)) fail("expected '" + s + "'");
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " at offset " + std::to_string(i_) + " in '" + t_ + "'");
    }
    const std::string& text() const { return t_; }
    std::size_t pos() const { return i_; }
    void set(std::size_t p) { i_ = p; }

private:
    const std::string& t_;
    std::size_t i_ = 0;
};

// ------------------------------------------------------------ semigroup

struct SemigroupParser {
    const SelfSimilarSystem& sys;
    Cursor c;

    Element expr() {
        Element v = unary();
        while (c.eat("*")) v = multiply(sys, v, unary());
        return v;
    }
    Element unary() {
        Element v = primary();
        for (;;) {
            if (c.eat("^-1") || c.eat("^*"))
                v = v.is_zero() ? v : invert(sys, v);
            else
                return v;
        }
    }
    Element primary() {
        char ch = c.peek();
        if (ch == '0') {
            c.expect("0");
            return Element::zero();
        }
        if (ch == '[') {
            c.expect("[");
            Element v = expr();
            c.expect("]");
            return v;
        }
        if (ch == '(') {
            std::size_t open = c.pos();
            std::size_t close = matching(c.text(), open);
            if (is_quad_literal(c.text(), open, close)) {
                c.set(close + 1);
                return quad_from_body(sys, c.text().substr(open + 1, close - open - 1));
            }
            c.expect("(");
            Element v = expr();
            c.expect(")");
            return v;
        }
        c.fail("expected a quadruple, 0 or a bracket");
    }
};

// ------------------------------------------------------------ algebra

using Kind = AlgebraValue::Kind;

AlgebraValue scalar(Rational r) {
    AlgebraValue v;
    v.scalar = std::move(r);
    return v;
}

Element unit(const SelfSimilarSystem& sys) {
    const Ultragraph& U = sys.graph();
    return make(sys, Path::omega(), U.full(), sys.group().identity(), Path::omega());
}

AlgebraValue as_span(const SelfSimilarSystem& sys, const AlgebraValue& v) {
    if (v.kind != Kind::Scalar) return v;
    AlgebraValue out;
    out.kind = Kind::Span;
    out.span = SpanElement::monomial(unit(sys), v.scalar);
    return out;
}

AlgebraValue as_crossed(const SelfSimilarSystem& sys, const AlgebraValue& v) {
    if (v.kind == Kind::Crossed) return v;
    AlgebraValue s = as_span(sys, v);
    AlgebraValue out;
    out.kind = Kind::Crossed;
    out.crossed = crossed_map(sys, s.span);
    return out;
}

AlgebraValue add(const SelfSimilarSystem& sys, const AlgebraValue& a, const AlgebraValue& b) {
    if (a.kind == Kind::Scalar && b.kind == Kind::Scalar) return scalar(a.scalar + b.scalar);
    AlgebraValue out;
    if (a.kind == Kind::Crossed || b.kind == Kind::Crossed) {
        out.kind = Kind::Crossed;
        out.crossed = as_crossed(sys, a).crossed + as_crossed(sys, b).crossed;
    } else {
        out.kind = Kind::Span;
        out.span = as_span(sys, a).span + as_span(sys, b).span;
    }
    return out;
}

AlgebraValue scale(const AlgebraValue& a, const Rational& r) {
    AlgebraValue out = a;
    out.scalar *= r;
    out.span = a.span.scaled(r);
    out.crossed = a.crossed.scaled(r);
    return out;
}

AlgebraValue mul(const SelfSimilarSystem& sys, const AlgebraValue& a, const AlgebraValue& b) {
    if (a.kind == Kind::Scalar) return scale(b, a.scalar);
    if (b.kind == Kind::Scalar) return scale(a, b.scalar);
    AlgebraValue out;
    if (a.kind == Kind::Crossed || b.kind == Kind::Crossed) {
        out.kind = Kind::Crossed;
        out.crossed = crossed_product(sys, as_crossed(sys, a).crossed, as_crossed(sys, b).crossed);
    } else {
        out.kind = Kind::Span;
        out.span = span_product(sys, a.span, b.span);
    }
    return out;
}

AlgebraValue star(const SelfSimilarSystem& sys, const AlgebraValue& a) {
    AlgebraValue out = a;
    if (a.kind == Kind::Span) out.span = span_star(sys, a.span);
    if (a.kind == Kind::Crossed) out.crossed = crossed_star(sys, a.crossed);
    return out;
}

struct AlgebraParser {
    const SelfSimilarSystem& sys;
    Cursor c;

    AlgebraValue expr() {
        AlgebraValue v = term();
        for (;;) {
            if (c.eat("+"))
                v = add(sys, v, term());
            else if (c.eat("-"))
                v = add(sys, v, scale(term(), -1));
            else
                return v;
        }
    }
    bool starts_primary() {
        char ch = c.peek();
        return std::isdigit(static_cast<unsigned char>(ch)) || ch == '(' || ch == '[' || ch == 'd';
    }
    AlgebraValue term() {
        AlgebraValue v = unary();
        for (;;) {
            if (c.eat("*"))
                v = mul(sys, v, unary());
            else if (starts_primary())
                v = mul(sys, v, unary());
            else
                return v;
        }
    }
    AlgebraValue unary() {
        if (c.eat("-")) return scale(unary(), -1);
        AlgebraValue v = primary();
        while (c.eat("^*")) v = star(sys, v);
        return v;
    }
    AlgebraValue primary() {
        char ch = c.peek();
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t p = c.pos();
            const std::string& t = c.text();
            std::size_t q = p;
            while (q < t.size() && (std::isdigit(static_cast<unsigned char>(t[q])) || t[q] == '/')) ++q;
            c.set(q);
            try {
                return scalar(Rational(t.substr(p, q - p)));
            } catch (const std::exception&) {
                c.fail("bad rational");
            }
        }
        if (c.eat("delta[")) {
            std::size_t p = c.pos();
            std::size_t q = c.text().find(']', p);
            if (q == std::string::npos) c.fail("unterminated delta[");
            GroupElem g = parse_group_elem(sys.group(), trim(c.text().substr(p, q - p)));
            c.set(q + 1);
            const Ultragraph& U = sys.graph();
            AlgebraValue out;
            out.kind = Kind::Crossed;
            if (!sys.trivial_cocycle()) throw NontrivialCocycle("delta tags need the trivial cocycle");
            out.crossed = CrossedSpan::monomial(
                {Quad{Path::omega(), U.full(), sys.group().identity(), Path::omega()}, g});
            return out;
        }
        if (ch == '[') {
            c.expect("[");
            AlgebraValue v = expr();
            c.expect("]");
            return v;
        }
        if (ch == '(') {
            std::size_t open = c.pos();
            std::size_t close = matching(c.text(), open);
            if (is_quad_literal(c.text(), open, close)) {
                c.set(close + 1);
                Element e = quad_from_body(sys, c.text().substr(open + 1, close - open - 1));
                AlgebraValue out;
                out.kind = Kind::Span;
                out.span = SpanElement::monomial(e);
                return out;
            }
            c.expect("(");
            AlgebraValue v = expr();
            c.expect(")");
            return v;
        }
        c.fail("expected a term");
    }
};

std::string coefficient_prefix(const Rational& c, bool first) {
    std::string sign = c < 0 ? (first ? "-" : " - ") : (first ? "" : " + ");
    Rational a = c < 0 ? Rational(-c) : c;
    return sign + (a == 1 ? std::string() : a.str() + " ");
}

}  // namespace

Element parse_element(const SelfSimilarSystem& sys, const std::string& text) {
    std::string t = trim(text);
    if (t == "0") return Element::zero();
    if (t.size() < 2 || t.front() != '(' || t.back() != ')') throw ParseError("expected (alpha; A; g; beta)");
    return quad_from_body(sys, t.substr(1, t.size() - 2));
}

Element eval_semigroup(const SelfSimilarSystem& sys, const std::string& text) {
    SemigroupParser p{sys, Cursor(text)};
    Element v = p.expr();
    if (!p.c.done()) p.c.fail("trailing input");
    return v;
}

AlgebraValue eval_algebra(const SelfSimilarSystem& sys, const std::string& text) {
    AlgebraParser p{sys, Cursor(text)};
    AlgebraValue v = p.expr();
    if (!p.c.done()) p.c.fail("trailing input");
    return v;
}

std::string format_span(const SelfSimilarSystem& sys, const SpanElement& x) {
    if (x.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [q, c] : x.terms()) {
        out += coefficient_prefix(c, first) + format_element(sys, Element(q));
        first = false;
    }
    return out;
}

std::string format_crossed(const SelfSimilarSystem& sys, const CrossedSpan& x) {
    if (x.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : x.terms()) {
        out += coefficient_prefix(c, first) + format_element(sys, Element(m.ck)) + " delta[" +
               sys.group().name(m.g) + "]";
        first = false;
    }
    return out;
}

std::string format_algebra(const SelfSimilarSystem& sys, const AlgebraValue& v) {
    switch (v.kind) {
        case Kind::Scalar: return v.scalar.str();
        case Kind::Span: return format_span(sys, v.span);
        case Kind::Crossed: return format_crossed(sys, v.crossed);
    }
    return {};
}

}  // namespace ssu
