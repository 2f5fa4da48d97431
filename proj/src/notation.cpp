#include "ssu/notation.hpp"

#include "ssu/errors.hpp"

#include <cctype>

namespace ssu {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

namespace {

class SetParser {
public:
    SetParser(const Universe& u, const std::string& text, bool relative) : u_(u), s_(text), relative_(relative) {}

    VertexSet run() {
        VertexSet r = expr();
        skip();
        if (p_ != s_.size()) fail("trailing input");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("set expression '" + s_ + "': " + why + " at offset " + std::to_string(p_));
    }
    void skip() {
        while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
    }
    bool eat(char c) {
        skip();
        if (p_ < s_.size() && s_[p_] == c) {
            ++p_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }
    static bool ident_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
    }
    std::string ident() {
        skip();
        std::size_t b = p_;
        while (p_ < s_.size() && ident_char(s_[p_])) ++p_;
        if (b == p_) fail("expected a name");
        return s_.substr(b, p_ - b);
    }
    std::int64_t integer() {
        skip();
        std::size_t b = p_;
        if (p_ < s_.size() && (s_[p_] == '-' || s_[p_] == '+')) ++p_;
        while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
        try {
            return std::stoll(s_.substr(b, p_ - b));
        } catch (const std::exception&) {
            fail("expected an integer");
        }
    }
    // Index term: absolute integer, or i / i+d / i-d when relative.
    std::int64_t index() {
        skip();
        if (p_ < s_.size() && s_[p_] == 'i' && (p_ + 1 == s_.size() || !ident_char(s_[p_ + 1]))) {
            if (!relative_) fail("index variable i is only allowed in edge-family sources");
            ++p_;
            skip();
            if (p_ < s_.size() && (s_[p_] == '+' || s_[p_] == '-')) return integer();
            return 0;
        }
        if (relative_) fail("edge-family source indices must be relative to i");
        return integer();
    }
    std::uint32_t family() {
        std::string name = ident();
        if (u_.is_finite()) fail("tails need an indexed universe");
        auto f = u_.find_family(name);
        if (!f) fail("unknown vertex family '" + name + "'");
        return *f;
    }
    VertexSet atom() {
        std::string name = ident();
        if (u_.is_finite()) {
            auto v = u_.find_vertex(name);
            if (!v) fail("unknown vertex '" + name + "'");
            return VertexSet::singleton(u_, *v);
        }
        auto f = u_.find_family(name);
        if (!f) fail("unknown vertex family '" + name + "'");
        expect('[');
        std::int64_t i = index();
        expect(']');
        return VertexSet::singleton(u_, Vertex{*f, i});
    }
    VertexSet finite_list() {
        VertexSet r = VertexSet::empty_set(u_);
        if (eat('}')) return r;
        do r = r.unite(atom());
        while (eat(','));
        expect('}');
        return r;
    }
    VertexSet expr() {
        skip();
        if (eat('{')) return finite_list();
        std::string kw = ident();
        if (kw == "FIN") {
            expect('{');
            return finite_list();
        }
        if (kw == "TAIL" || kw == "LTAIL") {
            expect('(');
            std::uint32_t f = family();
            expect(',');
            std::int64_t k = index();
            expect(')');
            return VertexSet::of_family(u_, f, kw == "TAIL" ? IntervalSet::greater_than(k) : IntervalSet::at_most(k));
        }
        if (kw == "UNION" || kw == "INTER") {
            expect('(');
            VertexSet r = expr();
            while (eat(',')) r = kw == "UNION" ? r.unite(expr()) : r.intersect(expr());
            expect(')');
            return r;
        }
        if (kw == "DIFF") {
            expect('(');
            VertexSet a = expr();
            expect(',');
            VertexSet b = expr();
            expect(')');
            return a.minus(b);
        }
        fail("unknown set operator '" + kw + "'");
    }

    const Universe& u_;
    std::string s_;
    bool relative_;
    std::size_t p_ = 0;
};

}  // namespace

VertexSet parse_set(const Universe& u, const std::string& text, bool relative) {
    return SetParser(u, text, relative).run();
}

std::string format_set(const Universe& u, const VertexSet& a, bool doc_style) {
    if (u.is_finite()) {
        std::string out = doc_style ? "FIN{" : "{";
        bool first = true;
        for (const Vertex& v : a.members()) {
            if (!first) out += ",";
            first = false;
            out += u.vertex_name(v);
        }
        return out + "}";
    }
    std::vector<std::string> points, parts;
    for (std::uint32_t f = 0; f < u.size(); ++f) {
        const std::string& fam = u.names()[f];
        const IntervalSet part = a.family_part(f);
        for (const auto& iv : part.intervals()) {
            const std::string lo = iv.lo == kNegInf ? "" : std::to_string(iv.lo - 1);
            const std::string hi = iv.hi == kPosInf ? "" : std::to_string(iv.hi);
            if (iv.lo == kNegInf && iv.hi == kPosInf)
                parts.push_back("UNION(LTAIL(" + fam + ",0),TAIL(" + fam + ",0))");
            else if (iv.hi == kPosInf)
                parts.push_back("TAIL(" + fam + "," + lo + ")");
            else if (iv.lo == kNegInf)
                parts.push_back("LTAIL(" + fam + "," + hi + ")");
            else if (iv.hi - iv.lo < 16)
                for (std::int64_t i = iv.lo; i <= iv.hi; ++i) points.push_back(fam + "[" + std::to_string(i) + "]");
            else
                parts.push_back("INTER(TAIL(" + fam + "," + lo + "),LTAIL(" + fam + "," + hi + "))");
        }
    }
    if (!points.empty() || parts.empty()) {
        std::string fin = "FIN{";
        for (std::size_t i = 0; i < points.size(); ++i) fin += (i ? "," : "") + points[i];
        parts.insert(parts.begin(), fin + "}");
    }
    if (parts.size() == 1) return parts.front();
    std::string out = "UNION(";
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + parts[i];
    return out + ")";
}

Path parse_path(const Ultragraph& g, const std::string& raw) {
    std::string text = trim(raw);
    if (text == "w" || text == "omega") return Path::omega();
    Path::Storage edges;
    std::size_t b = 0;
    while (true) {
        std::size_t d = text.find('.', b);
        std::string name = trim(text.substr(b, d == std::string::npos ? std::string::npos : d - b));
        auto e = g.find_edge(name);
        if (!e) throw ParseError("unknown edge '" + name + "' in path '" + text + "'");
        edges.push_back(*e);
        if (d == std::string::npos) break;
        b = d + 1;
    }
    Path p(std::move(edges));
    if (!g.valid_path(p)) throw ParseError("'" + text + "' is not a path (r(e_{i+1}) must lie in s(e_i))");
    return p;
}

std::string format_path(const Ultragraph& g, const Path& p) {
    if (p.is_omega()) return "w";
    std::string out;
    for (std::size_t i = 0; i < p.length(); ++i) out += (i ? "." : "") + g.edge_name(p[i]);
    return out;
}

Lasso parse_lasso(const Ultragraph& g, const std::string& raw) {
    std::string text = trim(raw);
    auto slash = text.find('/');
    if (slash == std::string::npos) throw ParseError("lasso must be written prefix/cycle");
    std::string pre = trim(text.substr(0, slash)), cyc = trim(text.substr(slash + 1));
    if (cyc.empty() || cyc == "w") throw ParseError("lasso cycle must be nonempty");
    Lasso x;
    if (!pre.empty() && pre != "w") {
        Path p = parse_path(g, pre);
        x.prefix.assign(p.edges().begin(), p.edges().end());
    }
    Path c = parse_path(g, cyc);
    x.cycle.assign(c.edges().begin(), c.edges().end());
    if (!g.valid_lasso(x)) throw ParseError("'" + text + "' is not an infinite path");
    return x.canonical();
}

std::string format_lasso(const Ultragraph& g, const Lasso& x) {
    std::string out;
    for (std::size_t i = 0; i < x.prefix.size(); ++i) out += (i ? "." : "") + g.edge_name(x.prefix[i]);
    out += "/";
    for (std::size_t i = 0; i < x.cycle.size(); ++i) out += (i ? "." : "") + g.edge_name(x.cycle[i]);
    return out;
}

GroupElem parse_group_elem(const Group& G, const std::string& text) {
    auto g = G.parse(trim(text));
    if (!g) throw ParseError("unknown group element '" + trim(text) + "'");
    return *g;
}

}  // namespace ssu
