#include "ssu/filters.hpp"

#include "ssu/errors.hpp"
#include "ssu/notation.hpp"

#include <algorithm>
#include <set>

namespace ssu {

SetFilter SetFilter::principal(VertexSet gen, std::optional<VertexSet> ambient) {
    SetFilter f;
    f.kind = Kind::Principal;
    f.ambient = std::move(ambient);
    f.generator = f.ambient ? gen.intersect(*f.ambient) : std::move(gen);
    return f;
}

SetFilter SetFilter::tail(std::uint32_t family, int direction, std::optional<VertexSet> ambient) {
    SetFilter f;
    f.kind = Kind::Tail;
    f.family = family;
    f.direction = direction >= 0 ? +1 : -1;
    f.ambient = std::move(ambient);
    return f;
}

namespace {

IntervalSet ambient_part(const SetFilter& f) {
    return f.ambient ? f.ambient->family_part(f.family) : IntervalSet::all();
}

}  // namespace

bool SetFilter::contains(const VertexSet& c) const {
    if (ambient && !c.subset_of(*ambient)) return false;
    if (kind == Kind::Principal) return generator.subset_of(c);
    // c must contain the ambient part of some tail of the family
    IntervalSet missing = ambient_part(*this).minus(c.family_part(family));
    return direction > 0 ? missing.bounded_above() : missing.bounded_below();
}

bool SetFilter::well_formed() const {
    if (kind == Kind::Principal) return generator.bound() && !generator.empty() && !generator.is_finite();
    IntervalSet a = ambient_part(*this);
    return direction > 0 ? !a.bounded_above() : !a.bounded_below();
}

TightFilter TightFilter::finite_type(const SelfSimilarSystem& sys, Path alpha, SetFilter b) {
    const Ultragraph& U = sys.graph();
    std::optional<VertexSet> amb;
    if (!alpha.is_omega()) amb = U.source_of(alpha);
    SetFilter nb = b.kind == SetFilter::Kind::Principal ? SetFilter::principal(b.generator, amb)
                                                        : SetFilter::tail(b.family, b.direction, amb);
    if (!nb.well_formed()) throw DomainError("finite-type filters need infinite members");
    TightFilter f;
    f.kind = Kind::FiniteType;
    f.alpha = std::move(alpha);
    f.filter = std::move(nb);
    return f;
}

bool filter_contains(const SelfSimilarSystem& sys, const TightFilter& f, const Element& q) {
    if (!is_idempotent(sys, q)) throw NotIdempotent("filters contain idempotents only");
    const Ultragraph& U = sys.graph();
    const Path& beta = q.quad().alpha;
    const VertexSet& c = q.quad().set;
    if (f.kind == TightFilter::Kind::PathType) {
        const std::size_t n = beta.length();
        for (std::size_t i = 0; i < n; ++i)
            if (f.x.letter(i) != beta[i]) return false;
        return U.range_set(f.x.letter(n)).subset_of(c) && c.subset_of(U.source_of(beta));
    }
    if (beta == f.alpha) return f.filter.contains(c);
    if (beta.length() < f.alpha.length() && beta.is_prefix_of(f.alpha))
        return U.range_set(f.alpha[beta.length()]).subset_of(c);
    return false;
}

bool in_cylinder(const SelfSimilarSystem& sys, const TightFilter& f, const Path& alpha, const VertexSet& a) {
    return filter_contains(sys, f, idempotent(sys, alpha, a));
}

std::optional<TightFilter> theta_apply(const SelfSimilarSystem& sys, const Element& s, const TightFilter& f,
                                       int state_bound) {
    if (s.is_zero()) throw DomainError("theta of zero is undefined");
    const Quad& q = s.quad();
    const Group& G = sys.group();
    Element dom(Quad{q.beta, sys.act(G.inverse(q.g), q.set), G.identity(), q.beta});
    if (!filter_contains(sys, f, dom)) throw DomainError("filter is not in the domain of theta_s");

    if (f.kind == TightFilter::Kind::PathType) {
        Lasso y = f.x.drop(q.beta.length());
        auto z = sys.act_lasso(q.g, y, state_bound);
        if (!z) return std::nullopt;
        return TightFilter::path_type(z->prepend(q.alpha));
    }
    // f.alpha = beta gamma (domain membership forces beta to be a prefix)
    Path gamma = f.alpha.drop(q.beta.length());
    auto [ggamma, k] = sys.act_with_cocycle(q.g, gamma);
    Path alpha2 = q.alpha.concat(ggamma);
    const SetFilter& b = f.filter;
    SetFilter moved = b.kind == SetFilter::Kind::Principal ? SetFilter::principal(sys.act(k, b.generator))
                                                           : SetFilter::tail(b.family, b.direction);
    return TightFilter::finite_type(sys, std::move(alpha2), std::move(moved));
}

std::vector<Lasso> enumerate_path_filters(const SelfSimilarSystem& sys, const VertexSet& in_set, int lasso_bound) {
    const Ultragraph& U = sys.graph();
    if (U.indexed()) throw Unsupported("path filters are enumerated on finite universes only");
    std::set<std::pair<std::size_t, Lasso>> found;
    std::vector<Edge> word;
    auto consider = [&]() {
        for (std::size_t p = 0; p < word.size(); ++p) {
            Lasso x;
            x.prefix.assign(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(p));
            x.cycle.assign(word.begin() + static_cast<std::ptrdiff_t>(p), word.end());
            if (!U.composable(x.cycle.back(), x.cycle.front())) continue;
            Lasso c = x.canonical();
            found.insert({c.prefix.size() + c.cycle.size(), c});
        }
    };
    auto rec = [&](auto&& self, const VertexSet& into) -> void {
        if (static_cast<int>(word.size()) >= lasso_bound) return;
        for (const Edge& e : U.edges_into_list(into)) {
            word.push_back(e);
            consider();
            self(self, U.source(e));
            word.pop_back();
        }
    };
    if (lasso_bound > 0) rec(rec, in_set);
    std::vector<Lasso> out;
    for (auto& [len, x] : found) out.push_back(x);
    return out;
}

std::string format_filter(const SelfSimilarSystem& sys, const TightFilter& f) {
    const Ultragraph& U = sys.graph();
    if (f.kind == TightFilter::Kind::PathType) return "lasso:" + format_lasso(U, f.x);
    std::string out = "finite:" + format_path(U, f.alpha) + "/";
    if (f.filter.kind == SetFilter::Kind::Principal)
        return out + "principal:" + format_set(U.universe(), f.filter.generator);
    return out + "tail:" + U.universe().names()[f.filter.family] + ":" + (f.filter.direction > 0 ? "+" : "-");
}

TightFilter parse_filter(const SelfSimilarSystem& sys, const std::string& raw) {
    const Ultragraph& U = sys.graph();
    std::string text = trim(raw);
    if (text.rfind("lasso:", 0) == 0) {
        Lasso x = parse_lasso(U, text.substr(6));
        return TightFilter::path_type(x);
    }
    if (text.rfind("finite:", 0) == 0) {
        std::string rest = text.substr(7);
        auto slash = rest.find('/');
        if (slash == std::string::npos) throw ParseError("finite filter must be finite:alpha/spec");
        Path alpha = parse_path(U, rest.substr(0, slash));
        std::string spec = rest.substr(slash + 1);
        if (spec.rfind("principal:", 0) == 0)
            return TightFilter::finite_type(sys, alpha, SetFilter::principal(parse_set(U.universe(), spec.substr(10))));
        if (spec.rfind("tail:", 0) == 0) {
            std::string body = spec.substr(5);
            auto colon = body.rfind(':');
            if (colon == std::string::npos) throw ParseError("tail filter must be tail:family:+ or tail:family:-");
            auto fam = U.universe().find_family(body.substr(0, colon));
            std::string dir = body.substr(colon + 1);
            if (!fam || (dir != "+" && dir != "-")) throw ParseError("bad tail filter '" + body + "'");
            return TightFilter::finite_type(sys, alpha, SetFilter::tail(*fam, dir == "+" ? 1 : -1));
        }
        throw ParseError("unknown set filter '" + spec + "'");
    }
    throw ParseError("filter must start with lasso: or finite:");
}

}  // namespace ssu
