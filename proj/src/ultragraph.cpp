#include "ssu/ultragraph.hpp"

#include "ssu/errors.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace ssu {

// ---------------------------------------------------------------- EdgeSet

bool EdgeSet::empty() const {
    return std::all_of(parts_.begin(), parts_.end(), [](const IntervalSet& s) { return s.empty(); });
}

bool EdgeSet::is_finite() const {
    return std::all_of(parts_.begin(), parts_.end(), [](const IntervalSet& s) { return s.is_finite(); });
}

std::optional<std::uint64_t> EdgeSet::size() const {
    std::uint64_t n = 0;
    for (const auto& p : parts_) {
        auto c = p.cardinality();
        if (!c) return std::nullopt;
        n += *c;
    }
    return n;
}

bool EdgeSet::contains(const Edge& e) const {
    return e.family < parts_.size() && parts_[e.family].contains(e.index);
}

std::vector<Edge> EdgeSet::to_list() const {
    if (!is_finite()) throw InfiniteAnswer("edge set is infinite");
    std::vector<Edge> out;
    for (std::uint32_t f = 0; f < parts_.size(); ++f)
        for (const auto& iv : parts_[f].intervals())
            for (std::int64_t i = iv.lo; i <= iv.hi; ++i) out.push_back(Edge{f, i});
    return out;
}

// ------------------------------------------------------------------- Path

Path Path::concat(const Path& o) const {
    Path r = *this;
    r.e_.insert(r.e_.end(), o.e_.begin(), o.e_.end());
    return r;
}

Path Path::prefix(std::size_t n) const {
    Path r;
    r.e_.assign(e_.begin(), e_.begin() + static_cast<std::ptrdiff_t>(std::min(n, e_.size())));
    return r;
}

Path Path::drop(std::size_t n) const {
    Path r;
    if (n < e_.size()) r.e_.assign(e_.begin() + static_cast<std::ptrdiff_t>(n), e_.end());
    return r;
}

bool Path::is_prefix_of(const Path& o) const {
    return e_.size() <= o.e_.size() && std::equal(e_.begin(), e_.end(), o.e_.begin());
}

std::size_t Path::hash() const {
    std::size_t h = 14695981039346656037ULL;
    for (const auto& e : e_) {
        h = (h ^ e.family) * 1099511628211ULL;
        h = (h ^ static_cast<std::size_t>(e.index)) * 1099511628211ULL;
    }
    return h;
}

// ------------------------------------------------------------------ Lasso

Lasso Lasso::canonical() const {
    if (cycle.empty()) throw std::invalid_argument("lasso with empty cycle");
    Lasso r = *this;
    const std::size_t n = r.cycle.size();
    for (std::size_t d = 1; d < n; ++d) {
        if (n % d) continue;
        bool periodic = true;
        for (std::size_t i = d; i < n && periodic; ++i) periodic = r.cycle[i] == r.cycle[i - d];
        if (periodic) {
            r.cycle.resize(d);
            break;
        }
    }
    while (!r.prefix.empty() && r.prefix.back() == r.cycle.back()) {
        std::rotate(r.cycle.rbegin(), r.cycle.rbegin() + 1, r.cycle.rend());
        r.prefix.pop_back();
    }
    return r;
}

Lasso Lasso::drop(std::size_t n) const {
    Lasso r = *this;
    if (n <= r.prefix.size()) {
        r.prefix.erase(r.prefix.begin(), r.prefix.begin() + static_cast<std::ptrdiff_t>(n));
        return r.canonical();
    }
    std::size_t k = (n - r.prefix.size()) % r.cycle.size();
    r.prefix.clear();
    std::rotate(r.cycle.begin(), r.cycle.begin() + static_cast<std::ptrdiff_t>(k), r.cycle.end());
    return r.canonical();
}

Lasso Lasso::tail() const { return drop(1); }

Edge Lasso::letter(std::size_t n) const {
    if (n < prefix.size()) return prefix[n];
    return cycle[(n - prefix.size()) % cycle.size()];
}

std::vector<Edge> Lasso::realize(std::size_t n) const {
    std::vector<Edge> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(letter(i));
    return out;
}

Lasso Lasso::prepend(const Path& p) const {
    Lasso r;
    r.prefix.assign(p.edges().begin(), p.edges().end());
    r.prefix.insert(r.prefix.end(), prefix.begin(), prefix.end());
    r.cycle = cycle;
    return r.canonical();
}

// ------------------------------------------------------------- Ultragraph

Ultragraph::Ultragraph(std::shared_ptr<const Universe> u, std::vector<EdgeFamily> families)
    : u_(std::move(u)), fams_(std::move(families)) {
    std::sort(fams_.begin(), fams_.end(),
              [](const EdgeFamily& a, const EdgeFamily& b) { return a.name < b.name; });
    for (std::size_t i = 1; i < fams_.size(); ++i)
        if (fams_[i].name == fams_[i - 1].name) throw ParseError("duplicate edge id '" + fams_[i].name + "'");
    for (const auto& f : fams_) {
        if (f.indexed != indexed()) throw ParseError("edge '" + f.name + "' does not match the universe kind");
        if (!f.source.bound() || f.source.universe() != u_.get())
            throw ParseError("edge '" + f.name + "' has no source in this universe");
        if (f.source.empty()) throw ParseError("edge '" + f.name + "' has an empty source");
        if (f.indexed && f.range_family >= u_->size()) throw ParseError("edge family '" + f.name + "' has a bad range rule");
    }
    // Regularity: in-degree >= 1 (finiteness is structural: finitely many families).
    if (indexed()) {
        for (std::uint32_t vf = 0; vf < u_->size(); ++vf) {
            bool hit = std::any_of(fams_.begin(), fams_.end(),
                                   [&](const EdgeFamily& f) { return f.range_family == vf; });
            if (!hit) throw RegularityViolation("vertices of family '" + u_->names()[vf] + "' receive no edge");
        }
    } else {
        for (std::size_t v = 0; v < u_->size(); ++v)
            if (in_degree(Vertex{0, static_cast<std::int64_t>(v)}) == 0)
                throw RegularityViolation("vertex '" + u_->names()[v] + "' receives no edge");
    }
}

Vertex Ultragraph::range(const Edge& e) const {
    const auto& f = fams_.at(e.family);
    if (!f.indexed) return f.range;
    return Vertex{f.range_family, e.index + f.range_offset};
}

VertexSet Ultragraph::range_set(const Edge& e) const { return singleton(range(e)); }

VertexSet Ultragraph::source(const Edge& e) const {
    const auto& f = fams_.at(e.family);
    if (!f.indexed) return f.source;
    return f.source.translated(e.index);
}

bool Ultragraph::valid_edge(const Edge& e) const {
    if (e.family >= fams_.size()) return false;
    return fams_[e.family].indexed || e.index == 0;
}

std::vector<Edge> Ultragraph::edges() const {
    if (indexed()) throw InfiniteAnswer("indexed ultragraphs have infinitely many edges");
    std::vector<Edge> out;
    for (std::uint32_t f = 0; f < fams_.size(); ++f) out.push_back(Edge{f, 0});
    return out;
}

VertexSet Ultragraph::range_of(const Path& p) const {
    return p.is_omega() ? full() : range_set(p.front());
}

VertexSet Ultragraph::source_of(const Path& p) const {
    return p.is_omega() ? full() : source(p.back());
}

EdgeSet Ultragraph::edges_into(const VertexSet& a) const {
    EdgeSet out(fams_.size());
    for (std::uint32_t f = 0; f < fams_.size(); ++f) {
        const auto& fam = fams_[f];
        if (!fam.indexed) {
            if (a.contains(fam.range)) out.parts()[f] = IntervalSet::point(0);
        } else {
            out.parts()[f] = a.family_part(fam.range_family).shifted(-fam.range_offset);
        }
    }
    return out;
}

std::vector<Edge> Ultragraph::edges_into_list(const VertexSet& a) const { return edges_into(a).to_list(); }

std::uint64_t Ultragraph::in_degree(Vertex v) const {
    std::uint64_t n = 0;
    for (const auto& f : fams_) {
        if (f.indexed)
            n += f.range_family == v.family ? 1 : 0;
        else
            n += f.range == v ? 1 : 0;
    }
    return n;
}

bool Ultragraph::composable(const Edge& first, const Edge& next) const {
    return source(first).contains(range(next));
}

bool Ultragraph::valid_path(const Path& p) const {
    for (std::size_t i = 0; i < p.length(); ++i) {
        if (!valid_edge(p[i])) return false;
        if (i > 0 && !composable(p[i - 1], p[i])) return false;
    }
    return true;
}

bool Ultragraph::valid_lasso(const Lasso& x) const {
    if (x.cycle.empty()) return false;
    std::vector<Edge> word = x.prefix;
    word.insert(word.end(), x.cycle.begin(), x.cycle.end());
    word.push_back(x.cycle.front());
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (!valid_edge(word[i])) return false;
        if (i > 0 && !composable(word[i - 1], word[i])) return false;
    }
    return true;
}

std::vector<Path> Ultragraph::enumerate_paths(const VertexSet& a, int max_len) const {
    std::vector<Path> out;
    if (max_len <= 0) return out;
    Path::Storage cur;
    std::function<void(const VertexSet&)> rec = [&](const VertexSet& into) {
        for (const Edge& e : edges_into_list(into)) {
            cur.push_back(e);
            out.emplace_back(cur);
            if (static_cast<int>(cur.size()) < max_len) rec(source(e));
            cur.pop_back();
        }
    };
    rec(a);
    return out;
}

std::string Ultragraph::edge_name(const Edge& e) const {
    const auto& f = fams_.at(e.family);
    if (!f.indexed) return f.name;
    return f.name + "[" + std::to_string(e.index) + "]";
}

std::optional<Edge> Ultragraph::find_edge(const std::string& name) const {
    if (!indexed()) {
        for (std::uint32_t f = 0; f < fams_.size(); ++f)
            if (fams_[f].name == name) return Edge{f, 0};
        return std::nullopt;
    }
    auto lb = name.find('[');
    if (lb == std::string::npos || name.back() != ']') return std::nullopt;
    std::string fam = name.substr(0, lb), num = name.substr(lb + 1, name.size() - lb - 2);
    for (std::uint32_t f = 0; f < fams_.size(); ++f) {
        if (fams_[f].name != fam) continue;
        try {
            std::size_t used = 0;
            long long idx = std::stoll(num, &used);
            if (used != num.size()) return std::nullopt;
            return Edge{f, idx};
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }
    return std::nullopt;
}

}  // namespace ssu
