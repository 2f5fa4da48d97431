#include "ssu/vertex_set.hpp"

#include "ssu/errors.hpp"

#include <algorithm>
#include <set>

namespace ssu {

std::shared_ptr<const Universe> Universe::finite(std::vector<std::string> names) {
    std::set<std::string> seen;
    for (const auto& n : names) {
        if (n.empty()) throw ParseError("empty vertex id");
        if (!seen.insert(n).second) throw ParseError("duplicate vertex id '" + n + "'");
    }
    auto u = std::make_shared<Universe>();
    u->kind_ = Kind::Finite;
    u->names_ = std::move(names);
    return u;
}

std::shared_ptr<const Universe> Universe::int_indexed(std::vector<std::string> families) {
    std::set<std::string> seen;
    for (const auto& n : families) {
        if (n.empty()) throw ParseError("empty family name");
        if (!seen.insert(n).second) throw ParseError("duplicate vertex family '" + n + "'");
    }
    auto u = std::make_shared<Universe>();
    u->kind_ = Kind::IntIndexed;
    u->names_ = std::move(families);
    return u;
}

std::string Universe::vertex_name(Vertex v) const {
    if (is_finite()) return names_.at(static_cast<std::size_t>(v.index));
    return names_.at(v.family) + "[" + std::to_string(v.index) + "]";
}

std::optional<Vertex> Universe::find_vertex(const std::string& name) const {
    if (is_finite()) {
        auto it = std::find(names_.begin(), names_.end(), name);
        if (it == names_.end()) return std::nullopt;
        return Vertex{0, it - names_.begin()};
    }
    auto lb = name.find('[');
    if (lb == std::string::npos || name.back() != ']') return std::nullopt;
    auto fam = find_family(name.substr(0, lb));
    if (!fam) return std::nullopt;
    try {
        std::size_t used = 0;
        std::string num = name.substr(lb + 1, name.size() - lb - 2);
        long long idx = std::stoll(num, &used);
        if (used != num.size()) return std::nullopt;
        return Vertex{*fam, idx};
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

std::optional<std::uint32_t> Universe::find_family(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<std::uint32_t>(it - names_.begin());
}

// ---------------------------------------------------------------------------

namespace {
std::size_t words_for(std::size_t n) { return (n + 63) / 64; }
}

VertexSet VertexSet::empty_set(const Universe& u) {
    VertexSet s;
    s.u_ = &u;
    if (u.is_finite())
        s.bits_.assign(words_for(u.size()), 0);
    else
        s.fam_.assign(u.size(), IntervalSet{});
    return s;
}

VertexSet VertexSet::full(const Universe& u) {
    VertexSet s;
    s.u_ = &u;
    if (u.is_finite()) {
        s.bits_.assign(words_for(u.size()), ~0ULL);
        if (u.size() % 64) s.bits_.back() = (1ULL << (u.size() % 64)) - 1;
    } else {
        s.fam_.assign(u.size(), IntervalSet::all());
    }
    return s;
}

VertexSet VertexSet::singleton(const Universe& u, Vertex v) {
    VertexSet s = empty_set(u);
    if (u.is_finite()) {
        if (v.index < 0 || static_cast<std::size_t>(v.index) >= u.size())
            throw std::out_of_range("vertex id out of range");
        s.bits_[v.index / 64] |= 1ULL << (v.index % 64);
    } else {
        s.fam_.at(v.family) = IntervalSet::point(v.index);
    }
    return s;
}

VertexSet VertexSet::of_family(const Universe& u, std::uint32_t family, IntervalSet part) {
    VertexSet s = empty_set(u);
    if (u.is_finite()) {
        for (const auto& iv : part.intervals()) {
            std::int64_t lo = std::max<std::int64_t>(iv.lo, 0);
            std::int64_t hi = std::min<std::int64_t>(iv.hi, static_cast<std::int64_t>(u.size()) - 1);
            for (std::int64_t i = lo; i <= hi; ++i) s.bits_[i / 64] |= 1ULL << (i % 64);
        }
    } else {
        s.fam_.at(family) = std::move(part);
    }
    return s;
}

void VertexSet::check_same(const VertexSet& o) const {
    if (u_ == nullptr || u_ != o.u_) throw UniverseMismatch("vertex sets belong to different universes");
}

bool VertexSet::empty() const {
    if (u_->is_finite())
        return std::all_of(bits_.begin(), bits_.end(), [](std::uint64_t w) { return w == 0; });
    return std::all_of(fam_.begin(), fam_.end(), [](const IntervalSet& s) { return s.empty(); });
}

bool VertexSet::is_finite() const {
    if (u_->is_finite()) return true;
    return std::all_of(fam_.begin(), fam_.end(), [](const IntervalSet& s) { return s.is_finite(); });
}

std::optional<std::uint64_t> VertexSet::cardinality() const {
    std::uint64_t n = 0;
    if (u_->is_finite()) {
        for (auto w : bits_) n += static_cast<std::uint64_t>(__builtin_popcountll(w));
        return n;
    }
    for (const auto& s : fam_) {
        auto c = s.cardinality();
        if (!c) return std::nullopt;
        n += *c;
    }
    return n;
}

bool VertexSet::contains(Vertex v) const {
    if (u_->is_finite()) {
        if (v.index < 0 || static_cast<std::size_t>(v.index) >= u_->size()) return false;
        return (bits_[v.index / 64] >> (v.index % 64)) & 1ULL;
    }
    return v.family < fam_.size() && fam_[v.family].contains(v.index);
}

bool VertexSet::subset_of(const VertexSet& o) const {
    check_same(o);
    if (u_->is_finite()) {
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i] & ~o.bits_[i]) return false;
        return true;
    }
    for (std::size_t f = 0; f < fam_.size(); ++f)
        if (!fam_[f].subset_of(o.fam_[f])) return false;
    return true;
}

std::optional<Vertex> VertexSet::as_singleton() const {
    auto c = cardinality();
    if (!c || *c != 1) return std::nullopt;
    return members().front();
}

std::vector<Vertex> VertexSet::members() const {
    std::vector<Vertex> out;
    if (u_->is_finite()) {
        for (std::size_t i = 0; i < u_->size(); ++i)
            if ((bits_[i / 64] >> (i % 64)) & 1ULL) out.push_back(Vertex{0, static_cast<std::int64_t>(i)});
        return out;
    }
    if (!is_finite()) throw InfiniteAnswer("vertex set is infinite");
    for (std::uint32_t f = 0; f < fam_.size(); ++f)
        for (const auto& iv : fam_[f].intervals())
            for (std::int64_t i = iv.lo; i <= iv.hi; ++i) out.push_back(Vertex{f, i});
    return out;
}

VertexSet VertexSet::unite(const VertexSet& o) const {
    check_same(o);
    VertexSet r = *this;
    if (u_->is_finite()) {
        for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] |= o.bits_[i];
    } else {
        for (std::size_t f = 0; f < fam_.size(); ++f) r.fam_[f] = fam_[f].unite(o.fam_[f]);
    }
    return r;
}

VertexSet VertexSet::intersect(const VertexSet& o) const {
    check_same(o);
    VertexSet r = *this;
    if (u_->is_finite()) {
        for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] &= o.bits_[i];
    } else {
        for (std::size_t f = 0; f < fam_.size(); ++f) r.fam_[f] = fam_[f].intersect(o.fam_[f]);
    }
    return r;
}

VertexSet VertexSet::minus(const VertexSet& o) const {
    check_same(o);
    VertexSet r = *this;
    if (u_->is_finite()) {
        for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] &= ~o.bits_[i];
    } else {
        for (std::size_t f = 0; f < fam_.size(); ++f) r.fam_[f] = fam_[f].minus(o.fam_[f]);
    }
    return r;
}

IntervalSet VertexSet::family_part(std::uint32_t family) const {
    if (!u_->is_finite()) return fam_.at(family);
    IntervalSet r;
    for (std::size_t i = 0; i < u_->size(); ++i)
        if ((bits_[i / 64] >> (i % 64)) & 1ULL)
            r = r.unite(IntervalSet::point(static_cast<std::int64_t>(i)));
    return r;
}

VertexSet VertexSet::translated(std::int64_t d) const {
    if (u_->is_finite()) throw Unsupported("translation on a finite universe");
    VertexSet r = *this;
    for (auto& s : r.fam_) s = s.shifted(d);
    return r;
}

VertexSet VertexSet::shifted_per_family(const std::vector<std::int64_t>& shifts) const {
    if (u_->is_finite()) throw Unsupported("family shift on a finite universe");
    VertexSet r = *this;
    for (std::size_t f = 0; f < r.fam_.size(); ++f) r.fam_[f] = r.fam_[f].shifted(shifts.at(f));
    return r;
}

VertexSet VertexSet::permuted(const std::vector<std::uint32_t>& perm) const {
    if (!u_->is_finite()) throw Unsupported("permutation on an indexed universe");
    VertexSet r = empty_set(*u_);
    for (std::size_t i = 0; i < u_->size(); ++i)
        if ((bits_[i / 64] >> (i % 64)) & 1ULL) r.bits_[perm[i] / 64] |= 1ULL << (perm[i] % 64);
    return r;
}

bool VertexSet::operator==(const VertexSet& o) const {
    return u_ == o.u_ && bits_ == o.bits_ && fam_ == o.fam_;
}

std::strong_ordering VertexSet::operator<=>(const VertexSet& o) const {
    if (auto c = std::compare_three_way{}(u_, o.u_); c != 0) return c;
    if (auto c = std::lexicographical_compare_three_way(bits_.begin(), bits_.end(), o.bits_.begin(),
                                                        o.bits_.end());
        c != 0)
        return c;
    return std::lexicographical_compare_three_way(fam_.begin(), fam_.end(), o.fam_.begin(), o.fam_.end());
}

std::size_t VertexSet::hash() const {
    std::size_t h = 1469598103934665603ULL;
    for (auto w : bits_) h = (h ^ std::hash<std::uint64_t>{}(w)) * 1099511628211ULL;
    for (const auto& s : fam_) h = (h ^ s.hash()) * 1099511628211ULL;
    return h;
}

}  // namespace ssu
