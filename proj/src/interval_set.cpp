#include "ssu/interval_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace ssu {

namespace {

void check_finite_point(std::int64_t x) {
    if (x == kNegInf || x == kPosInf) throw std::overflow_error("interval endpoint out of range");
}

std::int64_t add_endpoint(std::int64_t x, std::int64_t d) {
    if (x == kNegInf || x == kPosInf) return x;
    std::int64_t r;
    if (__builtin_add_overflow(x, d, &r) || r == kNegInf || r == kPosInf)
        throw std::overflow_error("interval shift overflow");
    return r;
}

}  // namespace

IntervalSet IntervalSet::all() {
    IntervalSet s;
    s.iv_.push_back({kNegInf, kPosInf});
    return s;
}

IntervalSet IntervalSet::point(std::int64_t x) {
    check_finite_point(x);
    IntervalSet s;
    s.iv_.push_back({x, x});
    return s;
}

IntervalSet IntervalSet::closed(std::int64_t lo, std::int64_t hi) {
    IntervalSet s;
    if (lo <= hi) s.iv_.push_back({lo, hi});
    return s;
}

IntervalSet IntervalSet::greater_than(std::int64_t k) {
    check_finite_point(k);
    check_finite_point(k + 1);
    IntervalSet s;
    s.iv_.push_back({k + 1, kPosInf});
    return s;
}

IntervalSet IntervalSet::at_most(std::int64_t k) {
    check_finite_point(k);
    IntervalSet s;
    s.iv_.push_back({kNegInf, k});
    return s;
}

bool IntervalSet::is_finite() const { return bounded_below() && bounded_above(); }

std::optional<std::uint64_t> IntervalSet::cardinality() const {
    if (!is_finite()) return std::nullopt;
    std::uint64_t n = 0;
    for (const auto& v : iv_) n += static_cast<std::uint64_t>(v.hi - v.lo) + 1;
    return n;
}

bool IntervalSet::contains(std::int64_t x) const {
    auto it = std::upper_bound(iv_.begin(), iv_.end(), x,
                               [](std::int64_t a, const Interval& v) { return a < v.lo; });
    if (it == iv_.begin()) return false;
    --it;
    return x <= it->hi;
}

bool IntervalSet::subset_of(const IntervalSet& o) const { return minus(o).empty(); }

void IntervalSet::push(Interval v) {
    if (v.lo > v.hi) return;
    if (!iv_.empty()) {
        Interval& last = iv_.back();
        if (last.hi == kPosInf || v.lo <= last.hi + 1) {
            last.hi = std::max(last.hi, v.hi);
            return;
        }
    }
    iv_.push_back(v);
}

IntervalSet IntervalSet::unite(const IntervalSet& o) const {
    IntervalSet r;
    std::size_t i = 0, j = 0;
    while (i < iv_.size() || j < o.iv_.size()) {
        if (j == o.iv_.size() || (i < iv_.size() && iv_[i].lo <= o.iv_[j].lo))
            r.push(iv_[i++]);
        else
            r.push(o.iv_[j++]);
    }
    return r;
}

IntervalSet IntervalSet::intersect(const IntervalSet& o) const {
    IntervalSet r;
    std::size_t i = 0, j = 0;
    while (i < iv_.size() && j < o.iv_.size()) {
        std::int64_t lo = std::max(iv_[i].lo, o.iv_[j].lo);
        std::int64_t hi = std::min(iv_[i].hi, o.iv_[j].hi);
        if (lo <= hi) r.push({lo, hi});
        if (iv_[i].hi < o.iv_[j].hi)
            ++i;
        else
            ++j;
    }
    return r;
}

IntervalSet IntervalSet::complement() const {
    IntervalSet r;
    std::int64_t next = kNegInf;  // first integer not yet covered
    bool open = true;
    for (const auto& v : iv_) {
        if (v.lo != kNegInf && (next == kNegInf || next <= v.lo - 1)) r.push({next, v.lo - 1});
        if (v.hi == kPosInf) {
            open = false;
            break;
        }
        next = v.hi + 1;
    }
    if (open) r.push({next, kPosInf});
    return r;
}

IntervalSet IntervalSet::minus(const IntervalSet& o) const { return intersect(o.complement()); }

IntervalSet IntervalSet::shifted(std::int64_t d) const {
    if (d == 0) return *this;
    IntervalSet r;
    for (const auto& v : iv_) r.iv_.push_back({add_endpoint(v.lo, d), add_endpoint(v.hi, d)});
    return r;
}

std::strong_ordering IntervalSet::operator<=>(const IntervalSet& o) const {
    return std::lexicographical_compare_three_way(iv_.begin(), iv_.end(), o.iv_.begin(), o.iv_.end());
}

std::size_t IntervalSet::hash() const {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (const auto& v : iv_) {
        h ^= std::hash<std::int64_t>{}(v.lo) + 0x9e3779b9 + (h << 6) + (h >> 2);
        h ^= std::hash<std::int64_t>{}(v.hi) + 0x9e3779b9 + (h << 6) + (h >> 2);
    }
    return h;
}

std::string to_string(const IntervalSet& s) {
    std::string out = "{";
    bool first = true;
    for (const auto& v : s.intervals()) {
        if (!first) out += ",";
        first = false;
        out += "[" + (v.lo == kNegInf ? std::string("-inf") : std::to_string(v.lo)) + "," +
               (v.hi == kPosInf ? std::string("+inf") : std::to_string(v.hi)) + "]";
    }
    return out + "}";
}

}  // namespace ssu
