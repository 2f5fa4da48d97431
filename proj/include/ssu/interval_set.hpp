#pragma once

#include <boost/container/small_vector.hpp>

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>

namespace ssu {

// Endpoint sentinels for unbounded intervals. Finite members must lie strictly
// between them.
inline constexpr std::int64_t kNegInf = std::numeric_limits<std::int64_t>::min();
inline constexpr std::int64_t kPosInf = std::numeric_limits<std::int64_t>::max();

struct Interval {
    std::int64_t lo;  // inclusive, kNegInf if unbounded below
    std::int64_t hi;  // inclusive, kPosInf if unbounded above
    auto operator<=>(const Interval&) const = default;
};

// Subset of Z as a sorted list of disjoint, non-adjacent closed intervals.
// Because the form is canonical, structural equality is set equality.
class IntervalSet {
public:
    IntervalSet() = default;

    static IntervalSet all();
    static IntervalSet point(std::int64_t x);
    static IntervalSet closed(std::int64_t lo, std::int64_t hi);
    static IntervalSet greater_than(std::int64_t k);  // {j : j > k}
    static IntervalSet at_most(std::int64_t k);       // {j : j <= k}

    bool empty() const { return iv_.empty(); }
    bool is_finite() const;
    bool bounded_below() const { return iv_.empty() || iv_.front().lo != kNegInf; }
    bool bounded_above() const { return iv_.empty() || iv_.back().hi != kPosInf; }
    std::optional<std::uint64_t> cardinality() const;
    bool contains(std::int64_t x) const;
    bool subset_of(const IntervalSet& o) const;

    IntervalSet unite(const IntervalSet& o) const;
    IntervalSet intersect(const IntervalSet& o) const;
    IntervalSet minus(const IntervalSet& o) const;
    IntervalSet complement() const;
    IntervalSet shifted(std::int64_t d) const;

    // Smallest/largest member; only meaningful when bounded on that side.
    std::int64_t min() const { return iv_.front().lo; }
    std::int64_t max() const { return iv_.back().hi; }

    const boost::container::small_vector<Interval, 2>& intervals() const { return iv_; }

    bool operator==(const IntervalSet& o) const { return iv_ == o.iv_; }
    std::strong_ordering operator<=>(const IntervalSet& o) const;
    std::size_t hash() const;

private:
    void push(Interval v);  // append keeping the canonical form
    boost::container::small_vector<Interval, 2> iv_;
};

std::string to_string(const IntervalSet& s);

}  // namespace ssu
