#pragma once

#include "ssu/interval_set.hpp"

#include <boost/container/small_vector.hpp>

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ssu {

// A vertex is (family, index). Finite universes use family 0 and the vertex id
// as index; IntIndexed universes use the family position and the integer index.
struct Vertex {
    std::uint32_t family = 0;
    std::int64_t index = 0;
    auto operator<=>(const Vertex&) const = default;
};

class Universe {
public:
    enum class Kind { Finite, IntIndexed };

    static std::shared_ptr<const Universe> finite(std::vector<std::string> names);
    static std::shared_ptr<const Universe> int_indexed(std::vector<std::string> families);

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::Finite; }
    // Finite: number of vertices. IntIndexed: number of families.
    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }

    std::string vertex_name(Vertex v) const;
    std::optional<Vertex> find_vertex(const std::string& name) const;
    std::optional<std::uint32_t> find_family(const std::string& name) const;

private:
    Kind kind_ = Kind::Finite;
    std::vector<std::string> names_;
};

// Element of the generated set algebra. Bitset over vertices for finite
// universes; one IntervalSet per family for IntIndexed universes.
class VertexSet {
public:
    VertexSet() = default;  // unbound placeholder; not usable in set operations

    static VertexSet empty_set(const Universe& u);
    static VertexSet full(const Universe& u);
    static VertexSet singleton(const Universe& u, Vertex v);
    static VertexSet of_family(const Universe& u, std::uint32_t family, IntervalSet part);

    const Universe* universe() const { return u_; }
    bool bound() const { return u_ != nullptr; }

    bool empty() const;
    bool is_finite() const;
    std::optional<std::uint64_t> cardinality() const;
    bool contains(Vertex v) const;
    bool subset_of(const VertexSet& o) const;
    bool intersects(const VertexSet& o) const { return !intersect(o).empty(); }
    std::optional<Vertex> as_singleton() const;
    std::vector<Vertex> members() const;  // throws InfiniteAnswer

    VertexSet unite(const VertexSet& o) const;
    VertexSet intersect(const VertexSet& o) const;
    VertexSet minus(const VertexSet& o) const;

    // Per-family view (finite universes: the ids as an interval set).
    IntervalSet family_part(std::uint32_t family) const;
    // Translate every family by d (IntIndexed only).
    VertexSet translated(std::int64_t d) const;
    // Translate each family f by shifts[f] (IntIndexed only).
    VertexSet shifted_per_family(const std::vector<std::int64_t>& shifts) const;
    // Apply a vertex permutation (finite universes only).
    VertexSet permuted(const std::vector<std::uint32_t>& perm) const;

    bool operator==(const VertexSet& o) const;
    std::strong_ordering operator<=>(const VertexSet& o) const;
    std::size_t hash() const;

private:
    void check_same(const VertexSet& o) const;
    const Universe* u_ = nullptr;
    boost::container::small_vector<std::uint64_t, 1> bits_;
    boost::container::small_vector<IntervalSet, 1> fam_;
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace ssu
