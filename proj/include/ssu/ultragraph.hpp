#pragma once

#include "ssu/vertex_set.hpp"

#include <boost/container/small_vector.hpp>

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ssu {

// Edge (family, index). A finite ultragraph stores every edge as its own
// one-member family with index 0.
struct Edge {
    std::uint32_t family = 0;
    std::int64_t index = 0;
    auto operator<=>(const Edge&) const = default;
};

struct EdgeFamily {
    std::string name;
    bool indexed = false;
    // finite edge
    Vertex range;
    // finite edge: its source; indexed family: the source of e[0] (s(e[i]) is that set translated by i)
    VertexSet source;
    // indexed family: r(e_i) = v[range_family][i + range_offset]
    std::uint32_t range_family = 0;
    std::int64_t range_offset = 0;
    std::string source_expr;  // as written in the document
};

// A set of edges: one index set per family.
class EdgeSet {
public:
    explicit EdgeSet(std::size_t families) : parts_(families) {}
    std::vector<IntervalSet>& parts() { return parts_; }
    const std::vector<IntervalSet>& parts() const { return parts_; }
    bool empty() const;
    bool is_finite() const;
    std::optional<std::uint64_t> size() const;
    bool contains(const Edge& e) const;
    std::vector<Edge> to_list() const;  // throws InfiniteAnswer
    bool operator==(const EdgeSet&) const = default;

private:
    std::vector<IntervalSet> parts_;
};

// Finite path e1...en (n >= 1), or omega when empty.
class Path {
public:
    using Storage = boost::container::small_vector<Edge, 4>;

    Path() = default;  // omega
    explicit Path(Storage edges) : e_(std::move(edges)) {}
    Path(std::initializer_list<Edge> edges) : e_(edges) {}
    static Path omega() { return Path(); }

    bool is_omega() const { return e_.empty(); }
    std::size_t length() const { return e_.size(); }
    const Edge& operator[](std::size_t i) const { return e_[i]; }
    const Edge& front() const { return e_.front(); }
    const Edge& back() const { return e_.back(); }
    const Storage& edges() const { return e_; }

    Path concat(const Path& o) const;
    Path prefix(std::size_t n) const;
    Path drop(std::size_t n) const;
    bool is_prefix_of(const Path& o) const;

    auto operator<=>(const Path& o) const {
        if (auto c = e_.size() <=> o.e_.size(); c != 0) return c;
        return std::lexicographical_compare_three_way(e_.begin(), e_.end(), o.e_.begin(), o.e_.end());
    }
    bool operator==(const Path& o) const { return e_ == o.e_; }
    std::size_t hash() const;

private:
    Storage e_;
};

// prefix . cycle^infinity
struct Lasso {
    std::vector<Edge> prefix;
    std::vector<Edge> cycle;

    Lasso canonical() const;
    const Edge& head() const { return prefix.empty() ? cycle.front() : prefix.front(); }
    Lasso tail() const;
    Lasso drop(std::size_t n) const;
    Edge letter(std::size_t n) const;  // 0-based
    std::vector<Edge> realize(std::size_t n) const;
    Lasso prepend(const Path& p) const;
    std::size_t period() const { return cycle.size(); }

    auto operator<=>(const Lasso&) const = default;
};

class Ultragraph {
public:
    Ultragraph(std::shared_ptr<const Universe> u, std::vector<EdgeFamily> families);

    const Universe& universe() const { return *u_; }
    std::shared_ptr<const Universe> universe_ptr() const { return u_; }
    bool indexed() const { return !u_->is_finite(); }
    std::size_t family_count() const { return fams_.size(); }
    const EdgeFamily& family(std::uint32_t f) const { return fams_.at(f); }

    Vertex range(const Edge& e) const;
    VertexSet range_set(const Edge& e) const;
    VertexSet source(const Edge& e) const;
    bool valid_edge(const Edge& e) const;
    std::vector<Edge> edges() const;  // finite ultragraphs only

    VertexSet full() const { return VertexSet::full(*u_); }
    VertexSet empty_set() const { return VertexSet::empty_set(*u_); }
    VertexSet singleton(Vertex v) const { return VertexSet::singleton(*u_, v); }
    // r and s of paths; omega gives the whole vertex set.
    VertexSet range_of(const Path& p) const;
    VertexSet source_of(const Path& p) const;

    EdgeSet edges_into(const VertexSet& a) const;
    std::vector<Edge> edges_into_list(const VertexSet& a) const;  // throws InfiniteAnswer
    std::uint64_t in_degree(Vertex v) const;

    bool composable(const Edge& first, const Edge& next) const;
    bool valid_path(const Path& p) const;
    bool valid_lasso(const Lasso& x) const;

    std::vector<Path> enumerate_paths(const VertexSet& a, int max_len) const;

    std::string edge_name(const Edge& e) const;
    std::optional<Edge> find_edge(const std::string& name) const;
    std::string vertex_name(Vertex v) const { return u_->vertex_name(v); }

private:
    std::shared_ptr<const Universe> u_;
    std::vector<EdgeFamily> fams_;
};

struct PathHash {
    std::size_t operator()(const Path& p) const { return p.hash(); }
};

}  // namespace ssu
