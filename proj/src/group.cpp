#include "ssu/group.hpp"

#include "ssu/errors.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ssu {

Group Group::integers(bool amenable) {
    Group g;
    g.kind_ = Kind::Integers;
    g.amenable_ = amenable;
    g.generators_ = {1};
    return g;
}

Group Group::finite_table(std::vector<std::string> names, std::vector<std::vector<std::uint32_t>> table,
                          std::uint32_t identity, std::vector<std::uint32_t> generators, bool amenable) {
    const std::size_t n = names.size();
    if (n == 0) throw ParseError("group has no elements");
    std::set<std::string> seen(names.begin(), names.end());
    if (seen.size() != n) throw ParseError("duplicate group element names");
    if (table.size() != n) throw ParseError("Cayley table has wrong number of rows");
    for (const auto& row : table) {
        if (row.size() != n) throw ParseError("Cayley table row has wrong length");
        for (auto x : row)
            if (x >= n) throw ParseError("Cayley table entry outside the group");
    }
    if (identity >= n) throw ParseError("identity not an element");
    for (std::uint32_t a = 0; a < n; ++a)
        if (table[identity][a] != a || table[a][identity] != a)
            throw ParseError("identity law fails at '" + names[a] + "'");
    std::vector<std::uint32_t> inv(n, n);
    for (std::uint32_t a = 0; a < n; ++a) {
        for (std::uint32_t b = 0; b < n; ++b)
            if (table[a][b] == identity && table[b][a] == identity) inv[a] = b;
        if (inv[a] == n) throw ParseError("element '" + names[a] + "' has no inverse");
    }
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b)
            for (std::uint32_t c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw ParseError("associativity fails at (" + names[a] + "," + names[b] + "," + names[c] + ")");
    for (auto x : generators)
        if (x >= n) throw ParseError("generator not an element");

    Group g;
    g.kind_ = Kind::FiniteTable;
    g.amenable_ = amenable;
    g.names_ = std::move(names);
    g.table_ = std::move(table);
    g.inverse_ = std::move(inv);
    g.identity_ = identity;
    for (auto x : generators) g.generators_.push_back(x);
    // generators must generate, otherwise the action is not determined by them
    if (g.ball(static_cast<int>(n)).size() != n) throw ParseError("generators do not generate the group");
    return g;
}

GroupElem Group::multiply(GroupElem a, GroupElem b) const {
    if (is_integers()) {
        GroupElem r;
        if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer group overflow");
        return r;
    }
    return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

GroupElem Group::inverse(GroupElem a) const {
    if (is_integers()) {
        if (a == INT64_MIN) throw std::overflow_error("integer group overflow");
        return -a;
    }
    return inverse_[static_cast<std::size_t>(a)];
}

std::vector<GroupElem> Group::elements() const {
    if (is_integers()) throw InfiniteAnswer("the integers are infinite");
    std::vector<GroupElem> out;
    for (std::size_t i = 0; i < table_.size(); ++i) out.push_back(static_cast<GroupElem>(i));
    return out;
}

std::vector<GroupElem> Group::ball(int radius) const {
    std::vector<GroupElem> out;
    if (is_integers()) {
        out.push_back(0);
        for (int k = 1; k <= radius; ++k) {
            out.push_back(k);
            out.push_back(-k);
        }
        return out;
    }
    std::vector<bool> seen(table_.size(), false);
    std::vector<GroupElem> frontier{identity_};
    seen[identity_] = true;
    for (int k = 0; k < radius && !frontier.empty(); ++k) {
        std::vector<GroupElem> next;
        for (auto x : frontier)
            for (auto s : generators_)
                for (auto y : {multiply(x, s), multiply(x, inverse(s))})
                    if (!seen[static_cast<std::size_t>(y)]) {
                        seen[static_cast<std::size_t>(y)] = true;
                        next.push_back(y);
                    }
        frontier = std::move(next);
    }
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (seen[i]) out.push_back(static_cast<GroupElem>(i));
    return out;
}

std::string Group::name(GroupElem g) const {
    if (is_integers()) return std::to_string(g);
    return names_.at(static_cast<std::size_t>(g));
}

std::optional<GroupElem> Group::parse(const std::string& s) const {
    if (is_integers()) {
        try {
            std::size_t used = 0;
            long long v = std::stoll(s, &used);
            if (used != s.size()) return std::nullopt;
            return v;
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }
    auto it = std::find(names_.begin(), names_.end(), s);
    if (it == names_.end()) return std::nullopt;
    return it - names_.begin();
}

}  // namespace ssu
