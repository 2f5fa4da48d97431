#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ssu {

// Group elements: the integer itself for Z, the element position for tables.
using GroupElem = std::int64_t;

class Group {
public:
    enum class Kind { FiniteTable, Integers };

    static Group integers(bool amenable = true);
    // Validates closure, identity, inverses and associativity.
    static Group finite_table(std::vector<std::string> names, std::vector<std::vector<std::uint32_t>> table,
                              std::uint32_t identity, std::vector<std::uint32_t> generators, bool amenable);

    Kind kind() const { return kind_; }
    bool is_integers() const { return kind_ == Kind::Integers; }
    bool amenable() const { return amenable_; }

    GroupElem identity() const { return is_integers() ? 0 : identity_; }
    bool is_identity(GroupElem g) const { return g == identity(); }
    GroupElem multiply(GroupElem a, GroupElem b) const;  // throws std::overflow_error on Z
    GroupElem inverse(GroupElem a) const;
    std::size_t order() const { return table_.size(); }  // 0 for Z
    const std::vector<GroupElem>& generators() const { return generators_; }
    std::vector<GroupElem> elements() const;  // finite tables only

    // Deterministic ball: Z gives 0,1,-1,...,R,-R; tables give the elements of
    // word length <= R in index order.
    std::vector<GroupElem> ball(int radius) const;

    std::string name(GroupElem g) const;
    std::optional<GroupElem> parse(const std::string& s) const;
    const std::vector<std::string>& names() const { return names_; }

private:
    Kind kind_ = Kind::Integers;
    bool amenable_ = true;
    std::vector<std::string> names_;
    std::vector<std::vector<std::uint32_t>> table_;
    std::vector<std::uint32_t> inverse_;
    std::uint32_t identity_ = 0;
    std::vector<GroupElem> generators_;
};

}  // namespace ssu
