#pragma once

#include <string>
#include <utility>
#include <vector>

namespace ssu {

enum class Status { Holds, Fails, Unknown };

std::string to_string(Status s);

// Structured evidence: a kind tag plus ordered key/value fields.
struct Witness {
    std::string kind;
    std::vector<std::pair<std::string, std::string>> fields;

    Witness& add(std::string key, std::string value) {
        fields.emplace_back(std::move(key), std::move(value));
        return *this;
    }
    const std::string* get(const std::string& key) const {
        for (const auto& [k, v] : fields)
            if (k == key) return &v;
        return nullptr;
    }
    bool operator==(const Witness&) const = default;
};

struct Verdict {
    Status status = Status::Unknown;
    std::vector<Witness> witnesses;
    std::string note;

    static Verdict holds(std::string note = {}) { return {Status::Holds, {}, std::move(note)}; }
    static Verdict fails(Witness w, std::string note = {}) { return {Status::Fails, {std::move(w)}, std::move(note)}; }
    static Verdict unknown(std::string note) { return {Status::Unknown, {}, std::move(note)}; }

    bool is_holds() const { return status == Status::Holds; }
    bool is_fails() const { return status == Status::Fails; }
    bool is_unknown() const { return status == Status::Unknown; }
};

// Conjunction: Fails dominates, then Unknown.
Status conjunction(Status a, Status b);

struct Bounds {
    int max_path_len = 6;
    int group_ball_radius = 6;
    int lasso_bound = 6;
    int state_bound = 64;

    void validate() const;  // throws std::invalid_argument unless all >= 1
    bool operator==(const Bounds&) const = default;
};

}  // namespace ssu
