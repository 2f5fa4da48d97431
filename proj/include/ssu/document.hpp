#pragma once

#include "ssu/system.hpp"

#include <json.hpp>

#include <memory>
#include <string>
#include <vector>

namespace ssu {

using Json = nlohmann::json;
using SystemPtr = std::shared_ptr<const SelfSimilarSystem>;

// Instance documents (JSON). Throws ParseError, RegularityViolation,
// NonSingletonRange.
SystemPtr load_system(const Json& doc);
SystemPtr load_system_text(const std::string& text);

// Canonical document for a loaded system; load_system(system_to_document(s))
// describes the same system.
Json system_to_document(const SelfSimilarSystem& sys);

// Vertices lying in no source set (reported as information only).
std::vector<Vertex> vertices_emitting_nothing(const SelfSimilarSystem& sys);

// Bundled instances: ex5.1, ex5.2, ex5.3-trivial and ex5.3(t0,t1).
std::vector<std::string> bundled_example_names();
std::string bundled_example(const std::string& name);  // throws UnknownExample

}  // namespace ssu
