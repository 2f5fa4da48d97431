#pragma once

#include "ssu/analysis.hpp"
#include "ssu/document.hpp"

#include <string>

namespace ssu {

inline constexpr const char* kToolVersion = "0.1.0";

struct CliOptions {
    Bounds bounds;
    bool json = false;
    int threads = 1;
    bool timing = false;
};

struct CommandResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

// "max_path_len=3,state_bound=10"; throws std::invalid_argument.
Bounds parse_bounds(const std::string& text, Bounds base = {});

// FNV-1a 64 of the canonical document, as 16 hex digits.
std::string instance_digest(const SelfSimilarSystem& sys);

Json verdict_json(const Verdict& v);
Json bounds_json(const Bounds& b);
Json analysis_json(const SelfSimilarSystem& sys, const AnalysisReport& r, const Bounds& b);
std::string analysis_text(const SelfSimilarSystem& sys, const AnalysisReport& r, const Bounds& b);
// 0 all holds, 2 any fails, 3 any unknown (absent simple verdicts ignored).
int exit_code_for(const std::vector<Status>& statuses);

CommandResult cmd_validate(const std::string& doc_text, const CliOptions& o);
CommandResult cmd_analyze(const std::string& doc_text, const CliOptions& o);
CommandResult cmd_semigroup_eval(const std::string& doc_text, const std::string& expr, const CliOptions& o);
// Image of the filter under theta_s, or the fixed points of theta_s when
// filter is empty.
CommandResult cmd_theta(const std::string& doc_text, const std::string& elem, const std::string& filter,
                        const CliOptions& o);
CommandResult cmd_algebra_eval(const std::string& doc_text, const std::string& expr, const CliOptions& o);
CommandResult cmd_example(const std::string& name);

}  // namespace ssu
