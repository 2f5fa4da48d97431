#include "ssu/report.hpp"

#include "ssu/errors.hpp"
#include "ssu/expression.hpp"
#include "ssu/filters.hpp"
#include "ssu/notation.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

namespace ssu {

Bounds parse_bounds(const std::string& text, Bounds base) {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("bounds entry '" + item + "' lacks '='");
        std::string key = trim(item.substr(0, eq));
        int value = 0;
        try {
            std::size_t used = 0;
            value = std::stoi(item.substr(eq + 1), &used);
            if (trim(item.substr(eq + 1 + used)) != "") throw std::invalid_argument("x");
        } catch (const std::exception&) {
            throw std::invalid_argument("bounds value for '" + key + "' is not an integer");
        }
        if (key == "max_path_len") base.max_path_len = value;
        else if (key == "group_ball_radius") base.group_ball_radius = value;
        else if (key == "lasso_bound") base.lasso_bound = value;
        else if (key == "state_bound") base.state_bound = value;
        else throw std::invalid_argument("unknown bound '" + key + "'");
    }
    base.validate();
    return base;
}

std::string instance_digest(const SelfSimilarSystem& sys) {
    std::string text = system_to_document(sys).dump();
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Json verdict_json(const Verdict& v) {
    Json w = Json::array();
    for (const Witness& x : v.witnesses) {
        Json o = Json::object();
        o["kind"] = x.kind;
        for (const auto& [k, val] : x.fields) o[k] = val;
        w.push_back(std::move(o));
    }
    Json out{{"status", to_string(v.status)}, {"witnesses", std::move(w)}};
    if (!v.note.empty()) out["note"] = v.note;
    return out;
}

Json bounds_json(const Bounds& b) {
    return Json{{"max_path_len", b.max_path_len},
                {"group_ball_radius", b.group_ball_radius},
                {"lasso_bound", b.lasso_bound},
                {"state_bound", b.state_bound}};
}

namespace {

Json header(const SelfSimilarSystem& sys) {
    return Json{{"tool", "ssu"}, {"version", kToolVersion}, {"instance", sys.name()}, {"digest", instance_digest(sys)}};
}

Json info_json(const SelfSimilarSystem& sys) {
    Json silent = Json::array();
    for (Vertex v : vertices_emitting_nothing(sys)) silent.push_back(sys.graph().vertex_name(v));
    return Json{{"vertices_in_no_source", silent}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

template <class F>
CommandResult guarded(F&& body) {
    try {
        return body();
    } catch (const Error& e) {
        return {1, "", std::string("error: ") + e.what() + "\n"};
    } catch (const std::exception& e) {
        return {1, "", std::string("error: ") + e.what() + "\n"};
    }
}

void text_verdict(std::ostream& os, const std::string& label, const Verdict& v) {
    os << label << ": " << to_string(v.status);
    if (!v.note.empty()) os << " (" << v.note << ")";
    os << "\n";
    for (const Witness& w : v.witnesses) {
        os << "    " << w.kind;
        for (const auto& [k, val] : w.fields) os << " " << k << "=" << val;
        os << "\n";
    }
}

}  // namespace

Json analysis_json(const SelfSimilarSystem& sys, const AnalysisReport& r, const Bounds& b) {
    Json out = header(sys);
    out["bounds"] = bounds_json(b);
    Json verdicts{{"minimal", verdict_json(r.minimal)}, {"effective", verdict_json(r.effective)}};
    if (r.simple)
        verdicts["simple"] = verdict_json(*r.simple);
    else
        verdicts["simple"] = Json{{"status", "not_asserted"}, {"note", r.simple_reason}};
    out["verdicts"] = std::move(verdicts);
    Json checks{{"g_cofinality", verdict_json(r.cofinality)},
                {"all_g_cycles_have_entrances", verdict_json(r.entrances)},
                {"condition_star", verdict_json(r.condition_star)}};
    if (r.moves_paths) checks["every_vertex_has_a_moved_path"] = verdict_json(*r.moves_paths);
    out["checks"] = std::move(checks);
    Json cycles = Json::array();
    Json disagree = Json::array();
    for (std::size_t i = 0; i < r.cycles.size(); ++i) {
        Json c{{"g", sys.group().name(r.cycles[i].g)},
               {"gamma", format_path(sys.graph(), r.cycles[i].gamma)},
               {"has_entrance", r.cycle_has_entrance[i]},
               {"literal_entrance", r.cycle_literal_entrance[i]}};
        if (r.cycle_has_entrance[i] != r.cycle_literal_entrance[i]) disagree.push_back(c);
        cycles.push_back(std::move(c));
    }
    out["g_cycles"] = std::move(cycles);
    out["entrance_clause_disagreements"] = std::move(disagree);
    out["info"] = info_json(sys);
    out["interpretation"] =
        "each verdict is a sufficient condition: holds proves the property, fails or unknown refutes only the test";
    return out;
}

std::string analysis_text(const SelfSimilarSystem& sys, const AnalysisReport& r, const Bounds& b) {
    std::ostringstream os;
    os << "instance: " << sys.name() << "  digest: " << instance_digest(sys) << "\n";
    os << "bounds: max_path_len=" << b.max_path_len << " group_ball_radius=" << b.group_ball_radius
       << " lasso_bound=" << b.lasso_bound << " state_bound=" << b.state_bound << "\n";
    os << "minimal: " << to_string(r.minimal.status) << "\n";
    os << "effective: " << to_string(r.effective.status) << "\n";
    os << "simple: " << (r.simple ? to_string(r.simple->status) : r.simple_reason) << "\n";
    text_verdict(os, "g_cofinality", r.cofinality);
    text_verdict(os, "all_g_cycles_have_entrances", r.entrances);
    text_verdict(os, "condition_star", r.condition_star);
    if (r.moves_paths) text_verdict(os, "every_vertex_has_a_moved_path", *r.moves_paths);
    os << "g_cycles within bounds: " << r.cycles.size() << "\n";
    for (std::size_t i = 0; i < r.cycles.size(); ++i) {
        os << "    (" << sys.group().name(r.cycles[i].g) << ", " << format_path(sys.graph(), r.cycles[i].gamma)
           << ") entrance=" << (r.cycle_has_entrance[i] ? "yes" : "no");
        if (r.cycle_has_entrance[i] != r.cycle_literal_entrance[i])
            os << " literal_clause=" << (r.cycle_literal_entrance[i] ? "yes" : "no");
        os << "\n";
    }
    os << "verdicts are sufficient conditions only\n";
    return os.str();
}

int exit_code_for(const std::vector<Status>& statuses) {
    bool unknown = false;
    for (Status s : statuses) {
        if (s == Status::Fails) return 2;
        if (s == Status::Unknown) unknown = true;
    }
    return unknown ? 3 : 0;
}

CommandResult cmd_validate(const std::string& doc_text, const CliOptions& o) {
    return guarded([&]() -> CommandResult {
        SystemPtr sys = load_system_text(doc_text);
        Verdict v = validate_system(*sys, o.bounds.group_ball_radius);
        Json out = header(*sys);
        out["validation"] = verdict_json(v);
        out["info"] = info_json(*sys);
        std::string text;
        if (o.json) {
            text = dump(out);
        } else {
            std::ostringstream os;
            os << "instance: " << sys->name() << "  digest: " << instance_digest(*sys) << "\n";
            text_verdict(os, "validation", v);
            text = os.str();
        }
        return {exit_code_for({v.status}), text, ""};
    });
}

CommandResult cmd_analyze(const std::string& doc_text, const CliOptions& o) {
    return guarded([&]() -> CommandResult {
        auto t0 = std::chrono::steady_clock::now();
        SystemPtr sys = load_system_text(doc_text);
        Verdict valid = validate_system(*sys, o.bounds.group_ball_radius);
        if (valid.is_fails()) {
            std::ostringstream os;
            text_verdict(os, "validation", valid);
            return {1, "", "error: invalid system\n" + os.str()};
        }
        AnalysisReport r = analyze(*sys, o.bounds, o.threads);
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        std::string text;
        if (o.json) {
            Json j = analysis_json(*sys, r, o.bounds);
            if (o.timing) j["timing_ms"] = ms;
            text = dump(j);
        } else {
            text = analysis_text(*sys, r, o.bounds);
            if (o.timing) text += "timing_ms: " + std::to_string(ms) + "\n";
        }
        std::vector<Status> st{r.minimal.status, r.effective.status};
        if (r.simple) st.push_back(r.simple->status);
        return {exit_code_for(st), text, ""};
    });
}

CommandResult cmd_semigroup_eval(const std::string& doc_text, const std::string& expr, const CliOptions& o) {
    return guarded([&]() -> CommandResult {
        SystemPtr sys = load_system_text(doc_text);
        Element v = eval_semigroup(*sys, expr);
        std::string s = format_element(*sys, v);
        if (o.json) {
            Json j{{"result", s}, {"zero", v.is_zero()}, {"idempotent", !v.is_zero() && is_idempotent(*sys, v)}};
            return {0, dump(j), ""};
        }
        return {0, s + "\n", ""};
    });
}

CommandResult cmd_theta(const std::string& doc_text, const std::string& elem, const std::string& filter,
                        const CliOptions& o) {
    return guarded([&]() -> CommandResult {
        SystemPtr sys = load_system_text(doc_text);
        Element s = eval_semigroup(*sys, elem);
        if (!filter.empty()) {
            TightFilter f = parse_filter(*sys, filter);
            auto img = theta_apply(*sys, s, f, o.bounds.state_bound);
            if (!img) return {3, "unknown: state_bound exceeded\n", ""};
            std::string t = format_filter(*sys, *img);
            if (o.json) return {0, dump(Json{{"image", t}, {"fixed", *img == f}}), ""};
            return {0, t + "\n", ""};
        }
        FixedPointReport rep = fixed_points(*sys, s, o.bounds);
        Json pts = Json::array();
        std::ostringstream os;
        for (const FixedPoint& p : rep.points) {
            std::string cls = p.classification == FixedPoint::Class::Trivial ? "trivial" : "nontrivial_candidate";
            pts.push_back(Json{{"filter", format_filter(*sys, p.filter)}, {"classification", cls}});
            os << format_filter(*sys, p.filter) << "  " << cls << "\n";
        }
        if (rep.points.empty()) os << "no fixed points found\n";
        os << (rep.exhaustive ? "complete" : "bounded search") << ": " << rep.note << "\n";
        if (o.json)
            return {0, dump(Json{{"fixed_points", pts}, {"exhaustive", rep.exhaustive}, {"note", rep.note}}), ""};
        return {0, os.str(), ""};
    });
}

CommandResult cmd_algebra_eval(const std::string& doc_text, const std::string& expr, const CliOptions& o) {
    return guarded([&]() -> CommandResult {
        SystemPtr sys = load_system_text(doc_text);
        AlgebraValue v = eval_algebra(*sys, expr);
        std::string s = format_algebra(*sys, v);
        if (o.json) return {0, dump(Json{{"result", s}}), ""};
        return {0, s + "\n", ""};
    });
}

CommandResult cmd_example(const std::string& name) {
    return guarded([&]() -> CommandResult { return {0, bundled_example(name), ""}; });
}

}  // namespace ssu
