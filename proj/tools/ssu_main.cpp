#include "ssu/document.hpp"
#include "ssu/report.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

// A file path, "-" for stdin, or the name of a bundled example.
std::string read_document(const std::string& where) {
    if (where == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    if (std::filesystem::exists(where)) {
        std::ifstream in(where, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    try {
        return ssu::bundled_example(where);
    } catch (const std::exception&) {
        throw std::runtime_error("cannot read document '" + where + "'");
    }
}

int emit(const ssu::CommandResult& r) {
    std::cout << r.out;
    std::cerr << r.err;
    return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Self-similar ultragraph toolkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", ssu::kToolVersion);

    std::string doc, bounds_text, expr, elem, filter, example;
    ssu::CliOptions opt;
    auto common = [&](CLI::App* c, bool analysis) {
        c->add_option("doc", doc, "instance document (path, '-' or bundled example name)")->required();
        c->add_flag("--json", opt.json, "emit JSON");
        c->add_option("--bounds", bounds_text, "k=v,... for max_path_len, group_ball_radius, lasso_bound, state_bound");
        if (analysis) {
            c->add_option("--threads", opt.threads, "worker threads")->check(CLI::PositiveNumber);
            c->add_flag("--timing", opt.timing, "include wall time");
        }
    };

    auto* validate = app.add_subcommand("validate", "check an instance document");
    common(validate, false);
    auto* analyze = app.add_subcommand("analyze", "check the sufficient conditions and report verdicts");
    common(analyze, true);

    auto* semigroup = app.add_subcommand("semigroup", "inverse semigroup evaluator");
    semigroup->require_subcommand(1);
    auto* sg_eval = semigroup->add_subcommand("eval", "evaluate a product of quadruples");
    common(sg_eval, false);
    sg_eval->add_option("expr", expr, "expression")->required();

    auto* theta = app.add_subcommand("theta", "apply theta_s to a tight filter, or list its fixed points");
    common(theta, false);
    theta->add_option("--elem", elem, "semigroup element")->required();
    theta->add_option("--filter", filter, "lasso:p/c, finite:alpha/principal:SET or finite:alpha/tail:fam:+");

    auto* algebra = app.add_subcommand("algebra", "span and crossed product evaluator");
    algebra->require_subcommand(1);
    auto* al_eval = algebra->add_subcommand("eval", "evaluate a linear combination");
    common(al_eval, false);
    al_eval->add_option("expr", expr, "expression")->required();

    auto* ex = app.add_subcommand("example", "print a bundled instance document");
    ex->add_option("name", example, "ex5.1, ex5.2, ex5.3-trivial or ex5.3(t0,t1)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (!bounds_text.empty()) opt.bounds = ssu::parse_bounds(bounds_text);
        if (ex->parsed()) return emit(ssu::cmd_example(example));
        std::string text = read_document(doc);
        if (validate->parsed()) return emit(ssu::cmd_validate(text, opt));
        if (analyze->parsed()) return emit(ssu::cmd_analyze(text, opt));
        if (sg_eval->parsed()) return emit(ssu::cmd_semigroup_eval(text, expr, opt));
        if (theta->parsed()) return emit(ssu::cmd_theta(text, elem, filter, opt));
        if (al_eval->parsed()) return emit(ssu::cmd_algebra_eval(text, expr, opt));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
