// Acceptance checks: one PASS/FAIL line per criterion.
#include "ssu/analysis.hpp"
#include "ssu/document.hpp"
#include "ssu/errors.hpp"
#include "ssu/expression.hpp"
#include "ssu/notation.hpp"
#include "ssu/report.hpp"
#include "ssu/span_algebra.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <unordered_map>

using namespace ssu;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

Outcome fail(const std::string& why) { return {false, why}; }

SystemPtr example(const std::string& name) { return load_system_text(bundled_example(name)); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fixed(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", x);
    return buf;
}

// Interned elements with memoised products.
class Table {
public:
    explicit Table(const SelfSimilarSystem& sys) : sys_(sys) {}
    std::size_t id(const Element& e) {
        auto [it, fresh] = ids_.emplace(e, elems_.size());
        if (fresh) elems_.push_back(e);
        return it->second;
    }
    const Element& at(std::size_t i) const { return elems_[i]; }
    std::size_t mul(std::size_t a, std::size_t b) {
        auto key = (static_cast<std::uint64_t>(a) << 32) | b;
        if (auto it = prod_.find(key); it != prod_.end()) return it->second;
        std::size_t r = id(multiply(sys_, elems_[a], elems_[b]));
        prod_.emplace(key, r);
        return r;
    }
    std::size_t inv(std::size_t a) {
        if (auto it = inv_.find(a); it != inv_.end()) return it->second;
        std::size_t r = id(invert(sys_, elems_[a]));
        inv_.emplace(a, r);
        return r;
    }

private:
    const SelfSimilarSystem& sys_;
    std::vector<Element> elems_;
    std::unordered_map<Element, std::size_t, ElementHash> ids_;
    std::unordered_map<std::uint64_t, std::size_t> prod_;
    std::unordered_map<std::size_t, std::size_t> inv_;
};

// ---------------------------------------------------------------- criteria

Outcome c1() {
    auto s = example("ex5.1");
    auto t0 = std::chrono::steady_clock::now();
    AnalysisReport r = analyze(*s, Bounds{});
    double dt = seconds_since(t0);
    if (!r.minimal.is_holds()) return fail("minimal is " + to_string(r.minimal.status));
    if (!r.effective.is_holds()) return fail("effective is " + to_string(r.effective.status));
    if (r.minimal.witnesses.empty() || r.effective.witnesses.empty()) return fail("missing witnesses");
    if (dt >= 5.0) return fail("took " + fixed(dt) + " s");
    return {true, "minimal and effective hold with witnesses in " + fixed(dt) + " s"};
}

Outcome c2() {
    auto s = example("ex5.2");
    CliOptions o;
    o.bounds.max_path_len = 1;
    o.json = true;
    AnalysisReport r = analyze(*s, o.bounds);
    if (!r.cofinality.is_holds()) return fail("not cofinal");
    std::vector<std::string> got;
    for (std::size_t i = 0; i < r.cycles.size(); ++i) {
        if (!r.cycle_has_entrance[i]) return fail("a cycle without entrance");
        got.push_back("(" + s->group().name(r.cycles[i].g) + "," + format_path(s->graph(), r.cycles[i].gamma) + ")");
    }
    if (got != std::vector<std::string>{"(0,e)", "(0,f)", "(1,e)", "(1,f)"}) return fail("unexpected G-cycles");
    if (!r.condition_star.is_holds() || r.condition_star.note.find("vacuous") == std::string::npos)
        return fail("Condition (*) does not hold vacuously");
    if (!r.simple || !r.simple->is_holds()) return fail("simple not asserted as holding");
    std::ifstream in(std::string(SSU_SOURCE_DIR) + "/data/golden/ex5_2_report.json", std::ios::binary);
    std::stringstream golden;
    golden << in.rdbuf();
    CommandResult res = cmd_analyze(bundled_example("ex5.2"), o);
    if (res.out != golden.str()) return fail("report differs from the golden file");
    return {true, "4 cycles with entrances, (*) vacuous, simple holds, golden report matches"};
}

Outcome c3() {
    struct Row {
        const char* name;
        bool expect;
    };
    for (Row r : {Row{"ex5.3-trivial", false}, Row{"ex5.3(3,-3)", true}, Row{"ex5.3(2,1)", true},
                  Row{"ex5.3(0,1)", true}}) {
        auto s = example(r.name);
        bool p = parity_criterion_ex53(*s);
        if (p != r.expect) return fail(std::string("parity wrong for ") + r.name);
        Verdict v = check_condition_star(*s, Bounds{});
        if (v.is_unknown() || v.is_holds() != p) return fail(std::string("Condition (*) disagrees on ") + r.name);
    }
    return {true, "parity criterion and Condition (*) agree on 4 instances"};
}

Outcome c4() {
    std::size_t cases = 0;
    for (const char* name : {"ex5.3(1,1)", "ex5.3(3,-3)", "ex5.3(2,2)"}) {
        auto s = example(name);
        const Ultragraph& U = s->graph();
        Edge e0 = *U.find_edge("e0"), e1 = *U.find_edge("e1");
        for (int len = 1; len <= 6; ++len)
            for (int mask = 0; mask < (1 << len); ++mask) {
                Path::Storage st;
                for (int i = 0; i < len; ++i) st.push_back(mask >> i & 1 ? e1 : e0);
                Path alpha(st);
                for (std::int64_t n : {-6, -4, -2, 2, 4, 6}) {
                    PhiClosedForm r = phi_closed_form(*s, n, alpha, Bounds{});
                    ++cases;
                    if (!r.premise_met || !r.equal)
                        return fail(std::string(name) + ": phi(" + std::to_string(n) + ", " + format_path(U, alpha) +
                                    ") = " + std::to_string(r.derived) + " vs " + r.formula);
                }
            }
    }
    return {true, std::to_string(cases) + " cases match n t^|alpha|"};
}

Outcome axioms_exhaustive(const SelfSimilarSystem& sys) {
    std::vector<Element> base = enumerate_elements(sys, 2);
    if (base.size() != 294) return fail("expected 294 elements, got " + std::to_string(base.size()));
    Table t(sys);
    const std::size_t n = base.size();
    std::vector<std::size_t> ids;
    for (const auto& e : base) ids.push_back(t.id(e));
    std::vector<std::size_t> ab(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) ab[i * n + j] = t.mul(ids[i], ids[j]);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t a = ids[i], as = t.inv(a);
        if (t.mul(t.mul(a, as), a) != a) return fail("s s* s != s");
        if (t.mul(t.mul(as, a), as) != as) return fail("s* s s* != s*");
        for (std::size_t j = 0; j < n; ++j)
            if (t.inv(ab[i * n + j]) != t.mul(t.inv(ids[j]), as)) return fail("(st)* != t* s*");
    }
    // associativity on all triples, with (ab)c and a(bc) memoised per row
    std::unordered_map<std::size_t, std::vector<std::size_t>> right, left;
    auto row = [&](std::unordered_map<std::size_t, std::vector<std::size_t>>& m, std::size_t x, bool x_left) {
        auto it = m.find(x);
        if (it != m.end()) return &it->second;
        std::vector<std::size_t> v(n);
        for (std::size_t k = 0; k < n; ++k) v[k] = x_left ? t.mul(x, ids[k]) : t.mul(ids[k], x);
        return &m.emplace(x, std::move(v)).first->second;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto* abc = row(right, ab[i * n + j], true);
            for (std::size_t k = 0; k < n; ++k) {
                const auto* a_bc = row(left, ab[j * n + k], false);
                if ((*abc)[k] != (*a_bc)[i]) return fail("associativity fails");
            }
        }
    std::vector<std::size_t> idem;
    for (std::size_t i = 0; i < n; ++i)
        if (is_idempotent(sys, base[i])) idem.push_back(i);
    for (std::size_t i : idem)
        for (std::size_t j : idem) {
            if (ab[i * n + j] != ab[j * n + i]) return fail("idempotents do not commute");
            if (leq(sys, base[i], base[j]) != (ab[i * n + j] == ids[i])) return fail("leq disagrees with e f = e");
        }
    return {true, std::to_string(n) + " elements, " + std::to_string(idem.size()) + " idempotents"};
}

Outcome axioms_random(const SelfSimilarSystem& sys, std::uint64_t seed) {
    std::vector<Element> base = enumerate_elements(sys, 2, 2);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, base.size() - 1);
    for (int i = 0; i < 1000; ++i) {
        const Element &a = base[pick(rng)], &b = base[pick(rng)], &c = base[pick(rng)];
        if (multiply(sys, multiply(sys, a, b), c) != multiply(sys, a, multiply(sys, b, c)))
            return fail("associativity fails");
        Element as = invert(sys, a);
        if (multiply(sys, multiply(sys, a, as), a) != a) return fail("s s* s != s");
        if (invert(sys, multiply(sys, a, b)) != multiply(sys, invert(sys, b), as)) return fail("(st)* != t* s*");
        Element e = multiply(sys, as, a), f = multiply(sys, invert(sys, b), b);
        Element ef = multiply(sys, e, f);
        if (ef != multiply(sys, f, e)) return fail("idempotents do not commute");
        if (leq(sys, e, f) != (ef == e)) return fail("leq disagrees with e f = e");
    }
    return {true, ""};
}

Outcome c5() {
    Outcome ex = axioms_exhaustive(*example("ex5.2"));
    if (!ex.ok) return fail("Ex5.2: " + ex.detail);
    for (const char* name : {"ex5.3-trivial", "ex5.3(3,-3)", "ex5.3(2,1)", "ex5.3(0,1)"}) {
        Outcome r = axioms_random(*example(name), 53);
        if (!r.ok) return fail(std::string(name) + ": " + r.detail);
    }
    return {true, "Ex5.2 exhaustive (" + ex.detail + "); 1000 random triples on each Ex5.3 instance"};
}

Outcome c6() {
    auto s = example("ex5.2");
    const SelfSimilarSystem& sys = *s;
    const int sb = Bounds{}.state_bound;
    std::vector<Element> base = enumerate_elements(sys, 2);
    std::vector<TightFilter> filters;
    for (const Lasso& x : enumerate_path_filters(sys, sys.graph().full(), 3)) filters.push_back(TightFilter::path_type(x));

    Table t(sys);
    std::vector<std::size_t> ids;
    for (const auto& e : base) ids.push_back(t.id(e));
    std::map<std::pair<std::size_t, std::string>, std::optional<TightFilter>> cache;
    // nullopt: outside the domain of theta_s
    auto th = [&](std::size_t e, const TightFilter& f) -> std::optional<TightFilter> {
        auto key = std::make_pair(e, format_filter(sys, f));
        if (auto it = cache.find(key); it != cache.end()) return it->second;
        std::optional<TightFilter> r;
        if (!t.at(e).is_zero()) {
            try {
                r = theta_apply(sys, t.at(e), f, sb);
                if (!r) throw std::runtime_error("state_bound exceeded");
            } catch (const DomainError&) {
            }
        }
        cache.emplace(key, r);
        return r;
    };
    std::size_t compositions = 0;
    for (std::size_t si : ids)
        for (const TightFilter& f : filters) {
            auto g = th(si, f);
            if (g) {
                if (th(t.inv(si), *g) != f) return fail("theta_{s*} theta_s != id");
                if (th(t.mul(t.inv(si), si), f) != f) return fail("theta_{s*s} != id on its domain");
            }
            for (std::size_t ti : ids) {
                auto lhs = th(t.mul(ti, si), f);
                std::optional<TightFilter> rhs;
                if (g) rhs = th(ti, *g);
                if (lhs != rhs)
                    return fail("theta_{ts} != theta_t theta_s at s=" + format_element(sys, t.at(si)) +
                                " t=" + format_element(sys, t.at(ti)) + " F=" + format_filter(sys, f));
                if (lhs) ++compositions;
            }
        }
    std::size_t fixed_count = 0;
    for (std::size_t si : ids) {
        FixedPointReport rep = fixed_points(sys, t.at(si), Bounds{});
        for (const FixedPoint& p : rep.points) {
            ++fixed_count;
            if (parse_filter(sys, format_filter(sys, p.filter)) != p.filter) return fail("fixed point text round trip");
            if (th(si, p.filter) != p.filter) return fail("reported fixed point is moved");
        }
    }
    return {true, std::to_string(compositions) + " defined compositions, " + std::to_string(fixed_count) +
                      " fixed points round-trip"};
}

Outcome c7() {
    std::size_t checked = 0;
    for (const char* name : {"ex5.2", "ex5.3-trivial", "ex5.3(3,-3)", "ex5.3(2,1)", "ex5.3(0,1)"}) {
        auto s = example(name);
        const SelfSimilarSystem& sys = *s;
        Bounds b;
        b.max_path_len = 3;
        b.group_ball_radius = 3;
        for (const GCycle& c : find_g_cycles(sys, b)) {
            // x = gamma_1 gamma_2 ... with gamma_{n+1} = g_n . gamma_n
            auto lasso = cycle_infinite_path(sys, c, b);
            std::size_t period = c.gamma.length();
            if (lasso) period = std::max(period, lasso->prefix.size() + lasso->cycle.size());
            const std::size_t depth = 3 * period;
            Path::Storage x;
            Path gam = c.gamma;
            GroupElem h = c.g;
            while (x.size() < depth + c.gamma.length()) {
                x.insert(x.end(), gam.edges().begin(), gam.edges().end());
                auto [next, nh] = sys.act_with_cocycle(h, gam);
                gam = next;
                h = nh;
            }
            if (lasso)
                for (std::size_t i = 0; i < x.size(); ++i)
                    if (lasso->letter(i) != x[i]) return fail(std::string(name) + ": lasso disagrees with recursion");
            Path head(Path::Storage(x.begin(), x.begin() + depth));
            Path moved = sys.act(c.g, head);
            for (std::size_t i = 0; i < depth; ++i) {
                Edge want = i < c.gamma.length() ? c.gamma[i] : moved[i - c.gamma.length()];
                if (x[i] != want)
                    return fail(std::string(name) + ": x != gamma (g.x) for (" + sys.group().name(c.g) + ", " +
                                format_path(sys.graph(), c.gamma) + ")");
            }
            ++checked;
        }
    }
    return {true, std::to_string(checked) + " G-cycles checked to depth 3 periods"};
}

Outcome c8() {
    auto s = example("ex5.2");
    const SelfSimilarSystem& sys = *s;
    auto t0 = std::chrono::steady_clock::now();
    std::vector<Element> base = enumerate_elements(sys, 2);
    std::vector<CrossedSpan> images;
    for (const auto& a : base) {
        images.push_back(crossed_map(sys, a));
        if (crossed_map(sys, invert(sys, a)) != crossed_star(sys, images.back())) return fail("star compatibility");
    }
    for (std::size_t i = 0; i < base.size(); ++i)
        for (std::size_t j = 0; j < base.size(); ++j)
            if (crossed_map(sys, multiply(sys, base[i], base[j])) != crossed_product(sys, images[i], images[j]))
                return fail("homomorphism fails at " + format_element(sys, base[i]) + " * " +
                            format_element(sys, base[j]));
    double dt = seconds_since(t0);
    if (dt >= 10.0) return fail("took " + fixed(dt) + " s");
    return {true, std::to_string(base.size() * base.size()) + " products in " + fixed(dt) + " s"};
}

Outcome c9() {
    auto s = example("ex5.1");
    const Universe& u = s->graph().universe();
    std::mt19937_64 rng(9);
    struct Node {
        VertexSet set;
        std::function<bool(std::int64_t)> member;
    };
    std::function<Node(int)> gen = [&](int depth) -> Node {
        std::uniform_int_distribution<int> pick(0, depth > 0 ? 6 : 2);
        std::uniform_int_distribution<std::int64_t> k(-15, 15);
        switch (pick(rng)) {
            case 0: {
                auto x = k(rng);
                return {parse_set(u, "TAIL(v," + std::to_string(x) + ")"), [x](std::int64_t j) { return j > x; }};
            }
            case 1: {
                auto x = k(rng);
                return {parse_set(u, "LTAIL(v," + std::to_string(x) + ")"), [x](std::int64_t j) { return j <= x; }};
            }
            case 2: {
                auto x = k(rng), y = k(rng);
                return {parse_set(u, "FIN{v[" + std::to_string(x) + "],v[" + std::to_string(y) + "]}"),
                        [x, y](std::int64_t j) { return j == x || j == y; }};
            }
            default: {
                Node a = gen(depth - 1), b = gen(depth - 1);
                switch (pick(rng) % 3) {
                    case 0: return {a.set.unite(b.set), [a, b](std::int64_t j) { return a.member(j) || b.member(j); }};
                    case 1:
                        return {a.set.intersect(b.set), [a, b](std::int64_t j) { return a.member(j) && b.member(j); }};
                    default:
                        return {a.set.minus(b.set), [a, b](std::int64_t j) { return a.member(j) && !b.member(j); }};
                }
            }
        }
    };
    for (int t = 0; t < 10000; ++t) {
        Node n = gen(4);
        if (parse_set(u, format_set(u, n.set)) != n.set) return fail("format round trip");
        for (std::int64_t j = -20; j <= 20; ++j)
            if (n.set.contains(Vertex{0, j}) != n.member(j)) return fail("membership disagrees at " + std::to_string(j));
    }
    return {true, "10000 expressions agree on [-20,20]"};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"1 Ex5.1 minimal and effective", c1}, {"2 Ex5.2 report", c2},
        {"3 parity criterion", c3},           {"4 closed form for phi", c4},
        {"5 inverse semigroup axioms", c5},   {"6 theta action", c6},
        {"7 G-cycle fixed points", c7},       {"8 crossed-product map", c8},
        {"9 interval set expressions", c9}};
    int failed = 0;
    for (const auto& [name, fn] : criteria) {
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o = fail(std::string("exception: ") + e.what());
        }
        std::printf("%s criterion %s: %s\n", o.ok ? "PASS" : "FAIL", name, o.detail.c_str());
        std::fflush(stdout);
        if (!o.ok) ++failed;
    }
    return failed == 0 ? 0 : 1;
}
